#include "coringlab/ore.hpp"

namespace coringlab {

namespace {

std::vector<Scalar> act(const Matrix& m, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(m.rows(), Scalar(0, m.field()));
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero())
            for (std::size_t i = 0; i < m.rows(); ++i) out[i].addmul(m(i, j), v[j]);
    return out;
}

bool is_zero(const std::vector<Scalar>& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

void add_to(SkewPoly& p, std::size_t n, const std::vector<Scalar>& v, const Scalar& s) {
    if (is_zero(v) || s.is_zero()) return;
    auto it = p.find(n);
    if (it == p.end()) it = p.emplace(n, std::vector<Scalar>(v.size(), Scalar(0, v[0].field()))).first;
    for (std::size_t i = 0; i < v.size(); ++i) it->second[i].addmul(s, v[i]);
    if (is_zero(it->second)) p.erase(it);
}

void add_to(SkewPoly& p, const SkewPoly& q, std::size_t shift, const Scalar& s) {
    for (const auto& [n, v] : q) add_to(p, n + shift, v, s);
}

// b * q with b on the left of every coefficient
SkewPoly left_mul(const FinAlgebra& b, const std::vector<Scalar>& c, const SkewPoly& q) {
    SkewPoly out;
    for (const auto& [n, v] : q) add_to(out, n, b.product(c, v), Scalar(1, b.field()));
    return out;
}

// Y^n b computed as Y^(n-1) (sigma(b) Y + delta(b))
SkewPoly power_times(const SkewPolyData& d, std::size_t n, const std::vector<Scalar>& b) {
    SkewPoly out;
    if (is_zero(b)) return out;
    if (n == 0) {
        out[0] = b;
        return out;
    }
    Scalar one(1, d.b->field());
    add_to(out, power_times(d, n - 1, act(d.sigma.matrix, b)), 1, one);
    add_to(out, power_times(d, n - 1, act(d.delta, b)), 0, one);
    return out;
}

std::vector<Scalar> basis(const SkewPolyData& d, std::size_t i) { return d.b->basis_vector(i); }

Witness witness(const std::string& eq, std::vector<std::size_t> at, const SkewPoly& lhs, const SkewPoly& rhs) {
    auto flat = [](const SkewPoly& p) {
        std::vector<Scalar> out;
        for (const auto& [n, v] : p) {
            out.push_back(Scalar(static_cast<long>(n)));
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    };
    return {eq, std::move(at), flat(lhs), flat(rhs), "coefficients listed as degree then B coordinates"};
}

void expect(Report& r, const std::string& eq, std::vector<std::size_t> at, const SkewPoly& lhs, const SkewPoly& rhs) {
    if (std::find(r.checked.begin(), r.checked.end(), eq) == r.checked.end()) r.checked.push_back(eq);
    if (lhs == rhs || r.failed(eq)) return;
    r.fail(witness(eq, std::move(at), lhs, rhs));
}

}  // namespace

Report check_skew_data(const SkewPolyData& d) {
    Report r{"skew-data", d.name};
    std::size_t n = d.b->dim();
    if (d.sigma.source != d.b || d.sigma.target != d.b || d.delta.rows() != n || d.delta.cols() != n) {
        r.error("sigma or delta does not act on B");
        return r;
    }
    r.merge(check_algebra_morphism(d.sigma), "sigma-");
    r.checked.push_back("sigma-derivation");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto lhs = act(d.delta, d.b->basis_product(i, j));
            auto rhs = d.b->product(d.delta.column_vector(i), basis(d, j));
            auto extra = d.b->product(d.sigma.matrix.column_vector(i), d.delta.column_vector(j));
            for (std::size_t k = 0; k < n; ++k) rhs[k] += extra[k];
            if (lhs != rhs) {
                r.fail({"sigma-derivation", {i, j}, lhs, rhs});
                return r;
            }
        }
    return r;
}

SkewPoly monomial(const SkewPolyData& d, std::size_t b, std::size_t degree) { return {{degree, basis(d, b)}}; }

SkewPoly skew_mul(const SkewPolyData& d, const SkewPoly& p, const SkewPoly& q) {
    SkewPoly out;
    Scalar one(1, d.b->field());
    for (const auto& [n, a] : p)
        for (const auto& [m, b] : q) add_to(out, left_mul(*d.b, a, power_times(d, n, b)), m, one);
    return out;
}

OreTwistTable::OreTwistTable(SkewPolyData d, std::size_t max_degree) : d_(std::move(d)), n_(max_degree) {
    std::size_t dim = d_.b->dim();
    Scalar one(1, d_.b->field());
    entries_.resize(n_ + 1);
    for (std::size_t b = 0; b < dim; ++b) entries_[0].push_back(monomial(d_, b, 0));
    for (std::size_t n = 0; n < n_; ++n)
        for (std::size_t b = 0; b < dim; ++b) {
            SkewPoly next;
            for (const auto& [i, c] : entries_[n][b]) {
                add_to(next, i + 1, act(d_.sigma.matrix, c), one);
                add_to(next, i, act(d_.delta, c), one);
            }
            entries_[n + 1].push_back(std::move(next));
        }
}

const SkewPoly& OreTwistTable::entry(std::size_t n, std::size_t b) const {
    if (n > n_) throw std::out_of_range("degree " + std::to_string(n) + " exceeds the table bound");
    return entries_[n].at(b);
}

SkewPoly OreTwistTable::twist(std::size_t n, const std::vector<Scalar>& b) const {
    SkewPoly out;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) add_to(out, entry(n, i), 0, b[i]);
    return out;
}

Report check_ore_wreath(const SkewPolyData& d, std::size_t max_degree) {
    Report r{"ore-wreath", d.name};
    auto pre = check_skew_data(d);
    if (pre.status == Status::error) return pre;
    OreTwistTable t(d, max_degree);
    const FinAlgebra& b = *d.b;
    std::size_t dim = b.dim();
    Scalar one(1, b.field());
    // twist of X^n applied to every coefficient of p
    auto twist_poly = [&](std::size_t n, const SkewPoly& p) {
        SkewPoly out;
        for (const auto& [i, c] : p) add_to(out, t.twist(n, c), i, one);
        return out;
    };
    for (std::size_t bi = 0; bi < dim; ++bi) {
        expect(r, "twist-unit", {0, bi}, t.entry(0, bi), monomial(d, bi, 0));
        for (std::size_t n = 0; n <= max_degree; ++n)
            for (std::size_t m = 0; n + m <= max_degree; ++m)
                expect(r, "twist-multiplication", {n, m, bi}, t.entry(n + m, bi), twist_poly(n, t.entry(m, bi)));
    }
    for (std::size_t n = 0; n <= max_degree; ++n) {
        expect(r, "twist-algebra-unit", {n}, t.twist(n, b.unit()), SkewPoly{{n, b.unit()}});
        for (std::size_t bi = 0; bi < dim; ++bi)
            for (std::size_t bj = 0; bj < dim; ++bj) {
                SkewPoly rhs;
                for (const auto& [i, c] : t.entry(n, bi)) add_to(rhs, left_mul(b, c, t.entry(i, bj)), 0, one);
                expect(r, "twist-algebra-multiplication", {n, bi, bj}, t.twist(n, b.basis_product(bi, bj)), rhs);
            }
    }
    // wreath diagrams with eta X^n = 1 (x) X^n and mu(b (x) b' (x) X^n) = bb' (x) X^n
    for (std::size_t n = 0; n <= max_degree; ++n)
        for (std::size_t bi = 0; bi < dim; ++bi) {
            expect(r, "wreath-unit", {n, bi}, left_mul(b, basis(d, bi), SkewPoly{{n, b.unit()}}), monomial(d, bi, n));
            expect(r, "wreath-twisted-unit", {n, bi}, left_mul(b, b.unit(), t.entry(n, bi)), t.entry(n, bi));
            for (std::size_t bj = 0; bj < dim; ++bj)
                for (std::size_t bk = 0; bk < dim; ++bk) {
                    auto lhs = left_mul(b, b.basis_product(bi, bj), t.entry(n, bk));
                    auto rhs = left_mul(b, basis(d, bi), left_mul(b, basis(d, bj), t.entry(n, bk)));
                    expect(r, "wreath-associativity", {n, bi, bj, bk}, lhs, rhs);
                }
        }
    return r;
}

Report ore_vs_wreath_product(const SkewPolyData& d, std::size_t max_degree) {
    Report r{"ore-product", d.name};
    OreTwistTable t(d, max_degree);
    const FinAlgebra& b = *d.b;
    Scalar one(1, b.field());
    for (std::size_t n = 0; n <= max_degree; ++n)
        for (std::size_t m = 0; n + m <= max_degree; ++m)
            for (std::size_t bi = 0; bi < b.dim(); ++bi)
                for (std::size_t bj = 0; bj < b.dim(); ++bj) {
                    SkewPoly wreath;
                    add_to(wreath, left_mul(b, basis(d, bi), t.entry(n, bj)), m, one);
                    expect(r, "ore-product", {n, bi, m, bj}, wreath,
                           skew_mul(d, monomial(d, bi, n), monomial(d, bj, m)));
                }
    return r;
}

Report check_ore_universal(const SkewPolyData& d, const AlgebraMorphism& phi, const std::vector<Scalar>& z,
                           std::size_t max_degree) {
    Report r{"ore-universal", d.name};
    const FinAlgebra& s = *phi.target;
    if (phi.source != d.b || z.size() != s.dim()) {
        r.error("phi or Z does not match the data");
        return r;
    }
    r.merge(check_algebra_morphism(phi), "phi-");
    r.checked.push_back("ore-relation");
    auto img = [&](const std::vector<Scalar>& v) { return act(phi.matrix, v); };
    for (std::size_t bi = 0; bi < d.b->dim(); ++bi) {
        auto lhs = s.product(z, phi.matrix.column_vector(bi));
        auto rhs = s.product(img(d.sigma.matrix.column_vector(bi)), z);
        auto dl = img(d.delta.column_vector(bi));
        for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += dl[k];
        if (lhs != rhs) r.fail({"ore-relation", {bi}, lhs, rhs});
    }
    std::vector<std::vector<Scalar>> zp{s.unit()};
    for (std::size_t n = 1; n <= max_degree; ++n) zp.push_back(s.product(zp.back(), z));
    auto extend = [&](const SkewPoly& p) {
        std::vector<Scalar> out(s.dim(), Scalar(0, s.field()));
        for (const auto& [n, c] : p) {
            auto v = s.product(img(c), zp[n]);
            for (std::size_t k = 0; k < v.size(); ++k) out[k] += v[k];
        }
        return out;
    };
    r.checked.push_back("extension-multiplicative");
    for (std::size_t n = 0; n <= max_degree; ++n)
        for (std::size_t m = 0; n + m <= max_degree; ++m)
            for (std::size_t bi = 0; bi < d.b->dim(); ++bi)
                for (std::size_t bj = 0; bj < d.b->dim(); ++bj) {
                    auto p = monomial(d, bi, n), q = monomial(d, bj, m);
                    auto lhs = extend(skew_mul(d, p, q));
                    auto rhs = s.product(extend(p), extend(q));
                    if (lhs != rhs && !r.failed("extension-multiplicative"))
                        r.fail({"extension-multiplicative", {n, bi, m, bj}, lhs, rhs});
                }
    return r;
}

AlgebraPtr truncated_ore_algebra(const SkewPolyData& d, std::size_t k) {
    if (!d.delta.is_zero()) throw InputError("truncation needs delta = 0");
    const FinAlgebra& b = *d.b;
    std::size_t n = b.dim(), dim = n * k;
    Field f = b.field();
    Matrix m(dim, dim * dim, f);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t bi = 0; bi < n; ++bi) labels.push_back(b.labels()[bi] + "Y^" + std::to_string(i));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t bi = 0; bi < n; ++bi)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t bj = 0; bj < n; ++bj)
                    for (const auto& [deg, c] : skew_mul(d, monomial(d, bi, i), monomial(d, bj, j)))
                        if (deg < k)
                            for (std::size_t q = 0; q < n; ++q) m(deg * n + q, (i * n + bi) * dim + j * n + bj) = c[q];
    std::vector<Scalar> unit(dim, Scalar(0, f));
    for (std::size_t q = 0; q < n; ++q) unit[q] = b.unit()[q];
    return std::make_shared<const FinAlgebra>(f, dim, m, unit, labels,
                                              b.name() + "[Y]/(Y^" + std::to_string(k) + ")");
}

Wreath ore_truncated_wreath(const SkewPolyData& d, std::size_t max_degree) {
    if (!d.delta.is_zero()) throw InputError("the truncated wreath needs delta = 0");
    auto r = over_field(d.b);
    auto t = over_field(truncated_polynomial(max_degree + 1, d.b->field(), "X"));
    OreTwistTable table(d, max_degree);
    auto twist = from_terms(otimes(t->carrier, r->carrier), otimes(r->carrier, t->carrier), [&](const Tuple& u) {
        Terms out;
        for (const auto& [i, c] : table.entry(u[0], u[1]))
            for (std::size_t q = 0; q < c.size(); ++q)
                if (!c[q].is_zero()) out.push_back({Tuple{q, i}, c[q]});
        return out;
    });
    return ttp_wreath(r, t, twist);
}

}  // namespace coringlab
