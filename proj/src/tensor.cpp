#include "coringlab/bimodule.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace coringlab {

namespace {

std::recursive_mutex cache_mutex;

SparseVec normalize(std::vector<std::pair<std::size_t, Scalar>> v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& e : v) {
        if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
        else out.push_back(std::move(e));
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    return out;
}

Matrix dense(const std::vector<SparseVec>& cols, std::size_t rows, Field f) {
    Matrix m(rows, cols.size(), f);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, c] : cols[j]) m(i, j) = c;
    return m;
}

void accumulate(std::vector<std::pair<std::size_t, Scalar>>& acc, const Scalar& c, const SparseVec& v) {
    for (const auto& [i, x] : v) acc.emplace_back(i, c * x);
}

}  // namespace

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
                   std::vector<Matrix> right_action, std::string name)
    : left_(std::move(left)), right_(std::move(right)), dim_(dim), left_action_(std::move(left_action)),
      right_action_(std::move(right_action)), name_(std::move(name)) {
    if (left_->field() != right_->field()) throw InputError("bimodule '" + name_ + "': algebras over different fields");
    if (left_action_.size() != left_->dim() || right_action_.size() != right_->dim())
        throw InputError("bimodule '" + name_ + "': need one action matrix per algebra basis element");
    for (const auto* acts : {&left_action_, &right_action_})
        for (const auto& m : *acts)
            if (m.rows() != dim_ || m.cols() != dim_)
                throw InputError("bimodule '" + name_ + "': action matrices must be " + std::to_string(dim_) + " x " +
                                 std::to_string(dim_));
}

Report check_bimodule(const Bimodule& m) {
    Report r{"bimodule", m.name()};
    r.checked = {"left-unital", "left-associative", "right-unital", "right-associative", "actions-commute"};
    Field f = m.field();
    auto combo = [&](const AlgebraPtr& a, bool left, const std::vector<Scalar>& coeffs) {
        Matrix s(m.dim(), m.dim(), f);
        for (std::size_t i = 0; i < a->dim(); ++i)
            if (!coeffs[i].is_zero()) s = s + coeffs[i] * (left ? m.left_action(i) : m.right_action(i));
        return s;
    };
    auto report_diff = [&](const std::string& tag, std::vector<std::size_t> idx, const Matrix& lhs, const Matrix& rhs) {
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (lhs.column_vector(j) != rhs.column_vector(j)) {
                idx.push_back(j);
                r.fail({tag, idx, lhs.column_vector(j), rhs.column_vector(j)});
                return;
            }
    };
    Matrix ident = Matrix::identity(m.dim(), f);
    report_diff("left-unital", {}, combo(m.left(), true, m.left()->unit()), ident);
    report_diff("right-unital", {}, combo(m.right(), false, m.right()->unit()), ident);
    for (std::size_t i = 0; i < m.left()->dim(); ++i)
        for (std::size_t j = 0; j < m.left()->dim(); ++j)
            report_diff("left-associative", {i, j}, m.left_action(i) * m.left_action(j),
                        combo(m.left(), true, m.left()->basis_product(i, j)));
    for (std::size_t i = 0; i < m.right()->dim(); ++i)
        for (std::size_t j = 0; j < m.right()->dim(); ++j)
            report_diff("right-associative", {i, j}, m.right_action(j) * m.right_action(i),
                        combo(m.right(), false, m.right()->basis_product(i, j)));
    for (std::size_t i = 0; i < m.left()->dim(); ++i)
        for (std::size_t j = 0; j < m.right()->dim(); ++j)
            report_diff("actions-commute", {i, j}, m.left_action(i) * m.right_action(j),
                        m.right_action(j) * m.left_action(i));
    return r;
}

BimodulePtr regular(const AlgebraPtr& a) {
    static std::map<const FinAlgebra*, BimodulePtr> cache;
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(a.get());
    if (it != cache.end()) return it->second;
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        l.push_back(a->left_mul(i));
        r.push_back(a->right_mul(i));
    }
    auto m = std::make_shared<Bimodule>(a, a, a->dim(), l, r, a->name());
    cache.emplace(a.get(), m);
    return m;
}

BimodulePtr underlying(const AlgebraPtr& a) {
    AlgebraPtr k = ground_field(a->field());
    if (a == k) return regular(k);
    static std::map<const FinAlgebra*, std::pair<AlgebraPtr, BimodulePtr>> cache;   // holds a so the key stays valid
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(a.get());
    if (it != cache.end()) return it->second.second;
    auto idm = Matrix::identity(a->dim(), a->field());
    auto m = std::make_shared<Bimodule>(k, k, a->dim(), std::vector<Matrix>{idm}, std::vector<Matrix>{idm},
                                        "|" + a->name() + "|");
    cache.emplace(a.get(), std::pair{a, m});
    return m;
}

BimodulePtr restrict_bimodule(const BimodulePtr& m, const AlgebraMorphism& left, const AlgebraMorphism& right,
                              std::string name) {
    if (left.target != m->left() || right.target != m->right())
        throw InputError("restriction morphisms must land in the bimodule's algebras");
    auto pull = [&](const AlgebraMorphism& f, bool is_left) {
        std::vector<Matrix> acts;
        for (std::size_t s = 0; s < f.source->dim(); ++s) {
            Matrix a(m->dim(), m->dim(), m->field());
            for (std::size_t i = 0; i < f.target->dim(); ++i)
                if (!f.matrix(i, s).is_zero()) a = a + f.matrix(i, s) * (is_left ? m->left_action(i) : m->right_action(i));
            acts.push_back(std::move(a));
        }
        return acts;
    };
    return std::make_shared<Bimodule>(left.source, right.source, m->dim(), pull(left, true), pull(right, false),
                                      name.empty() ? m->name() : name);
}

BimodulePtr outer_bimodule(const AlgebraPtr& a, std::size_t n, const AlgebraPtr& b, std::string name) {
    Field f = a->field();
    Matrix in = Matrix::identity(n, f), ia = Matrix::identity(a->dim(), f), ib = Matrix::identity(b->dim(), f);
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a->dim(); ++i) l.push_back(kron(kron(a->left_mul(i), in), ib));
    for (std::size_t i = 0; i < b->dim(); ++i) r.push_back(kron(kron(ia, in), b->right_mul(i)));
    return std::make_shared<Bimodule>(a, b, a->dim() * n * b->dim(), l, r, std::move(name));
}

BimodulePtr vector_space(Field f, std::size_t n, std::string name) {
    AlgebraPtr k = ground_field(f);
    Matrix idm = Matrix::identity(n, f);
    return std::make_shared<Bimodule>(k, k, n, std::vector<Matrix>{idm}, std::vector<Matrix>{idm}, std::move(name));
}

std::string TensorSpace::name() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "(x)" : "") + factors_[i]->name();
    return s;
}

void TensorSpace::build() {
    const BimodulePtr& last = factors_.back();
    Field fld = last->field();
    std::size_t f = last->dim();
    for (const auto& fac : factors_) {
        if (fac->origin()) {
            const auto& sub = fac->origin()->atoms();
            atoms_.insert(atoms_.end(), sub.begin(), sub.end());
        } else {
            atoms_.push_back(fac);
        }
    }
    auto atom_lift = [&](const Tuple& ft) {
        Tuple t;
        for (std::size_t i = 0; i < ft.size(); ++i) {
            if (factors_[i]->origin()) {
                const Tuple& s = factors_[i]->origin()->lift(ft[i]);
                t.insert(t.end(), s.begin(), s.end());
            } else {
                t.push_back(ft[i]);
            }
        }
        return t;
    };

    if (factors_.size() == 1) {
        dim_ = raw_dim_ = f;
        for (std::size_t j = 0; j < f; ++j) {
            basis_raw_.push_back(j);
            proj_.push_back({{j, Scalar(1, fld)}});
        }
    } else {
        std::vector<BimodulePtr> pre(factors_.begin(), factors_.end() - 1);
        prefix_ = space(pre);
        if (prefix_->right_algebra() != last->left())
            throw InputError("cannot tensor " + prefix_->name() + " with " + last->name() + ": algebras differ");
        std::size_t p = prefix_->dim();
        raw_dim_ = prefix_->raw_dim() * f;
        const AlgebraPtr& b = last->left();
        RowReducer red(p * f);
        for (std::size_t bi = 0; bi < b->dim(); ++bi) {
            const auto& pr = prefix_->right_action(bi);
            const Matrix& la = last->left_action(bi);
            for (std::size_t r = 0; r < p; ++r)
                for (std::size_t j = 0; j < f; ++j) {
                    std::vector<std::pair<std::size_t, Scalar>> row;
                    for (const auto& [r2, c] : pr[r]) row.emplace_back(r2 * f + j, c);
                    for (std::size_t j2 = 0; j2 < f; ++j2)
                        if (!la(j2, j).is_zero()) row.emplace_back(r * f + j2, -la(j2, j));
                    SparseVec sv = normalize(std::move(row));
                    if (!sv.empty()) red.add(std::move(sv));
                }
        }
        red.finish();
        std::vector<std::size_t> index_of(p * f, 0);
        for (std::size_t c = 0; c < p * f; ++c)
            if (!red.is_pivot(c)) {
                index_of[c] = basis_raw_.size();
                basis_raw_.push_back(c);
            }
        dim_ = basis_raw_.size();
        proj_.resize(p * f);
        for (std::size_t c = 0; c < p * f; ++c) {
            if (!red.is_pivot(c)) {
                proj_[c] = {{index_of[c], Scalar(1, fld)}};
                continue;
            }
            SparseVec v;
            for (const auto& [col, x] : red.pivot_row(c))
                if (col != c) v.emplace_back(index_of[col], -x);
            proj_[c] = std::move(v);
        }
    }
    for (std::size_t q = 0; q < dim_; ++q) lift_.push_back(atom_lift(lift_factors(q)));

    const BimodulePtr& first = factors_.front();
    for (std::size_t i = 0; i < first->left()->dim(); ++i) {
        std::vector<SparseVec> cols;
        for (std::size_t q = 0; q < dim_; ++q) {
            Tuple t = lift_factors(q);
            std::vector<std::pair<std::size_t, Scalar>> acc;
            const Matrix& a = first->left_action(i);
            for (std::size_t j = 0; j < first->dim(); ++j)
                if (!a(j, t[0]).is_zero()) {
                    Tuple t2 = t;
                    t2[0] = j;
                    accumulate(acc, a(j, t[0]), project_factors(t2));
                }
            cols.push_back(normalize(std::move(acc)));
        }
        left_act_.push_back(std::move(cols));
    }
    for (std::size_t i = 0; i < last->right()->dim(); ++i) {
        std::vector<SparseVec> cols;
        for (std::size_t q = 0; q < dim_; ++q) {
            Tuple t = lift_factors(q);
            std::vector<std::pair<std::size_t, Scalar>> acc;
            const Matrix& a = last->right_action(i);
            for (std::size_t j = 0; j < f; ++j)
                if (!a(j, t.back()).is_zero()) {
                    Tuple t2 = t;
                    t2.back() = j;
                    accumulate(acc, a(j, t.back()), project_factors(t2));
                }
            cols.push_back(normalize(std::move(acc)));
        }
        right_act_.push_back(std::move(cols));
    }
}

Tuple TensorSpace::lift_factors(std::size_t q) const {
    if (!prefix_) return {q};
    std::size_t f = factors_.back()->dim();
    std::size_t raw = basis_raw_[q];
    Tuple t = prefix_->lift_factors(raw / f);
    t.push_back(raw % f);
    return t;
}

SparseVec TensorSpace::project_factors(const Tuple& t) const {
    if (!prefix_) return proj_[t[0]];
    Tuple head(t.begin(), t.end() - 1);
    SparseVec v = prefix_->project_factors(head);
    std::size_t f = factors_.back()->dim();
    if (v.size() == 1 && v[0].second.is_one()) return proj_[v[0].first * f + t.back()];
    std::vector<std::pair<std::size_t, Scalar>> acc;
    for (const auto& [r, c] : v) accumulate(acc, c, proj_[r * f + t.back()]);
    return normalize(std::move(acc));
}

SparseVec TensorSpace::project(const Tuple& atoms) const {
    if (atoms.size() != atoms_.size()) throw std::logic_error("tuple length does not match the atoms of " + name());
    if (atoms_.size() == factors_.size()) return project_factors(atoms);
    // expand composite factors, then project each combination
    std::vector<SparseVec> parts;
    std::size_t pos = 0;
    for (const auto& fac : factors_) {
        if (fac->origin()) {
            std::size_t n = fac->origin()->atoms().size();
            parts.push_back(fac->origin()->project(Tuple(atoms.begin() + pos, atoms.begin() + pos + n)));
            pos += n;
        } else {
            parts.push_back({{atoms[pos++], Scalar(1, field())}});
        }
    }
    std::vector<std::pair<std::size_t, Scalar>> acc;
    Tuple t(parts.size());
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t i, const Scalar& c) {
        if (i == parts.size()) {
            accumulate(acc, c, project_factors(t));
            return;
        }
        for (const auto& [j, x] : parts[i]) {
            t[i] = j;
            rec(i + 1, c * x);
        }
    };
    rec(0, Scalar(1, field()));
    return normalize(std::move(acc));
}

SparseVec TensorSpace::project(const Terms& terms) const {
    std::vector<std::pair<std::size_t, Scalar>> acc;
    for (const auto& [t, c] : terms)
        if (!c.is_zero()) accumulate(acc, c, project(t));
    return normalize(std::move(acc));
}

Matrix TensorSpace::left_action_matrix(std::size_t i) const { return dense(left_act_[i], dim_, field()); }
Matrix TensorSpace::right_action_matrix(std::size_t i) const { return dense(right_act_[i], dim_, field()); }

Matrix TensorSpace::projection_matrix() const {
    Matrix m(dim_, raw_dim_, field());
    std::vector<std::size_t> dims;
    for (const auto& f : factors_) dims.push_back(f->dim());
    for (std::size_t raw = 0; raw < raw_dim_; ++raw) {
        Tuple t(dims.size());
        std::size_t x = raw;
        for (std::size_t i = dims.size(); i-- > 0;) {
            t[i] = x % dims[i];
            x /= dims[i];
        }
        for (const auto& [q, c] : project_factors(t)) m(q, raw) = c;
    }
    return m;
}

Matrix TensorSpace::section_matrix() const {
    Matrix m(raw_dim_, dim_, field());
    std::vector<std::size_t> dims;
    for (const auto& f : factors_) dims.push_back(f->dim());
    for (std::size_t q = 0; q < dim_; ++q) {
        Tuple t = lift_factors(q);
        std::size_t raw = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) raw = raw * dims[i] + t[i];
        m(raw, q) = Scalar(1, field());
    }
    return m;
}

SpacePtr space(const std::vector<BimodulePtr>& factors) {
    if (factors.empty()) throw std::logic_error("a tensor space needs at least one factor");
    static std::map<std::vector<const Bimodule*>, SpacePtr> cache;
    std::vector<const Bimodule*> key;
    for (const auto& f : factors) key.push_back(f.get());
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::shared_ptr<TensorSpace> s(new TensorSpace());
    s->factors_ = factors;
    s->build();
    cache.emplace(key, s);
    return s;
}

SpacePtr space(const BimodulePtr& m) { return space(std::vector<BimodulePtr>{m}); }

SpacePtr otimes(const SpacePtr& a, const SpacePtr& b) {
    std::vector<BimodulePtr> f = a->factors();
    f.insert(f.end(), b->factors().begin(), b->factors().end());
    return space(f);
}

SpacePtr otimes(const std::vector<SpacePtr>& parts) {
    std::vector<BimodulePtr> f;
    for (const auto& p : parts) f.insert(f.end(), p->factors().begin(), p->factors().end());
    return space(f);
}

SpacePtr base_space(const AlgebraPtr& a) { return space(regular(a)); }

BimodulePtr as_bimodule(const SpacePtr& s) {
    if (s->factors().size() == 1) return s->factors()[0];
    static std::map<const TensorSpace*, BimodulePtr> cache;
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(s.get());
    if (it != cache.end()) return it->second;
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < s->left_algebra()->dim(); ++i) l.push_back(s->left_action_matrix(i));
    for (std::size_t i = 0; i < s->right_algebra()->dim(); ++i) r.push_back(s->right_action_matrix(i));
    auto m = std::make_shared<Bimodule>(s->left_algebra(), s->right_algebra(), s->dim(), l, r, "(" + s->name() + ")");
    m->origin_ = s;
    BimodulePtr res = m;
    cache.emplace(s.get(), res);
    return res;
}

bool same_atoms(const TensorSpace& a, const TensorSpace& b) { return a.atoms() == b.atoms(); }

SparseVec LinearMap::apply(const SparseVec& v) const {
    std::vector<std::pair<std::size_t, Scalar>> acc;
    for (const auto& [j, c] : v)
        for (std::size_t i = 0; i < mat.rows(); ++i)
            if (!mat(i, j).is_zero()) acc.emplace_back(i, c * mat(i, j));
    return normalize(std::move(acc));
}

LinearMap id(const SpacePtr& s) { return {s, s, Matrix::identity(s->dim(), s->field())}; }

LinearMap zero_map(const SpacePtr& dom, const SpacePtr& cod) {
    return {dom, cod, Matrix(cod->dim(), dom->dim(), dom->field())};
}

LinearMap regroup(const SpacePtr& dom, const SpacePtr& cod) {
    if (!same_atoms(*dom, *cod)) throw InputError("cannot regroup " + dom->name() + " as " + cod->name());
    if (dom == cod) return id(dom);
    return from_terms(dom, cod, [&](const Tuple& t) { return Terms{{t, Scalar(1, dom->field())}}; });
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
    if (f.cod != g.dom) {
        if (!same_atoms(*f.cod, *g.dom))
            throw InputError("cannot compose: " + f.cod->name() + " is not " + g.dom->name());
        return compose(g, compose(regroup(f.cod, g.dom), f));
    }
    return {f.dom, g.cod, g.mat * f.mat};
}

LinearMap compose(std::initializer_list<LinearMap> chain) {
    auto it = chain.end();
    LinearMap acc = *--it;
    while (it != chain.begin()) acc = compose(*--it, acc);
    return acc;
}

namespace {
void require_same(const LinearMap& a, const LinearMap& b) {
    if (a.dom != b.dom || a.cod != b.cod)
        throw InputError("maps have different domains or codomains: " + a.dom->name() + "->" + a.cod->name() + " vs " +
                         b.dom->name() + "->" + b.cod->name());
}
}  // namespace

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    require_same(a, b);
    return {a.dom, a.cod, a.mat + b.mat};
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
    require_same(a, b);
    return {a.dom, a.cod, a.mat - b.mat};
}

LinearMap operator*(const Scalar& s, const LinearMap& a) { return {a.dom, a.cod, s * a.mat}; }

bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.dom == b.dom && a.cod == b.cod && a.mat == b.mat;
}

LinearMap from_terms(const SpacePtr& dom, const SpacePtr& cod, const std::function<Terms(const Tuple&)>& fn) {
    Matrix m(cod->dim(), dom->dim(), dom->field());
    for (std::size_t q = 0; q < dom->dim(); ++q)
        for (const auto& [i, c] : cod->project(fn(dom->lift(q)))) m(i, q) = c;
    return {dom, cod, m};
}

LinearMap tensor(const std::vector<LinearMap>& maps) {
    std::vector<SpacePtr> doms, cods;
    for (const auto& f : maps) {
        doms.push_back(f.dom);
        cods.push_back(f.cod);
    }
    SpacePtr dom = otimes(doms), cod = otimes(cods);
    Field fld = dom->field();
    std::vector<bool> is_id;
    for (const auto& f : maps) is_id.push_back(f.dom == f.cod && f.mat == Matrix::identity(f.dom->dim(), fld));
    std::vector<std::map<Tuple, Terms>> memo(maps.size());
    auto image = [&](std::size_t i, const Tuple& slice) -> const Terms& {
        auto it = memo[i].find(slice);
        if (it != memo[i].end()) return it->second;
        Terms out;
        if (is_id[i]) {
            out.push_back({slice, Scalar(1, fld)});
        } else {
            for (const auto& [c, x] : maps[i].apply(maps[i].dom->project(slice))) out.push_back({maps[i].cod->lift(c), x});
        }
        return memo[i].emplace(slice, std::move(out)).first->second;
    };
    Matrix m(cod->dim(), dom->dim(), fld);
    for (std::size_t q = 0; q < dom->dim(); ++q) {
        const Tuple& t = dom->lift(q);
        std::vector<const Terms*> parts;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < maps.size(); ++i) {
            std::size_t n = maps[i].dom->atoms().size();
            parts.push_back(&image(i, Tuple(t.begin() + pos, t.begin() + pos + n)));
            pos += n;
        }
        Terms terms;
        Tuple cur;
        std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t i, const Scalar& c) {
            if (i == parts.size()) {
                terms.push_back({cur, c});
                return;
            }
            for (const auto& [s, x] : *parts[i]) {
                std::size_t keep = cur.size();
                cur.insert(cur.end(), s.begin(), s.end());
                rec(i + 1, c * x);
                cur.resize(keep);
            }
        };
        rec(0, Scalar(1, fld));
        for (const auto& [i, c] : cod->project(terms)) m(i, q) = c;
    }
    return {dom, cod, m};
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) { return tensor(std::vector<LinearMap>{f, g}); }

namespace {
std::vector<std::size_t> atom_dims(const TensorSpace& s) {
    std::vector<std::size_t> d;
    for (const auto& a : s.atoms()) d.push_back(a->dim());
    return d;
}
std::size_t encode(const Tuple& t, const std::vector<std::size_t>& dims) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) x = x * dims[i] + t[i];
    return x;
}
Tuple decode(std::size_t x, const std::vector<std::size_t>& dims) {
    Tuple t(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
        t[i] = x % dims[i];
        x /= dims[i];
    }
    return t;
}
std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t p = 1;
    for (auto d : dims) p *= d;
    return p;
}
}  // namespace

LinearMap from_matrix(const SpacePtr& dom, const SpacePtr& cod, const Matrix& raw) {
    auto dd = atom_dims(*dom), cd = atom_dims(*cod);
    if (raw.cols() != product(dd) || raw.rows() != product(cd))
        throw InputError("matrix for " + dom->name() + " -> " + cod->name() + " must be " +
                         std::to_string(product(cd)) + " x " + std::to_string(product(dd)));
    return from_terms(dom, cod, [&](const Tuple& t) {
        Terms out;
        std::size_t j = encode(t, dd);
        for (std::size_t i = 0; i < raw.rows(); ++i)
            if (!raw(i, j).is_zero()) out.push_back({decode(i, cd), raw(i, j)});
        return out;
    });
}

Matrix raw_matrix(const LinearMap& f) {
    auto dd = atom_dims(*f.dom), cd = atom_dims(*f.cod);
    Matrix raw(product(cd), product(dd), f.dom->field());
    for (std::size_t j = 0; j < raw.cols(); ++j) {
        SparseVec v = f.apply(f.dom->project(decode(j, dd)));
        for (const auto& [c, x] : v) raw(encode(f.cod->lift(c), cd), j) = x;
    }
    return raw;
}

LinearMap unit_left(const SpacePtr& s) {
    AlgebraPtr a = s->left_algebra();
    SpacePtr dom = otimes(base_space(a), s);
    const BimodulePtr& first = s->atoms().front();
    return from_terms(dom, s, [&](const Tuple& t) {
        Terms out;
        const Matrix& act = first->left_action(t[0]);
        for (std::size_t j = 0; j < first->dim(); ++j)
            if (!act(j, t[1]).is_zero()) {
                Tuple u(t.begin() + 1, t.end());
                u[0] = j;
                out.push_back({u, act(j, t[1])});
            }
        return out;
    });
}

LinearMap unit_right(const SpacePtr& s) {
    AlgebraPtr a = s->right_algebra();
    SpacePtr dom = otimes(s, base_space(a));
    const BimodulePtr& last = s->atoms().back();
    return from_terms(dom, s, [&](const Tuple& t) {
        Terms out;
        std::size_t n = t.size();
        const Matrix& act = last->right_action(t[n - 1]);
        for (std::size_t j = 0; j < last->dim(); ++j)
            if (!act(j, t[n - 2]).is_zero()) {
                Tuple u(t.begin(), t.end() - 1);
                u.back() = j;
                out.push_back({u, act(j, t[n - 2])});
            }
        return out;
    });
}

LinearMap unit_left_inv(const SpacePtr& s) {
    AlgebraPtr a = s->left_algebra();
    SpacePtr cod = otimes(base_space(a), s);
    return from_terms(s, cod, [&](const Tuple& t) {
        Terms out;
        for (std::size_t i = 0; i < a->dim(); ++i)
            if (!a->unit()[i].is_zero()) {
                Tuple u{i};
                u.insert(u.end(), t.begin(), t.end());
                out.push_back({u, a->unit()[i]});
            }
        return out;
    });
}

LinearMap unit_right_inv(const SpacePtr& s) {
    AlgebraPtr a = s->right_algebra();
    SpacePtr cod = otimes(s, base_space(a));
    return from_terms(s, cod, [&](const Tuple& t) {
        Terms out;
        for (std::size_t i = 0; i < a->dim(); ++i)
            if (!a->unit()[i].is_zero()) {
                Tuple u = t;
                u.push_back(i);
                out.push_back({u, a->unit()[i]});
            }
        return out;
    });
}

Report check_bilinear(const LinearMap& f, const std::string& tag) {
    Report r{tag, f.dom->name() + "->" + f.cod->name()};
    r.checked = {tag};
    if (f.dom->left_algebra() != f.cod->left_algebra() || f.dom->right_algebra() != f.cod->right_algebra()) {
        r.error("domain and codomain are bimodules over different algebras");
        return r;
    }
    auto side = [&](bool left) {
        const AlgebraPtr& a = left ? f.dom->left_algebra() : f.dom->right_algebra();
        for (std::size_t i = 0; i < a->dim(); ++i)
            for (std::size_t q = 0; q < f.dom->dim(); ++q) {
                const auto& dcol = left ? f.dom->left_action(i)[q] : f.dom->right_action(i)[q];
                SparseVec lhs = f.apply(dcol);
                std::vector<std::pair<std::size_t, Scalar>> acc;
                for (std::size_t c = 0; c < f.cod->dim(); ++c)
                    if (!f.mat(c, q).is_zero())
                        accumulate(acc, f.mat(c, q), left ? f.cod->left_action(i)[c] : f.cod->right_action(i)[c]);
                SparseVec rhs = normalize(std::move(acc));
                if (lhs != rhs) {
                    std::vector<Scalar> l(f.cod->dim(), Scalar(0, f.dom->field())), rr = l;
                    for (const auto& [k, x] : lhs) l[k] = x;
                    for (const auto& [k, x] : rhs) rr[k] = x;
                    r.fail({tag, f.dom->lift(q), l, rr, std::string(left ? "left" : "right") + " action by basis " +
                                                            std::to_string(i)});
                    return;
                }
            }
    };
    side(true);
    side(false);
    return r;
}

bool expect_equal(Report& r, const std::string& tag, const LinearMap& lhs, const LinearMap& rhs) {
    r.checked.push_back(tag);
    LinearMap b = rhs;
    if (lhs.dom != b.dom) b = compose(b, regroup(lhs.dom, b.dom));
    if (lhs.cod != b.cod) b = compose(regroup(b.cod, lhs.cod), b);
    for (std::size_t q = 0; q < lhs.dom->dim(); ++q) {
        auto l = lhs.column(q), rr = b.column(q);
        if (l != rr) {
            r.fail({tag, lhs.dom->lift(q), l, rr});
            return false;
        }
    }
    return true;
}

TensorQuotient tensor_over(const AlgebraPtr& a, const BimodulePtr& m, const BimodulePtr& n) {
    if (m->right() != a || n->left() != a) throw InputError("tensor_over: bimodules are not over the given algebra");
    SpacePtr s = space(std::vector<BimodulePtr>{m, n});
    return {s, m, n, a, s->dim(), s->projection_matrix(), s->section_matrix(), as_bimodule(s)};
}

LinearMap tensor_maps(const LinearMap& f, const LinearMap& g, const TensorQuotient& source_q,
                      const TensorQuotient& target_q) {
    if (f.dom != space(source_q.m) || g.dom != space(source_q.n) || f.cod != space(target_q.m) ||
        g.cod != space(target_q.n))
        throw InputError("tensor_maps: maps do not match the declared quotients");
    Field fld = f.dom->field();
    // every relation m.a (x) n - m (x) a.n of the source must die in the target
    const AlgebraPtr& a = source_q.base;
    std::size_t dm = source_q.m->dim(), dn = source_q.n->dim();
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t k = 0; k < a->dim(); ++k)
            for (std::size_t j = 0; j < dn; ++j) {
                Terms rel;
                for (std::size_t i2 = 0; i2 < dm; ++i2)
                    if (!source_q.m->right_action(k)(i2, i).is_zero())
                        for (const auto& [x, c] : f.apply({{i2, Scalar(1, fld)}}))
                            for (const auto& [y, d] : g.apply({{j, Scalar(1, fld)}}))
                                rel.push_back({{x, y}, source_q.m->right_action(k)(i2, i) * c * d});
                for (std::size_t j2 = 0; j2 < dn; ++j2)
                    if (!source_q.n->left_action(k)(j2, j).is_zero())
                        for (const auto& [x, c] : f.apply({{i, Scalar(1, fld)}}))
                            for (const auto& [y, d] : g.apply({{j2, Scalar(1, fld)}}))
                                rel.push_back({{x, y}, -(source_q.n->left_action(k)(j2, j) * c * d)});
                if (!target_q.space->project(rel).empty())
                    throw InputError("tensor_maps: induced map is not well defined on relation (" + std::to_string(i) +
                                     "*a" + std::to_string(k) + ")(x)" + std::to_string(j));
            }
    return tensor(f, g);
}

std::pair<LinearMap, LinearMap> unit_iso(bool left_side, const BimodulePtr& m) {
    SpacePtr s = space(m);
    if (left_side) return {unit_left(s), unit_left_inv(s)};
    return {unit_right(s), unit_right_inv(s)};
}

}  // namespace coringlab

namespace coringlab {

LinearMap swap_map(const SpacePtr& a, const SpacePtr& b) {
    if (a->left_algebra()->dim() != 1 || b->left_algebra()->dim() != 1 || a->right_algebra()->dim() != 1 ||
        b->right_algebra()->dim() != 1)
        throw InputError("swap is only defined over the ground field");
    std::size_t na = a->atoms().size();
    return from_terms(otimes(a, b), otimes(b, a), [&](const Tuple& t) {
        Tuple u(t.begin() + na, t.end());
        u.insert(u.end(), t.begin(), t.begin() + na);
        return Terms{{u, Scalar(1, a->field())}};
    });
}

std::vector<LinearMap> bilinear_basis(const SpacePtr& dom, const SpacePtr& cod) {
    if (dom->left_algebra() != cod->left_algebra() || dom->right_algebra() != cod->right_algebra())
        throw InputError("spaces live over different algebras");
    std::size_t n = dom->dim(), m = cod->dim();
    Field f = dom->field();
    std::vector<std::pair<Matrix, Matrix>> acts;
    for (std::size_t i = 0; i < dom->left_algebra()->dim(); ++i)
        acts.emplace_back(dom->left_action_matrix(i), cod->left_action_matrix(i));
    for (std::size_t i = 0; i < dom->right_algebra()->dim(); ++i)
        acts.emplace_back(dom->right_action_matrix(i), cod->right_action_matrix(i));
    // X L - L' X = 0 with X(r, c) at variable r * n + c
    Matrix sys(acts.size() * m * n, m * n, f);
    std::size_t row = 0;
    for (const auto& [l, l2] : acts)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row) {
                for (std::size_t k = 0; k < n; ++k)
                    if (!l(k, j).is_zero()) sys(row, i * n + k) += l(k, j);
                for (std::size_t k = 0; k < m; ++k)
                    if (!l2(i, k).is_zero()) sys(row, k * n + j) -= l2(i, k);
            }
    Matrix ker = kernel_basis(sys);
    std::vector<LinearMap> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        Matrix x(m, n, f);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) x(i, j) = ker(i * n + j, c);
        out.push_back({dom, cod, x});
    }
    return out;
}

std::vector<LinearMap> solve_in_span(const std::vector<LinearMap>& basis,
                                     const std::function<Matrix(const LinearMap&)>& defect) {
    if (basis.empty()) return {};
    std::vector<Matrix> ds;
    for (const auto& b : basis) ds.push_back(defect(b));
    std::size_t len = ds[0].rows() * ds[0].cols();
    Field f = basis[0].dom->field();
    Matrix sys(len, basis.size(), f);
    for (std::size_t k = 0; k < ds.size(); ++k)
        for (std::size_t i = 0; i < ds[k].rows(); ++i)
            for (std::size_t j = 0; j < ds[k].cols(); ++j) sys(i * ds[k].cols() + j, k) = ds[k](i, j);
    Matrix ker = kernel_basis(sys);
    std::vector<LinearMap> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        LinearMap s = zero_map(basis[0].dom, basis[0].cod);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!ker(k, c).is_zero()) s = s + ker(k, c) * basis[k];
        out.push_back(s);
    }
    return out;
}

}  // namespace coringlab

namespace coringlab {

LinearMap mult_map(const AlgebraPtr& a) {
    SpacePtr s = space(underlying(a));
    return from_terms(otimes(s, s), s, [&](const Tuple& t) {
        Terms out;
        auto v = a->basis_product(t[0], t[1]);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) out.push_back({{i}, v[i]});
        return out;
    });
}

LinearMap unit_map(const AlgebraPtr& a) {
    SpacePtr s = space(underlying(a));
    return from_terms(base_space(ground_field(a->field())), s, [&](const Tuple&) {
        Terms out;
        for (std::size_t i = 0; i < a->dim(); ++i)
            if (!a->unit()[i].is_zero()) out.push_back({{i}, a->unit()[i]});
        return out;
    });
}

}  // namespace coringlab
