#include "coringlab/algebra.hpp"

#include <map>
#include <mutex>

namespace coringlab {

namespace {

std::vector<Scalar> apply_matrix(const Matrix& m, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(m.rows(), Scalar(0, m.field()));
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) out[i].addmul(m(i, j), v[j]);
    }
    return out;
}

}  // namespace

FinAlgebra::FinAlgebra(Field f, std::size_t dim, Matrix mult, std::vector<Scalar> unit,
                       std::vector<std::string> labels, std::string name)
    : field_(f), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)), labels_(std::move(labels)),
      name_(std::move(name)) {
    if (mult_.rows() != dim_ || mult_.cols() != dim_ * dim_)
        throw InputError("algebra '" + name_ + "': multiplication table must be " + std::to_string(dim_) + " x " +
                         std::to_string(dim_ * dim_));
    if (unit_.size() != dim_) throw InputError("algebra '" + name_ + "': unit vector has wrong length");
    if (labels_.empty())
        for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
    for (auto& u : unit_) u += Scalar(0, f);
    for (std::size_t i = 0; i < dim_; ++i) {
        Matrix l(dim_, dim_, f), r(dim_, dim_, f);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                l(k, j) = mult_(k, i * dim_ + j);
                r(k, j) = mult_(k, j * dim_ + i);
            }
        left_.push_back(std::move(l));
        right_.push_back(std::move(r));
    }
}

std::vector<Scalar> FinAlgebra::basis_vector(std::size_t i) const {
    std::vector<Scalar> v(dim_, Scalar(0, field_));
    v[i] = Scalar(1, field_);
    return v;
}

std::vector<Scalar> FinAlgebra::product(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(dim_, Scalar(0, field_));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            Scalar c = u[i] * v[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!mult_(k, i * dim_ + j).is_zero()) out[k].addmul(c, mult_(k, i * dim_ + j));
        }
    }
    return out;
}

Report check_algebra(const FinAlgebra& a) {
    Report r{"algebra", a.name()};
    r.checked = {"associativity", "unit-left", "unit-right"};
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto ij = a.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = a.product(ij, a.basis_vector(k));
                auto rhs = a.product(a.basis_vector(i), a.basis_product(j, k));
                if (lhs != rhs) r.fail({"associativity", {i, j, k}, lhs, rhs});
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        auto l = a.product(a.unit(), a.basis_vector(i));
        if (l != a.basis_vector(i)) r.fail({"unit-left", {i}, l, a.basis_vector(i)});
        auto rr = a.product(a.basis_vector(i), a.unit());
        if (rr != a.basis_vector(i)) r.fail({"unit-right", {i}, rr, a.basis_vector(i)});
    }
    return r;
}

Report check_algebra_morphism(const AlgebraMorphism& f) {
    Report r{"algebra-morphism", f.source->name() + "->" + f.target->name()};
    r.checked = {"unit-preserved", "multiplicative"};
    if (f.matrix.rows() != f.target->dim() || f.matrix.cols() != f.source->dim()) {
        r.error("morphism matrix shape does not match source/target dimensions");
        return r;
    }
    auto fu = apply_matrix(f.matrix, f.source->unit());
    if (fu != f.target->unit()) r.fail({"unit-preserved", {}, fu, f.target->unit()});
    std::size_t n = f.source->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto lhs = apply_matrix(f.matrix, f.source->basis_product(i, j));
            auto rhs = f.target->product(f.matrix.column_vector(i), f.matrix.column_vector(j));
            if (lhs != rhs) r.fail({"multiplicative", {i, j}, lhs, rhs});
        }
    return r;
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
    if (f.target->dim() != g.source->dim()) throw InputError("cannot compose algebra morphisms: dimension mismatch");
    return {f.source, g.target, g.matrix * f.matrix};
}

AlgebraMorphism identity_morphism(const AlgebraPtr& a) { return {a, a, Matrix::identity(a->dim(), a->field())}; }

AlgebraMorphism unit_morphism(const AlgebraPtr& a) {
    Matrix m(a->dim(), 1, a->field());
    m.set_column(0, a->unit());
    return {ground_field(a->field()), a, m};
}

AlgebraPtr algebra_from_table(Field f, std::size_t dim, const std::vector<std::vector<std::vector<Scalar>>>& table,
                              std::vector<Scalar> unit, std::vector<std::string> labels, std::string name) {
    Matrix m(dim, dim * dim, f);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) m(k, i * dim + j) = table[i][j][k] + Scalar(0, f);
    return std::make_shared<FinAlgebra>(f, dim, std::move(m), std::move(unit), std::move(labels), std::move(name));
}

AlgebraPtr ground_field(Field f) {
    static std::map<std::uint32_t, AlgebraPtr> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    if (auto it = cache.find(f.p); it != cache.end()) return it->second;
    Matrix m(1, 1, f);
    m(0, 0) = Scalar(1, f);
    AlgebraPtr k = std::make_shared<FinAlgebra>(f, 1, m, std::vector<Scalar>{Scalar(1, f)},
                                                std::vector<std::string>{"1"}, f.name());
    cache.emplace(f.p, k);
    return k;
}

AlgebraPtr cyclic_group_algebra(std::size_t n, Field f) {
    Matrix m(n, n * n, f);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) m((i + j) % n, i * n + j) = Scalar(1, f);
    }
    std::vector<Scalar> unit(n, Scalar(0, f));
    unit[0] = Scalar(1, f);
    return std::make_shared<FinAlgebra>(f, n, m, unit, labels, f.name() + "[Z/" + std::to_string(n) + "]");
}

AlgebraPtr truncated_polynomial(std::size_t n, Field f, const std::string& var) {
    Matrix m(n, n * n, f);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
        for (std::size_t j = 0; i + j < n; ++j) m(i + j, i * n + j) = Scalar(1, f);
    }
    std::vector<Scalar> unit(n, Scalar(0, f));
    unit[0] = Scalar(1, f);
    return std::make_shared<FinAlgebra>(f, n, m, unit, labels,
                                        f.name() + "[" + var + "]/(" + var + "^" + std::to_string(n) + ")");
}

AlgebraPtr matrix_algebra(std::size_t n, Field f) {
    std::size_t d = n * n;
    Matrix m(d, d * d, f);
    std::vector<std::string> labels;
    std::vector<Scalar> unit(d, Scalar(0, f));
    for (std::size_t i = 0; i < n; ++i) {
        unit[i * n + i] = Scalar(1, f);
        for (std::size_t j = 0; j < n; ++j) {
            labels.push_back("E" + std::to_string(i) + std::to_string(j));
            for (std::size_t l = 0; l < n; ++l) m(i * n + l, (i * n + j) * d + (j * n + l)) = Scalar(1, f);
        }
    }
    return std::make_shared<FinAlgebra>(f, d, m, unit, labels, "M" + std::to_string(n) + "(" + f.name() + ")");
}

AlgebraPtr opposite(const AlgebraPtr& a) {
    std::size_t n = a->dim();
    Matrix m(n, n * n, a->field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, i * n + j) = a->mult()(k, j * n + i);
    return std::make_shared<FinAlgebra>(a->field(), n, m, a->unit(), a->labels(), a->name() + "^op");
}

AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    std::size_t n = a->dim(), p = b->dim(), d = n * p;
    Field f = a->field();
    Matrix m(d, d * d, f);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < p; ++s) labels.push_back(a->labels()[i] + "*" + b->labels()[s]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < p; ++s)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t t = 0; t < p; ++t)
                    for (std::size_t k = 0; k < n; ++k) {
                        const Scalar& x = a->mult()(k, i * n + j);
                        if (x.is_zero()) continue;
                        for (std::size_t u = 0; u < p; ++u) {
                            const Scalar& y = b->mult()(u, s * p + t);
                            if (!y.is_zero()) m(k * p + u, (i * p + s) * d + (j * p + t)) = x * y;
                        }
                    }
    std::vector<Scalar> unit(d, Scalar(0, f));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < p; ++s) unit[i * p + s] = a->unit()[i] * b->unit()[s];
    return std::make_shared<FinAlgebra>(f, d, m, unit, labels, a->name() + "(x)" + b->name());
}

}  // namespace coringlab
