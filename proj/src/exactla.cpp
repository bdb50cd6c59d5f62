#include "coringlab/exactla.hpp"

#include <algorithm>
#include <sstream>

namespace coringlab {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::gf(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not a prime below 2^31");
    return Field{p};
}

std::string Field::name() const { return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")"; }

namespace {

std::uint64_t mod_of(const mpz_class& z, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("division by zero in " + Field{p}.name());
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

}  // namespace

Scalar::Scalar(long v) : q_(v) {}

Scalar::Scalar(long v, Field f) : p_(f.p) {
    if (p_) {
        long m = v % static_cast<long>(p_);
        r_ = static_cast<std::uint64_t>(m < 0 ? m + p_ : m);
    } else {
        q_ = v;
    }
}

Scalar::Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Scalar Scalar::parse(const std::string& text, Field f) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw InputError("bad scalar '" + text + "'");
    q.canonicalize();
    Scalar s(q);
    if (f.p) {
        s.adopt(Scalar(0, f));
    }
    return s;
}

void Scalar::adopt(const Scalar& o) {
    if (p_ == o.p_) return;
    if (p_ == 0) {
        std::uint64_t num = mod_of(q_.get_num(), o.p_);
        std::uint64_t den = mod_of(q_.get_den(), o.p_);
        r_ = num * inv_mod(den, o.p_) % o.p_;
        p_ = o.p_;
        q_ = 0;
        return;
    }
    if (o.p_ != 0) throw std::domain_error("mixing scalars of " + Field{p_}.name() + " and " + Field{o.p_}.name());
}

std::string Scalar::str() const {
    if (p_) return std::to_string(r_);
    return q_.get_str();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.p_ != p_) {
        if (p_ == 0) adopt(o);
        else { Scalar t = o; t.adopt(*this); return *this += t; }
    }
    if (p_) r_ = (r_ + o.r_) % p_;
    else q_ += o.q_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (o.p_ != p_) {
        if (p_ == 0) adopt(o);
        else { Scalar t = o; t.adopt(*this); return *this *= t; }
    }
    if (p_) r_ = r_ * o.r_ % p_;
    else q_ *= o.q_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::addmul(const Scalar& a, const Scalar& b) {
    if (p_ == 0 && a.p_ == 0 && b.p_ == 0) {
        mpq_class t;
        mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
        mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
        return;
    }
    *this += a * b;
}

void Scalar::submul(const Scalar& a, const Scalar& b) {
    if (p_ == 0 && a.p_ == 0 && b.p_ == 0) {
        mpq_class t;
        mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
        mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
        return;
    }
    *this -= a * b;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_) s.r_ = (p_ - r_) % p_;
    else s.q_ = -q_;
    return s;
}

Scalar Scalar::inverse() const {
    Scalar s = *this;
    if (p_) {
        s.r_ = inv_mod(r_, p_);
    } else {
        if (sgn(q_) == 0) throw std::domain_error("division by zero in Q");
        s.q_ = 1 / q_;
    }
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) {
        if (a.p_ == 0) { Scalar t = a; t.adopt(b); return t == b; }
        if (b.p_ == 0) { Scalar t = b; t.adopt(a); return a == t; }
        return false;
    }
    return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar(0, f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1, f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Field f) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw InputError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j] + Scalar(0, f);
    }
    return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows, Field f) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw InputError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(rows[i][j], f);
    }
    return m;
}

Matrix Matrix::column(std::size_t j) const {
    Matrix c(rows_, 1, field_);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
}

std::vector<Scalar> Matrix::column_vector(std::size_t j) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

void Matrix::set_column(std::size_t j, const std::vector<Scalar>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool Matrix::column_is_zero(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) c(i, j).addmul(x, y);
            }
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s) k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
        }
    return k;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    std::size_t rows = blocks[0].rows(), cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
        cols += b.cols();
    }
    Matrix m(rows, cols, blocks[0].field());
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
        off += b.cols();
    }
    return m;
}

RrefResult rref(const Matrix& m) {
    RrefResult res{m, {}};
    Matrix& a = res.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
        Scalar inv = a(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            Scalar f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(i, j).submul(f, a(row, j));
        }
        res.pivots.push_back(col);
        ++row;
    }
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : r.pivots) is_piv[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_piv[j]) free.push_back(j);
    Matrix k(m.cols(), free.size(), m.field());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = Scalar(1, m.field());
        for (std::size_t i = 0; i < r.pivots.size(); ++i) k(r.pivots[i], f) = -r.reduced(i, free[f]);
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
    if (rhs.rows() != m.rows()) throw std::invalid_argument("solve: rhs rows differ from matrix rows");
    Matrix aug = hstack({m, rhs});
    if (m.cols() == 0 && rhs.cols() == 0) aug = Matrix(m.rows(), 0, m.field());
    RrefResult r = rref(aug);
    for (auto p : r.pivots)
        if (p >= m.cols()) return std::nullopt;
    Matrix x(m.cols(), rhs.cols(), m.field());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, m.cols() + j);
    return x;
}

void sparse_axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
    if (a.is_zero() || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            Scalar s = std::move(y[i].second);
            s.addmul(a, x[j].second);
            if (!s.is_zero()) out.emplace_back(x[j].first, std::move(s));
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

void RowReducer::reduce(SparseVec& v) const {
    std::size_t k = 0;
    while (k < v.size()) {
        std::size_t c = v[k].first;
        if (row_of_[c] == npos) {
            ++k;
            continue;
        }
        Scalar f = -v[k].second;
        sparse_axpy(v, f, rows_[row_of_[c]]);
        // entries before position k are untouched by rows whose leading column is c
    }
}

void RowReducer::add(SparseVec row) {
    reduce(row);
    if (row.empty()) return;
    Scalar inv = row.front().second.inverse();
    for (auto& e : row) e.second *= inv;
    row_of_[row.front().first] = rows_.size();
    rows_.push_back(std::move(row));
}

void RowReducer::finish() {
    std::vector<std::size_t> piv = pivots();
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
        SparseVec& r = rows_[row_of_[*it]];
        std::size_t k = 1;
        while (k < r.size()) {
            std::size_t c = r[k].first;
            if (row_of_[c] == npos) {
                ++k;
                continue;
            }
            Scalar f = -r[k].second;
            sparse_axpy(r, f, rows_[row_of_[c]]);
        }
    }
}

std::vector<std::size_t> RowReducer::pivots() const {
    std::vector<std::size_t> p;
    for (std::size_t c = 0; c < cols_; ++c)
        if (row_of_[c] != npos) p.push_back(c);
    return p;
}

}  // namespace coringlab
