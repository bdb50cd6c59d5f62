#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coringlab {

// p == 0 means the rationals, otherwise GF(p) with p prime and p < 2^31.
struct Field {
    std::uint32_t p = 0;

    static Field rationals() { return Field{0}; }
    static Field gf(std::uint32_t p);

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;
    std::string name() const;
};

bool is_prime(std::uint64_t n);

class Scalar {
public:
    Scalar() = default;
    Scalar(long v);                         // field-agnostic integer constant
    Scalar(long v, Field f);
    explicit Scalar(const mpq_class& q);    // rational
    static Scalar parse(const std::string& text, Field f);

    Field field() const { return Field{p_}; }
    bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
    bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }
    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }
    std::string str() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    // this += a*b without temporaries on the rational path
    void addmul(const Scalar& a, const Scalar& b);
    void submul(const Scalar& a, const Scalar& b);

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    void adopt(const Scalar& o);

    mpq_class q_;
    std::uint64_t r_ = 0;
    std::uint32_t p_ = 0;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field f = {});

    static Matrix identity(std::size_t n, Field f = {});
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, Field f = {});
    static Matrix from_ints(const std::vector<std::vector<long>>& rows, Field f = {});

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix column(std::size_t j) const;
    std::vector<Scalar> column_vector(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Scalar>& v);
    bool column_is_zero(std::size_t j) const;
    bool is_zero() const;
    Matrix transpose() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& blocks);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix kernel_basis(const Matrix& m);
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

// Sparse vectors: (index, value) pairs sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

void sparse_axpy(SparseVec& y, const Scalar& a, const SparseVec& x);  // y += a*x

// Incremental row space of sparse rows; finish() brings it to reduced echelon form.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols), row_of_(cols, npos) {}

    void add(SparseVec row);
    void finish();

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(std::size_t c) const { return row_of_[c] != npos; }
    // fully reduced row with leading entry 1 at column c (valid after finish)
    const SparseVec& pivot_row(std::size_t c) const { return rows_[row_of_[c]]; }
    std::vector<std::size_t> pivots() const;

    // reduce v against the current rows (v ends with no entries on pivot columns)
    void reduce(SparseVec& v) const;

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t cols_;
    std::vector<std::size_t> row_of_;
    std::vector<SparseVec> rows_;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace coringlab
