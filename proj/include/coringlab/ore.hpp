#pragma once

#include "coringlab/wreath.hpp"

#include <map>

namespace coringlab {

struct SkewPolyData {
    AlgebraPtr b;
    AlgebraMorphism sigma;   // B -> B
    Matrix delta;            // left sigma-derivation B -> B
    std::string name;
};

Report check_skew_data(const SkewPolyData& d);

// sum of b_n Y^n, coefficients written on the basis of B; no zero coefficients stored
using SkewPoly = std::map<std::size_t, std::vector<Scalar>>;

SkewPoly monomial(const SkewPolyData& d, std::size_t basis, std::size_t degree);
SkewPoly skew_mul(const SkewPolyData& d, const SkewPoly& p, const SkewPoly& q);

class OreTwistTable {
public:
    OreTwistTable(SkewPolyData d, std::size_t max_degree);

    const SkewPolyData& data() const { return d_; }
    std::size_t max_degree() const { return n_; }
    // b(X^n (x) e_b) as sum of b_i (x) X^i
    const SkewPoly& entry(std::size_t n, std::size_t basis) const;
    SkewPoly twist(std::size_t n, const std::vector<Scalar>& b) const;

private:
    SkewPolyData d_;
    std::size_t n_;
    std::vector<std::vector<SkewPoly>> entries_;
};

inline SkewPoly ore_twist(const OreTwistTable& t, std::size_t n, const std::vector<Scalar>& b) { return t.twist(n, b); }

// wreath laws on every monomial of X-degree at most n
Report check_ore_wreath(const SkewPolyData& d, std::size_t max_degree);
// the wreath product against skew_mul for n + m <= max_degree
Report ore_vs_wreath_product(const SkewPolyData& d, std::size_t max_degree);
// b X^n -> phi(b) Z^n is multiplicative up to the bound
Report check_ore_universal(const SkewPolyData& d, const AlgebraMorphism& phi, const std::vector<Scalar>& z,
                           std::size_t max_degree);

// B[Y; sigma, 0] / (Y^k), basis b Y^i at i * dim B + b
AlgebraPtr truncated_ore_algebra(const SkewPolyData& d, std::size_t k);
// the same data as a wreath over k[X]/(X^(n+1)), only for delta = 0
Wreath ore_truncated_wreath(const SkewPolyData& d, std::size_t max_degree);

}  // namespace coringlab
