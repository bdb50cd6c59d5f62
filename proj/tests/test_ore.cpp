#include <doctest.h>

#include "coringlab/ore.hpp"

#include <random>

using namespace coringlab;

namespace {

// B = k[x]/(x^n), sigma(x) = s x, delta from the given columns
SkewPolyData poly_data(std::size_t n, Field f, long s, Matrix delta, const std::string& name) {
    auto b = truncated_polynomial(n, f, "x");
    Matrix sig(n, n, f);
    Scalar p(1, f);
    for (std::size_t i = 0; i < n; ++i, p *= Scalar(s, f)) sig(i, i) = p;
    return {b, {b, b, sig}, delta, name};
}

Matrix d_dx(std::size_t n, Field f) {
    Matrix m(n, n, f);
    for (std::size_t i = 1; i < n; ++i) m(i - 1, i) = Scalar(static_cast<long>(i), f);
    return m;
}

std::vector<Scalar> vec(std::initializer_list<long> v, Field f = {}) {
    std::vector<Scalar> out;
    for (long x : v) out.emplace_back(x, f);
    return out;
}

// delta(b) = a b - sigma(b) a
Matrix inner_derivation(const SkewPolyData& d, const std::vector<Scalar>& a) {
    std::size_t n = d.b->dim();
    Matrix m(n, n, d.b->field());
    for (std::size_t j = 0; j < n; ++j) {
        auto l = d.b->product(a, d.b->basis_vector(j));
        auto r = d.b->product(d.sigma.matrix.column_vector(j), a);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = l[i] - r[i];
    }
    return m;
}

SkewPoly random_poly(const SkewPolyData& d, std::mt19937& rng, std::size_t degree) {
    std::uniform_int_distribution<int> coef(-2, 2);
    SkewPoly p;
    for (std::size_t n = 0; n <= degree; ++n) {
        std::vector<Scalar> v;
        bool any = false;
        for (std::size_t i = 0; i < d.b->dim(); ++i) {
            v.emplace_back(coef(rng), d.b->field());
            any = any || !v.back().is_zero();
        }
        if (any) p[n] = v;
    }
    return p;
}

}  // namespace

TEST_CASE("weyl relation from the skew multiplication") {
    auto f = Field::gf(3);
    auto d = poly_data(3, f, 1, d_dx(3, f), "weyl-gf3");
    CHECK(check_skew_data(d).ok());
    auto y = monomial(d, 0, 1), x = monomial(d, 1, 0);
    SkewPoly diff = skew_mul(d, y, x);
    auto xy = skew_mul(d, x, y);
    CHECK(diff.size() == 2);
    CHECK(diff.at(1) == xy.at(1));
    CHECK(diff.at(0) == vec({1, 0, 0}, f));

    // Y^n x = x Y^n + n Y^(n-1)
    for (std::size_t n = 1; n <= 4; ++n) {
        auto lhs = skew_mul(d, monomial(d, 0, n), x);
        SkewPoly rhs{{n, vec({0, 1, 0}, f)}};
        if (n % 3) rhs[n - 1] = vec({static_cast<long>(n % 3), 0, 0}, f);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("d/dx is not a derivation of Q[x]/(x^3)") {
    auto d = poly_data(3, {}, 1, d_dx(3, {}), "weyl-q");
    auto r = check_skew_data(d);
    CHECK(r.failed("sigma-derivation"));
    // the relation itself still holds in the skew multiplication
    auto diff = skew_mul(d, monomial(d, 0, 1), monomial(d, 1, 0));
    CHECK(diff.at(0) == vec({1, 0, 0}));
}

TEST_CASE("quantum plane twist table") {
    auto d = poly_data(3, {}, 2, Matrix(3, 3), "quantum");
    OreTwistTable t(d, 4);
    CHECK(t.entry(2, 1) == SkewPoly{{2, vec({0, 4, 0})}});
    CHECK(t.entry(3, 2) == SkewPoly{{3, vec({0, 0, 64})}});
    CHECK_THROWS_AS(t.entry(5, 0), std::out_of_range);
    for (std::size_t n = 0; n <= 4; ++n) {
        long p = 1L << n;
        CHECK(skew_mul(d, monomial(d, 0, n), monomial(d, 1, 0)) == SkewPoly{{n, vec({0, p, 0})}});
    }
    CHECK(check_ore_wreath(d, 4).ok());
    CHECK(ore_vs_wreath_product(d, 4).ok());
}

TEST_CASE("commutative case") {
    auto d = poly_data(2, {}, 1, Matrix(2, 2), "commutative");
    CHECK(check_ore_wreath(d, 5).ok());
    CHECK(ore_twist(OreTwistTable(d, 5), 0, vec({2, 3})) == SkewPoly{{0, vec({2, 3})}});
    for (std::size_t n = 0; n <= 3; ++n)
        for (std::size_t b = 0; b < 2; ++b) CHECK(OreTwistTable(d, 3).entry(n, b) == monomial(d, b, n));
}

TEST_CASE("inner sigma-derivations: table against skew multiplication") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 12; ++trial) {
        long s = trial % 2 ? -1 : 3;
        auto d = poly_data(3, {}, s, Matrix(3, 3), "inner");
        d.delta = inner_derivation(d, vec({coef(rng), coef(rng), coef(rng)}));
        REQUIRE(check_skew_data(d).ok());
        CHECK(check_ore_wreath(d, 3).ok());
        CHECK(ore_vs_wreath_product(d, 4).ok());
        // associativity of the skew multiplication
        auto p = random_poly(d, rng, 2), q = random_poly(d, rng, 2), u = random_poly(d, rng, 1);
        CHECK(skew_mul(d, skew_mul(d, p, q), u) == skew_mul(d, p, skew_mul(d, q, u)));
    }
}

TEST_CASE("a non-derivation breaks multiplicativity of the twist") {
    auto d = poly_data(2, {}, 1, Matrix::identity(2), "identity-delta");
    CHECK(check_skew_data(d).failed("sigma-derivation"));
    auto r = check_ore_wreath(d, 3);
    CHECK(r.failed("twist-algebra-multiplication"));
    CHECK_FALSE(r.failed("twist-multiplication"));
    CHECK_FALSE(r.failed("twist-unit"));
}

TEST_CASE("universal property in Mat3 over GF(3)") {
    auto f = Field::gf(3);
    auto d = poly_data(3, f, 1, d_dx(3, f), "weyl-gf3");
    auto s = matrix_algebra(3, f);
    // phi(b) = left multiplication by b, E_ij at i*3+j
    Matrix phi(9, 3, f);
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t j = 0; j < 3; ++j) {
            auto col = d.b->basis_product(b, j);
            for (std::size_t i = 0; i < 3; ++i) phi(i * 3 + j, b) = col[i];
        }
    std::vector<Scalar> z(9, Scalar(0, f));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) z[i * 3 + j] = d.delta(i, j);
    AlgebraMorphism m{d.b, s, phi};
    CHECK(check_ore_universal(d, m, z, 4).ok());

    auto bad = z;
    bad[1] += Scalar(1, f);
    auto r = check_ore_universal(d, m, bad, 4);
    CHECK(r.failed("ore-relation"));
    CHECK(r.failed("extension-multiplicative"));
}

TEST_CASE("truncated algebra and wreath when delta is zero") {
    auto d = poly_data(2, {}, -1, Matrix(2, 2), "exterior");
    auto a = truncated_ore_algebra(d, 3);
    CHECK(check_algebra(*a).ok());
    // basis b Y^i at i*2+b: Y * x = -x Y
    CHECK(a->basis_product(2, 1) == vec({0, 0, 0, -1, 0, 0}));
    CHECK(a->basis_product(2, 4) == vec({0, 0, 0, 0, 0, 0}));
    auto w = ore_truncated_wreath(d, 2);
    CHECK(check_wreath(w).ok());
    CHECK_THROWS_AS(truncated_ore_algebra(poly_data(3, Field::gf(3), 1, d_dx(3, Field::gf(3)), "w"), 2), InputError);
}

TEST_CASE("iterated Ore extension") {
    // stage 1: A = Q[z]/(z^2)[Y1; z -> -z]/(Y1^3), basis z^b Y1^i at i*2+b
    auto stage1 = poly_data(2, {}, -1, Matrix(2, 2), "stage1");
    auto a = truncated_ore_algebra(stage1, 3);
    // stage 2: sigma = id, delta = Y1-degree
    Matrix euler(6, 6);
    for (std::size_t i = 0; i < 6; ++i) euler(i, i) = Scalar(static_cast<long>(i / 2));
    SkewPolyData d{a, identity_morphism(a), euler, "stage2"};
    CHECK(check_skew_data(d).ok());
    CHECK(check_ore_wreath(d, 3).ok());
    CHECK(ore_vs_wreath_product(d, 3).ok());
    // Y2 Y1 = Y1 Y2 + Y1
    auto lhs = skew_mul(d, monomial(d, 0, 1), monomial(d, 2, 0));
    CHECK(lhs == SkewPoly{{0, vec({0, 0, 1, 0, 0, 0})}, {1, vec({0, 0, 1, 0, 0, 0})}});
    // a non-homogeneous perturbation is no longer a derivation
    d.delta(0, 2) = Scalar(1);
    CHECK(check_skew_data(d).failed("sigma-derivation"));
}

TEST_CASE("B sits in degree zero") {
    auto f = Field::gf(3);
    auto d = poly_data(3, f, 1, d_dx(3, f), "weyl-gf3");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            SkewPoly expected;
            if (i + j < 3) expected[0] = d.b->basis_product(i, j);
            CHECK(skew_mul(d, monomial(d, i, 0), monomial(d, j, 0)) == expected);
        }
    // with delta = 0 the embedding into the truncated algebra is an injective algebra morphism
    auto q = poly_data(3, {}, 2, Matrix(3, 3), "quantum");
    auto a = truncated_ore_algebra(q, 3);
    Matrix emb(a->dim(), 3);
    for (std::size_t b = 0; b < 3; ++b) emb(b, b) = Scalar(1);
    CHECK(check_algebra_morphism({q.b, a, emb}).ok());
    CHECK(rank(emb) == 3);
}
