#include <doctest.h>

#include "coringlab/coring.hpp"

using namespace coringlab;

namespace {

// hand-written Delta for span{g, x}: columns g, x; rows g.g, g.x, x.g, x.x
Matrix primitive_delta_by_hand() { return Matrix::from_ints({{1, 0}, {0, 1}, {0, 1}, {0, 0}}); }

}  // namespace

TEST_CASE("stock corings pass") {
    auto z2 = cyclic_group_algebra(2);
    CHECK(check_coring(*trivial_coring(z2)).ok());
    CHECK(check_coring(*trivial_coring(matrix_algebra(2))).ok());
    CHECK(check_coring(*group_coalgebra(2)).ok());
    CHECK(check_coring(*group_coalgebra(3, Field::gf(5))).ok());
    auto p = primitive_coalgebra();
    CHECK(check_coring(*p).ok());
    CHECK(raw_matrix(p->comult) == primitive_delta_by_hand());
}

TEST_CASE("broken counit") {
    auto c = group_coalgebra(2);
    auto k = ground_field();
    auto eps = from_matrix(c->carrier, base_space(k), Matrix::from_ints({{1, 0}}));   // eps(g) = 0
    auto bad = make_coring(k, c->carrier, c->comult, eps, "broken");
    auto r = check_coring(*bad);
    CHECK(r.failed("counit-left"));
    CHECK(r.failed("counit-right"));
    CHECK_FALSE(r.failed("coassociativity"));
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.witnesses[0].basis == std::vector<std::size_t>{1});
}

TEST_CASE("broken comultiplication") {
    auto c = primitive_coalgebra();
    // Delta(x) = x (x) x + g (x) x is not coassociative
    auto d = from_matrix(c->carrier, c->comult.cod, Matrix::from_ints({{1, 0}, {0, 1}, {0, 0}, {0, 1}}));
    auto r = check_coring(*make_coring(c->base, c->carrier, d, c->counit, "bad"));
    CHECK(r.failed("coassociativity"));
}

TEST_CASE("comodules and colinear maps") {
    auto c = group_coalgebra(2);
    auto reg = regular_comodule(c, Side::right);
    CHECK(check_comodule(reg).ok());
    CHECK(check_comodule(regular_comodule(c, Side::left)).ok());
    CHECK(check_bicomodule(regular_bicomodule(c)).ok());
    CHECK(is_colinear(id(c->carrier), reg, reg).ok());
    LinearMap swap{c->carrier, c->carrier, Matrix::from_ints({{0, 1}, {1, 0}})};
    auto r = is_colinear(swap, reg, reg);
    CHECK(r.failed("colinear"));
    CHECK_FALSE(r.witnesses.empty());
    // projection onto the first grouplike is colinear
    LinearMap proj{c->carrier, c->carrier, Matrix::from_ints({{1, 0}, {0, 0}})};
    CHECK(is_colinear(proj, reg, reg).ok());
    Comodule zero{Side::left, c, c->carrier, zero_map(c->carrier, otimes(c->carrier, c->carrier)), "zero"};
    CHECK(check_comodule(zero).failed("coaction-counit"));
}

TEST_CASE("coring morphisms") {
    auto z2 = cyclic_group_algebra(2);
    auto t = trivial_coring(z2);
    CHECK(check_coring_morphism(id(t->carrier), *t, *t).ok());
    auto c = group_coalgebra(2);
    auto k = trivial_coring(ground_field());
    CHECK(check_coring_morphism(c->counit, *c, *k).ok());
    auto p = primitive_coalgebra();
    CHECK(check_coring_morphism(p->counit, *p, *k).ok());
    LinearMap sw{c->carrier, c->carrier, Matrix::from_ints({{0, 1}, {1, 0}})};
    CHECK(check_coring_morphism(sw, *c, *c).ok());
    LinearMap twice{c->carrier, c->carrier, Matrix::from_ints({{2, 0}, {0, 2}})};
    auto r = check_coring_morphism(twice, *c, *c);
    CHECK(r.failed("morphism-counit"));
    CHECK(r.failed("morphism-comultiplication"));
}
