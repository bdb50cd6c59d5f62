#include <doctest.h>

#include "coringlab/cowreath.hpp"

#include <random>

using namespace coringlab;

namespace {

LinearMap combine(const std::vector<LinearMap>& basis, std::mt19937& rng, const LinearMap& start) {
    std::uniform_int_distribution<int> coef(-2, 2);
    LinearMap out = start;
    for (const auto& b : basis) out = out + Scalar(coef(rng)) * b;
    return out;
}

DoiKoppinenData self_data(const AlgebraPtr& h) {
    auto b = group_bialgebra(h);
    return {b, h, b.coalgebra->comult, b.coalgebra, mult_map(h)};
}

}  // namespace

TEST_CASE("unit and flip cowreaths") {
    auto c = primitive_coalgebra();
    auto u = unit_cowreath(c);
    CHECK(check_cowreath(u).ok());
    CHECK(check_cowreath_abstract(u).ok());
    auto w = flip_cowreath(c, group_coalgebra(2));
    CHECK(check_cowreath(w).ok());
    CHECK(check_cowreath_abstract(w).ok());
    auto w2 = flip_cowreath(group_coalgebra(2), primitive_coalgebra());
    CHECK(check_cowreath(w2).ok());

    auto canon = trivial_coring(truncated_polynomial(2));
    CHECK(check_cowreath(unit_cowreath(canon)).ok());
}

TEST_CASE("product of the flip cowreath is the tensor coalgebra") {
    auto c = primitive_coalgebra(), d = group_coalgebra(2);
    auto w = flip_cowreath(c, d);
    auto p = cowreath_product(w);
    CHECK(check_cowreath_product(w, p).ok());
    // oracle: Delta(c (x) d) = c1 (x) d1 (x) c2 (x) d2 on raw coordinates
    Matrix dc = raw_matrix(c->comult), dd = raw_matrix(d->comult);
    std::size_t nc = 2, nd = 2;
    Matrix hand(nc * nd * nc * nd, nc * nd);
    for (std::size_t x = 0; x < nc; ++x)
        for (std::size_t y = 0; y < nd; ++y)
            for (std::size_t c1 = 0; c1 < nc; ++c1)
                for (std::size_t c2 = 0; c2 < nc; ++c2)
                    for (std::size_t d1 = 0; d1 < nd; ++d1)
                        for (std::size_t d2 = 0; d2 < nd; ++d2)
                            hand(((c1 * nd + d1) * nc + c2) * nd + d2, x * nd + y) +=
                                dc(c1 * nc + c2, x) * dd(d1 * nd + d2, y);
    CHECK(raw_matrix(p->comult) == hand);
    Matrix ec = raw_matrix(c->counit), ed = raw_matrix(d->counit);
    for (std::size_t x = 0; x < nc; ++x)
        for (std::size_t y = 0; y < nd; ++y) CHECK(raw_matrix(p->counit)(0, x * nd + y) == ec(0, x) * ed(0, y));
}

TEST_CASE("broken cowreaths") {
    auto c = primitive_coalgebra(), d = group_coalgebra(2);
    auto w = flip_cowreath(c, d);
    auto bad = w;
    bad.xi = Scalar(2) * w.xi;
    auto r = check_cowreath(bad);
    CHECK(r.failed("cowreath-counit"));
    CHECK(!r.failed("cowreath-coassociativity"));
    CHECK(!check_cowreath_abstract(bad).ok());
    auto bad2 = w;
    bad2.delta = zero_map(w.delta.dom, w.delta.cod);
    CHECK(check_cowreath(bad2).failed("cowreath-counit"));
    CHECK(check_cowreath(bad2).failed("cowreath-twist"));
}

TEST_CASE("concrete and abstract cowreath checks agree") {
    std::mt19937 rng(11);
    for (auto [c, d] : {std::pair{primitive_coalgebra(), group_coalgebra(2)},
                        std::pair{group_coalgebra(2), primitive_coalgebra()}}) {
        auto w = flip_cowreath(c, d);
        auto unit = r_identity_object(c);
        auto xis = bicolinear_basis(r_object_bicomodule(w.obj), r_object_bicomodule(unit));
        auto deltas = bicolinear_basis(r_object_bicomodule(w.obj),
                                       r_object_bicomodule(r_tensor_objects(w.obj, w.obj)));
        REQUIRE(!xis.empty());
        REQUIRE(!deltas.empty());
        for (int trial = 0; trial < 30; ++trial) {
            auto v = w;
            std::uniform_int_distribution<int> mode(0, 2);
            int m = mode(rng);
            if (m != 1)
                v.xi = compose(unit_right(c->carrier),
                               combine(xis, rng, zero_map(w.xi.dom, otimes(c->carrier, unit.carrier))));
            if (m != 2) v.delta = combine(deltas, rng, zero_map(w.delta.dom, w.delta.cod));
            auto concrete = check_cowreath(v), abstract = check_cowreath_abstract(v);
            CHECK(concrete.status != Status::error);
            CHECK(concrete.ok() == abstract.ok());
        }
        CHECK(check_cowreath(w).ok() == check_cowreath_abstract(w).ok());
    }
}

TEST_CASE("mixed distributive laws") {
    auto c = primitive_coalgebra(), d = group_coalgebra(3);
    auto flip = swap_map(c->carrier, d->carrier);
    auto r = check_mixed_distributive(c, d, flip);
    CHECK(r.ok());
    CHECK(r.checked.size() >= 4);
    auto both = distributive_cowreaths(c, d, flip);
    CHECK(check_cowreath(both.right).ok());
    CHECK(check_l_cowreath(both.left).ok());

    auto zero = zero_map(flip.dom, flip.cod);
    auto rz = check_mixed_distributive(c, d, zero);
    CHECK(rz.failed("CD-1"));
    CHECK(rz.failed("CD-3"));
    CHECK(!rz.failed("CD-2"));
    CHECK(!rz.failed("CD-4"));
    CHECK_THROWS_AS(distributive_cowreaths(c, d, zero), InputError);

    // a flip scaled on g (x) x keeps the counit laws and breaks both comultiplication laws
    auto scaled = from_terms(flip.dom, flip.cod, [](const Tuple& t) {
        return Terms{{{t[1], t[0]}, Scalar(t[0] == 1 && t[1] == 1 ? 2 : 1)}};
    });
    auto rs = check_mixed_distributive(c, d, scaled);
    CHECK(!rs.failed("CD-1"));
    CHECK(rs.failed("CD-4"));
}

TEST_CASE("lifting a cowreath along an entwining") {
    auto h = cyclic_group_algebra(2);
    auto e = doi_koppinen_entwining(self_data(h));
    auto ec = entwined_coring(e);
    auto w = flip_cowreath(e.coalgebra, primitive_coalgebra());
    auto lw = lift_cowreath(e, ec, w);
    CHECK(check_cowreath(lw).ok());
    CHECK(check_cowreath_abstract(lw).ok());
    auto p = cowreath_product(lw);
    CHECK(check_cowreath_product(lw, p).ok());

    auto ef = flip_entwining(truncated_polynomial(2), group_coalgebra(2));
    auto lf = lift_cowreath(ef, entwined_coring(ef), flip_cowreath(ef.coalgebra, group_coalgebra(2)));
    CHECK(check_cowreath(lf).ok());
}

TEST_CASE("cow-comodules") {
    auto c = primitive_coalgebra(), d = group_coalgebra(2);
    auto w = flip_cowreath(c, d);
    auto rr = regular_cow_comodule(w, Side::right), rl = regular_cow_comodule(w, Side::left);
    CHECK(check_cow_comodule(rr).ok());
    CHECK(check_cow_comodule(rl).ok());
    auto sq = square_cow_comodule(w);
    CHECK(check_cow_comodule(sq).ok());
    auto bad = rr;
    bad.coaction = Scalar(3) * rr.coaction;
    CHECK(check_cow_comodule(bad).failed("comodule-counit"));

    auto i = id(otimes(c->carrier, d->carrier));
    CHECK(check_cow_comodule_morphism(i, rr, rr).ok());
    CHECK(check_cow_comodule_morphism(i, rl, rl).ok());
    CHECK(check_cow_comodule_morphism(Scalar(5) * i, rr, rr).ok());
}

TEST_CASE("induced comodules and the xi adjunction") {
    std::mt19937 rng(5);
    auto check_case = [&](const Cowreath& w) {
        auto p = cowreath_product(w);
        auto x = regular_comodule(w.obj.coring, Side::right);
        auto xm = tensor_with_m(w, p, x);
        CHECK(check_comodule(xm).ok());
        auto y = regular_comodule(p, Side::right);
        auto yx = restrict_along_xi(w, y);
        CHECK(check_comodule(yx).ok());
        auto fs = colinear_basis(yx, x);
        REQUIRE(!fs.empty());
        for (int t = 0; t < 5; ++t) {
            auto f = combine(fs, rng, zero_map(y.carrier, x.carrier));
            auto g = adjunct_of(w, x, y, f);
            CHECK(is_colinear(g, y, xm).ok());
            CHECK(adjunct_back(w, x, y, g) == f);
        }
        auto gs = colinear_basis(y, xm);
        REQUIRE(!gs.empty());
        for (int t = 0; t < 5; ++t) {
            auto g = combine(gs, rng, zero_map(y.carrier, xm.carrier));
            auto f = adjunct_back(w, x, y, g);
            CHECK(is_colinear(f, yx, x).ok());
            CHECK(adjunct_of(w, x, y, f) == g);
        }
        CHECK(check_comodule(comodule_of_cow(p, regular_cow_comodule(w, Side::right))).ok());
        CHECK(check_comodule(comodule_of_cow(p, square_cow_comodule(w))).ok());
        CHECK(check_comodule(restrict_along_xi(w, comodule_of_cow(p, regular_cow_comodule(w, Side::right)))).ok());
    };
    check_case(flip_cowreath(primitive_coalgebra(), group_coalgebra(2)));
    auto h = cyclic_group_algebra(2);
    auto e = doi_koppinen_entwining(self_data(h));
    check_case(lift_cowreath(e, entwined_coring(e), flip_cowreath(e.coalgebra, primitive_coalgebra())));
}

TEST_CASE("R objects and comodules") {
    std::mt19937 rng(9);
    auto check_case = [&](const RObject& y, const Comodule& z) {
        auto wy = comodule_of_r_object(y);
        CHECK(check_comodule(wy).ok());
        auto vz = r_object_of_comodule(z);
        CHECK(check_r_object(vz).ok());
        auto gs = colinear_basis(wy, z);
        REQUIRE(!gs.empty());
        for (int t = 0; t < 5; ++t) {
            auto g = combine(gs, rng, zero_map(wy.carrier, z.carrier));
            auto f = r_adjunct_of(y, z, g);
            CHECK(check_r_morphism({y, vz, f}).ok());
            CHECK(r_adjunct_back(y, z, f) == g);
        }
        auto fs = bicolinear_basis(r_object_bicomodule(y), r_object_bicomodule(vz));
        REQUIRE(!fs.empty());
        for (int t = 0; t < 5; ++t) {
            auto f = combine(fs, rng, zero_map(otimes(y.coring->carrier, y.carrier), otimes(z.coring->carrier, z.carrier)));
            auto g = r_adjunct_back(y, z, f);
            CHECK(is_colinear(g, wy, z).ok());
            CHECK(r_adjunct_of(y, z, g) == f);
        }
    };
    auto c = primitive_coalgebra();
    check_case(flip_cowreath(c, group_coalgebra(2)).obj, regular_comodule(c, Side::right));
    auto h = cyclic_group_algebra(2);
    auto e = doi_koppinen_entwining(self_data(h));
    auto ec = entwined_coring(e);
    check_case(lift_r_object(e, ec, flip_cowreath(e.coalgebra, primitive_coalgebra()).obj),
               regular_comodule(ec, Side::right));
}
