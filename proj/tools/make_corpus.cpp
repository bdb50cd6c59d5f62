// Writes the example corpus into the directory given as the only argument.
#include "coringlab/session.hpp"

#include <iostream>

using namespace coringlab;

namespace {

std::string dir;

void write(const std::string& file, const Session& s) { save_session(s, dir + "/" + file + ".json"); }

LinearMap sum(const std::vector<LinearMap>& basis, const LinearMap& zero) {
    LinearMap out = zero;
    long c = 1;
    for (const auto& b : basis) out = out + Scalar(c++) * b;
    return out;
}

Cowreath broken_counit(const Cowreath& w) {
    auto bad = w;
    bad.xi = Scalar(2) * w.xi;
    return bad;
}

Cowreath broken_delta(const Cowreath& w) {
    auto bad = w;
    bad.delta = zero_map(w.delta.dom, w.delta.cod);
    return bad;
}

void z2_group_algebra() {
    Session s;
    s.add("A", cyclic_group_algebra(2));
    s.add("C", group_coalgebra(2));
    write("z2_group_algebra", s);
}

void trivial() {
    Session s;
    auto a = truncated_polynomial(2);
    s.add("A", a);
    auto c = trivial_coring(a);
    s.add("C", c);
    auto bad = *c;
    bad.counit = Scalar(2) * c->counit;
    s.add("bad", std::make_shared<const Coring>(bad));
    write("trivial_coring", s);
}

void group_coalgebras() {
    Session s;
    for (std::size_t n : {2, 3, 4}) s.add("Z" + std::to_string(n), group_coalgebra(n));
    auto c = group_coalgebra(3);
    auto bad = *c;
    // Delta(e_i) = e_i (x) e_0 breaks the counit law
    bad.comult = from_terms(c->carrier, otimes(c->carrier, c->carrier),
                            [](const Tuple& t) { return Terms{{{t[0], 0}, Scalar(1)}}; });
    s.add("bad", std::make_shared<const Coring>(bad));
    s.add("X", regular_comodule(s.corings.at("Z2"), Side::right));
    write("group_coalgebras", s);
}

void flip_entwining_file() {
    Session s;
    auto a = cyclic_group_algebra(2);
    s.add("A", a);
    s.add("C", primitive_coalgebra());
    auto e = flip_entwining(a, s.corings.at("C"));
    s.add("flip", e);
    auto bad = e;
    bad.psi = Scalar(2) * e.psi;
    s.add("bad", bad);
    write("flip_entwining", s);
}

DoiKoppinenData self_data(const AlgebraPtr& h) {
    auto b = group_bialgebra(h);
    return {b, h, b.coalgebra->comult, b.coalgebra, mult_map(h)};
}

void dk_entwining() {
    Session s;
    auto h = cyclic_group_algebra(2);
    s.add("H", h);
    auto d = self_data(h);
    s.add("C", d.c);
    auto e = doi_koppinen_entwining(d);
    s.add("dk", e);
    auto bad = e;
    bad.psi = flip_entwining(h, d.c).psi + e.psi;
    s.add("bad", bad);
    write("dk_entwining", s);
}

void flip_cowreath_file() {
    Session s;
    auto c = primitive_coalgebra(), d = group_coalgebra(2);
    s.add("C", c);
    s.add("D", d);
    auto w = flip_cowreath(c, d);
    s.add("flip", w);
    s.add("flip_rev", flip_cowreath(d, c));
    s.add("unit", unit_cowreath(c));
    s.add("bad_counit", broken_counit(w));
    s.add("bad_delta", broken_delta(w));
    auto p = cowreath_product(w);
    s.add("P", p);
    auto x = regular_comodule(c, Side::right);
    auto y = comodule_of_cow(p, regular_cow_comodule(w, Side::right));
    s.add("X", x);
    s.add("Y", y);
    auto hat_basis = colinear_basis(restrict_along_xi(w, y), x);
    s.add("f", sum(hat_basis, zero_map(y.carrier, x.carrier)));
    auto xm = tensor_with_m(w, p, x);
    s.add("g", sum(colinear_basis(y, xm), zero_map(y.carrier, xm.carrier)));
    write("flip_cowreath", s);
}

void distributive_cowreath() {
    Session s;
    auto c = primitive_coalgebra(), d = group_coalgebra(3);
    s.add("C", c);
    s.add("D", d);
    auto both = distributive_cowreaths(c, d, swap_map(c->carrier, d->carrier));
    s.add("dist", both.right);
    s.add("bad", broken_counit(both.right));
    write("distributive_cowreath", s);
}

void lifted_cowreaths() {
    Session s;
    auto h = cyclic_group_algebra(2);
    s.add("H", h);
    auto d = self_data(h);
    auto dk = doi_koppinen_entwining(d);
    s.add("dk", dk);
    auto w_dk = flip_cowreath(d.c, primitive_coalgebra());
    s.add("w_dk", w_dk);
    s.add("lift_dk", lift_cowreath(dk, entwined_coring(dk), w_dk));

    auto p = primitive_coalgebra();
    auto fe = flip_entwining(h, p);
    s.add("flip", fe);
    auto w_flip = flip_cowreath(p, group_coalgebra(2));
    s.add("w_flip", w_flip);
    s.add("lift_flip", lift_cowreath(fe, entwined_coring(fe), w_flip));
    write("lifted_cowreaths", s);
}

LinearMap graded_twist(const ExtPtr& r, const ExtPtr& t, long c) {
    return from_terms(otimes(t->carrier, r->carrier), otimes(r->carrier, t->carrier), [=](const Tuple& u) {
        if (u[0] == 1 && u[1] == 1) return Terms{{{1, 1}, Scalar(c)}};
        return Terms{{{u[1], u[0]}, Scalar(1)}};
    });
}

void sign_flip() {
    Session s;
    auto r = over_field(truncated_polynomial(2, {}, "y"));
    auto t = over_field(truncated_polynomial(2, {}, "x"));
    s.add("Ry", r->total);
    s.add("Tx", t->total);
    s.add("R", r);
    s.add("T", t);
    auto sign = graded_twist(r, t, -1);
    s.add("sign", TwistData{r, t, sign});
    s.add("flip", TwistData{r, t, graded_twist(r, t, 1)});
    auto broken = from_terms(sign.dom, sign.cod, [](const Tuple& u) {
        if (u[0] == 1 && u[1] == 0) return Terms{};
        return Terms{{{u[1], u[0]}, Scalar(1)}};
    });
    s.add("bad", TwistData{r, t, broken});
    auto w = ttp_wreath(r, t, sign);
    s.add("sign_wreath", w);
    auto bad_w = w;
    bad_w.eta = Scalar(2) * w.eta;
    s.add("bad_wreath", bad_w);
    write("sign_flip_ttp", s);
}

SkewPolyData poly_data(std::size_t n, Field f, long sc, Matrix delta, const std::string& name) {
    auto b = truncated_polynomial(n, f, "x");
    Matrix sig(n, n, f);
    Scalar p(1, f);
    for (std::size_t i = 0; i < n; ++i, p *= Scalar(sc, f)) sig(i, i) = p;
    return {b, {b, b, sig}, delta, name};
}

void ore(const std::string& file, Field f, long sc, bool weyl) {
    Session s(f);
    std::size_t n = 3;
    Matrix delta(n, n, f);
    if (weyl)
        for (std::size_t i = 1; i < n; ++i) delta(i - 1, i) = Scalar(static_cast<long>(i), f);
    auto d = poly_data(n, f, sc, delta, "D");
    s.add("B", d.b);
    s.add("D", d);
    auto bad = d;
    bad.delta = Matrix::identity(n, f);
    s.add("bad", bad);
    write(file, s);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_corpus DIR\n";
        return 2;
    }
    dir = argv[1];
    z2_group_algebra();
    trivial();
    group_coalgebras();
    flip_entwining_file();
    dk_entwining();
    flip_cowreath_file();
    distributive_cowreath();
    lifted_cowreaths();
    sign_flip();
    ore("ore_commutative", Field::rationals(), 1, false);
    ore("ore_weyl", Field::gf(3), 1, true);
    ore("ore_quantum", Field::rationals(), 2, false);
    return 0;
}
