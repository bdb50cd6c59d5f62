#include "coringlab/coring.hpp"

namespace coringlab {

Report check_coring(const Coring& c) {
    Report r{"coring", c.name};
    if (c.comult.dom != c.carrier || c.comult.cod != otimes(c.carrier, c.carrier) || c.counit.dom != c.carrier ||
        c.counit.cod != base_space(c.base)) {
        r.error("comultiplication or counit has the wrong shape");
        return r;
    }
    if (c.carrier->left_algebra() != c.base || c.carrier->right_algebra() != c.base) {
        r.error("carrier is not a bimodule over the base algebra");
        return r;
    }
    if (c.carrier->factors().size() == 1 && !c.carrier->factors()[0]->origin())
        r.merge(check_bimodule(*c.carrier->factors()[0]));
    auto b1 = check_bilinear(c.comult, "comultiplication-bilinear");
    auto b2 = check_bilinear(c.counit, "counit-bilinear");
    r.merge(b1);
    r.merge(b2);
    if (!b1.ok() || !b2.ok()) return r;   // the induced maps below would not be well defined
    auto ic = id(c.carrier);
    expect_equal(r, "coassociativity", compose(tensor(ic, c.comult), c.comult),
                 compose(tensor(c.comult, ic), c.comult));
    expect_equal(r, "counit-right", compose({unit_right(c.carrier), tensor(ic, c.counit), c.comult}), ic);
    expect_equal(r, "counit-left", compose({unit_left(c.carrier), tensor(c.counit, ic), c.comult}), ic);
    return r;
}

Report check_comodule(const Comodule& m) {
    Report r{m.side == Side::right ? "right-comodule" : "left-comodule", m.name};
    const Coring& c = *m.coring;
    SpacePtr expect = m.side == Side::right ? otimes(m.carrier, c.carrier) : otimes(c.carrier, m.carrier);
    if (m.coaction.dom != m.carrier || m.coaction.cod != expect) {
        r.error("coaction has the wrong shape");
        return r;
    }
    auto b = check_bilinear(m.coaction, "coaction-linear");
    r.merge(b);
    if (!b.ok()) return r;
    auto im = id(m.carrier), ic = id(c.carrier);
    if (m.side == Side::right) {
        expect_equal(r, "coaction-coassociativity", compose(tensor(m.coaction, ic), m.coaction),
                     compose(tensor(im, c.comult), m.coaction));
        expect_equal(r, "coaction-counit", compose({unit_right(m.carrier), tensor(im, c.counit), m.coaction}), im);
    } else {
        expect_equal(r, "coaction-coassociativity", compose(tensor(ic, m.coaction), m.coaction),
                     compose(tensor(c.comult, im), m.coaction));
        expect_equal(r, "coaction-counit", compose({unit_left(m.carrier), tensor(c.counit, im), m.coaction}), im);
    }
    return r;
}

Report check_bicomodule(const Bicomodule& m) {
    Report r{"bicomodule", m.name};
    auto l = check_comodule({Side::left, m.left_coring, m.carrier, m.lambda, m.name});
    auto rr = check_comodule({Side::right, m.right_coring, m.carrier, m.rho, m.name});
    r.merge(l);
    r.merge(rr);
    if (r.status == Status::error) return r;
    expect_equal(r, "bicomodule-compatibility", compose(tensor(id(m.left_coring->carrier), m.rho), m.lambda),
                 compose(tensor(m.lambda, id(m.right_coring->carrier)), m.rho));
    return r;
}

Report is_colinear(const LinearMap& f, const Comodule& from, const Comodule& to) {
    Report r{"colinear", from.name + "->" + to.name};
    if (from.side != to.side || from.coring != to.coring || f.dom != from.carrier || f.cod != to.carrier) {
        r.error("map and comodules do not match");
        return r;
    }
    auto b = check_bilinear(f, "bilinear");
    r.merge(b);
    if (!b.ok()) return r;
    auto ic = id(from.coring->carrier);
    if (from.side == Side::right)
        expect_equal(r, "colinear", compose(to.coaction, f), compose(tensor(f, ic), from.coaction));
    else
        expect_equal(r, "colinear", compose(to.coaction, f), compose(tensor(ic, f), from.coaction));
    return r;
}

Report check_coring_morphism(const LinearMap& phi, const Coring& from, const Coring& to) {
    Report r{"coring-morphism", from.name + "->" + to.name};
    if (from.base != to.base || phi.dom != from.carrier || phi.cod != to.carrier) {
        r.error("map does not go between the carriers of corings over one algebra");
        return r;
    }
    auto b = check_bilinear(phi, "bilinear");
    r.merge(b);
    if (!b.ok()) return r;
    expect_equal(r, "morphism-counit", compose(to.counit, phi), from.counit);
    expect_equal(r, "morphism-comultiplication", compose(tensor(phi, phi), from.comult), compose(to.comult, phi));
    return r;
}

CoringPtr make_coring(const AlgebraPtr& base, const SpacePtr& carrier, const LinearMap& comult,
                      const LinearMap& counit, std::string name) {
    return std::make_shared<Coring>(Coring{base, carrier, comult, counit, std::move(name)});
}

CoringPtr trivial_coring(const AlgebraPtr& a) {
    SpacePtr s = base_space(a);
    return make_coring(a, s, unit_right_inv(s), id(s), "(" + a->name() + ":" + a->name() + ")");
}

CoringPtr grouplike_coalgebra(const BimodulePtr& carrier, std::string name) {
    SpacePtr s = space(carrier);
    Field f = carrier->field();
    AlgebraPtr k = ground_field(f);
    auto delta = from_terms(s, otimes(s, s), [&](const Tuple& t) { return Terms{{{t[0], t[0]}, Scalar(1, f)}}; });
    auto eps = from_terms(s, base_space(k), [&](const Tuple&) { return Terms{{{0}, Scalar(1, f)}}; });
    return make_coring(k, s, delta, eps, name.empty() ? carrier->name() : name);
}

CoringPtr group_coalgebra(std::size_t n, Field f) {
    return grouplike_coalgebra(underlying(cyclic_group_algebra(n, f)));
}

CoringPtr primitive_coalgebra(Field f) {
    auto v = vector_space(f, 2, "span{g,x}");
    SpacePtr s = space(v);
    AlgebraPtr k = ground_field(f);
    Scalar one(1, f);
    auto delta = from_terms(s, otimes(s, s), [&](const Tuple& t) {
        if (t[0] == 0) return Terms{{{0, 0}, one}};
        return Terms{{{1, 0}, one}, {{0, 1}, one}};
    });
    auto eps = from_terms(s, base_space(k), [&](const Tuple& t) { return Terms{{{0}, Scalar(t[0] == 0 ? 1 : 0, f)}}; });
    return make_coring(k, s, delta, eps, "primitive");
}

std::vector<LinearMap> bicolinear_basis(const Bicomodule& from, const Bicomodule& to) {
    if (from.left_coring != to.left_coring || from.right_coring != to.right_coring)
        throw InputError("bicomodules over different corings");
    auto il = id(from.left_coring->carrier), ir = id(from.right_coring->carrier);
    return solve_in_span(bilinear_basis(from.carrier, to.carrier), [&](const LinearMap& f) {
        auto dl = compose(to.lambda, f) - compose(tensor(il, f), from.lambda);
        auto dr = compose(to.rho, f) - compose(tensor(f, ir), from.rho);
        return hstack({dl.mat.transpose(), dr.mat.transpose()}).transpose();
    });
}

std::vector<LinearMap> colinear_basis(const Comodule& from, const Comodule& to) {
    if (from.coring != to.coring || from.side != to.side) throw InputError("comodules do not match");
    auto ic = id(from.coring->carrier);
    return solve_in_span(bilinear_basis(from.carrier, to.carrier), [&](const LinearMap& f) {
        auto lifted = from.side == Side::right ? tensor(f, ic) : tensor(ic, f);
        return (compose(to.coaction, f) - compose(lifted, from.coaction)).mat;
    });
}

Comodule regular_comodule(const CoringPtr& c, Side side) { return {side, c, c->carrier, c->comult, c->name}; }

Bicomodule regular_bicomodule(const CoringPtr& c) { return {c, c, c->carrier, c->comult, c->comult, c->name}; }

}  // namespace coringlab
