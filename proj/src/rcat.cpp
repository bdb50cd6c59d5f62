#include "coringlab/rcat.hpp"

namespace coringlab {

Report check_r_object(const RObject& o) {
    Report r{"r-object", o.name};
    const Coring& c = *o.coring;
    SpacePtr m = o.carrier;
    if (o.twist.dom != otimes(c.carrier, m) || o.twist.cod != otimes(m, c.carrier)) {
        r.error("twist has the wrong shape");
        return r;
    }
    if (m->left_algebra() != c.base || m->right_algebra() != c.base) {
        r.error("carrier is not a bimodule over the base algebra");
        return r;
    }
    auto b = check_bilinear(o.twist, "twist-bilinear");
    r.merge(b);
    if (!b.ok()) return r;
    auto ic = id(c.carrier), im = id(m);
    expect_equal(r, "twist-comultiplication", compose(tensor(im, c.comult), o.twist),
                 compose({tensor(o.twist, ic), tensor(ic, o.twist), tensor(c.comult, im)}));
    expect_equal(r, "twist-counit", compose({unit_right(m), tensor(im, c.counit), o.twist}),
                 compose(unit_left(m), tensor(c.counit, im)));
    return r;
}

Bicomodule r_object_bicomodule(const RObject& o) {
    const Coring& c = *o.coring;
    auto im = id(o.carrier);
    auto lambda = tensor(c.comult, im);
    auto rho = compose(tensor(id(c.carrier), o.twist), lambda);
    return {o.coring, o.coring, otimes(c.carrier, o.carrier), lambda, rho, c.name + "(x)" + o.name};
}

Report check_r_morphism(const RMorphism& m) {
    Report r{"r-morphism", m.from.name + "->" + m.to.name};
    auto bf = r_object_bicomodule(m.from), bt = r_object_bicomodule(m.to);
    if (m.from.coring != m.to.coring || m.map.dom != bf.carrier || m.map.cod != bt.carrier) {
        r.error("morphism has the wrong shape");
        return r;
    }
    auto b = check_bilinear(m.map);
    r.merge(b);
    if (!b.ok()) return r;
    auto ic = id(m.from.coring->carrier);
    expect_equal(r, "left-colinear", compose(bt.lambda, m.map), compose(tensor(ic, m.map), bf.lambda));
    expect_equal(r, "right-colinear", compose(bt.rho, m.map), compose(tensor(m.map, ic), bf.rho));
    return r;
}

RObject r_identity_object(const CoringPtr& c) {
    SpacePtr a = base_space(c->base);
    return {c, a, compose(unit_left_inv(c->carrier), unit_right(c->carrier)), c->base->name()};
}

RMorphism r_identity_morphism(const RObject& o) { return {o, o, id(otimes(o.coring->carrier, o.carrier))}; }

RObject r_tensor_objects(const RObject& a, const RObject& b) {
    auto twist = compose(tensor(id(a.carrier), b.twist), tensor(a.twist, id(b.carrier)));
    return {a.coring, otimes(a.carrier, b.carrier), twist, a.name + "(x)" + b.name};
}

RMorphism r_tensor_morphisms(const RMorphism& f, const RMorphism& g) {
    const Coring& c = *f.from.coring;
    SpacePtr m = f.from.carrier, n = g.from.carrier, m2 = f.to.carrier, n2 = g.to.carrier;
    auto ic = id(c.carrier);
    auto map = compose({tensor({ic, id(m2), unit_left(n2)}), tensor({ic, id(m2), c.counit, id(n2)}),
                        tensor(f.map, g.map), tensor({ic, f.from.twist, id(n)}), tensor({c.comult, id(m), id(n)})});
    return {r_tensor_objects(f.from, g.from), r_tensor_objects(f.to, g.to), map};
}

LinearMap r_tensor_morphisms_diagram(const RMorphism& f, const RMorphism& g) {
    const Coring& c = *f.from.coring;
    SpacePtr m = f.from.carrier, n = g.from.carrier, m2 = f.to.carrier, n2 = g.to.carrier;
    auto ic = id(c.carrier);
    return compose({tensor({ic, id(m2), unit_left(n2)}), tensor({ic, id(m2), c.counit, id(n2)}),
                    tensor({ic, id(m2), g.map}), tensor({ic, f.to.twist, id(n)}), tensor(tensor(ic, f.map), id(n)),
                    tensor({c.comult, id(m), id(n)})});
}

RMorphism r_compose(const RMorphism& g, const RMorphism& f) { return {f.from, g.to, compose(g.map, f.map)}; }

RObject canonical_c_object(const CoringPtr& c) {
    SpacePtr s = c->carrier;
    auto ic = id(s);
    auto first = compose({c->comult, unit_right(s), tensor(ic, c->counit)});
    auto second = compose({c->comult, unit_left(s), tensor(c->counit, ic)});
    return {c, s, first + second - id(otimes(s, s)), "c(" + c->name + ")"};
}

RObject object_from_coring_morphism(const LinearMap& phi, const CoringPtr& d, const CoringPtr& c) {
    SpacePtr ds = d->carrier;
    auto twist = compose({tensor(id(ds), phi), d->comult, unit_left(ds), tensor(c->counit, id(ds))});
    return {c, ds, twist, "d(" + d->name + ")"};
}

Report check_r_monoid(const RMonoid& m) {
    Report r{"r-monoid", m.obj.name};
    const RObject& o = m.obj;
    auto oo = r_tensor_objects(o, o);
    auto unit = r_identity_object(o.coring);
    SpacePtr c = o.coring->carrier;
    if (m.mu.map.dom != otimes(c, oo.carrier) || m.mu.map.cod != otimes(c, o.carrier) ||
        m.eta.map.dom != otimes(c, unit.carrier) || m.eta.map.cod != otimes(c, o.carrier)) {
        r.error("multiplication or unit has the wrong shape");
        return r;
    }
    auto rm = check_r_morphism({oo, o, m.mu.map});
    auto re = check_r_morphism({unit, o, m.eta.map});
    r.merge(rm, "multiplication-");
    r.merge(re, "unit-");
    if (r.status == Status::error) return r;
    RMorphism mu{oo, o, m.mu.map}, eta{unit, o, m.eta.map}, io = r_identity_morphism(o);
    expect_equal(r, "monoid-associativity", compose(mu.map, r_tensor_morphisms(mu, io).map),
                 compose(mu.map, r_tensor_morphisms(io, mu).map));
    expect_equal(r, "monoid-unit-left", compose(mu.map, r_tensor_morphisms(eta, io).map),
                 tensor(id(c), unit_left(o.carrier)));
    expect_equal(r, "monoid-unit-right", compose(mu.map, r_tensor_morphisms(io, eta).map),
                 tensor(id(c), unit_right(o.carrier)));
    return r;
}

Report check_r_comonoid(const RComonoid& m) {
    Report r{"r-comonoid", m.obj.name};
    const RObject& o = m.obj;
    auto oo = r_tensor_objects(o, o);
    auto unit = r_identity_object(o.coring);
    SpacePtr c = o.coring->carrier;
    if (m.delta.map.dom != otimes(c, o.carrier) || m.delta.map.cod != otimes(c, oo.carrier) ||
        m.xi.map.dom != otimes(c, o.carrier) || m.xi.map.cod != otimes(c, unit.carrier)) {
        r.error("comultiplication or counit has the wrong shape");
        return r;
    }
    auto rd = check_r_morphism({o, oo, m.delta.map});
    auto rx = check_r_morphism({o, unit, m.xi.map});
    r.merge(rd, "comultiplication-");
    r.merge(rx, "counit-");
    if (r.status == Status::error) return r;
    RMorphism delta{o, oo, m.delta.map}, xi{o, unit, m.xi.map}, io = r_identity_morphism(o);
    expect_equal(r, "comonoid-coassociativity", compose(r_tensor_morphisms(delta, io).map, delta.map),
                 compose(r_tensor_morphisms(io, delta).map, delta.map));
    expect_equal(r, "comonoid-counit-left", compose(r_tensor_morphisms(xi, io).map, delta.map),
                 tensor(id(c), unit_left_inv(o.carrier)));
    expect_equal(r, "comonoid-counit-right", compose(r_tensor_morphisms(io, xi).map, delta.map),
                 tensor(id(c), unit_right_inv(o.carrier)));
    return r;
}

Report check_l_object(const LObject& o) {
    Report r{"l-object", o.name};
    const Coring& c = *o.coring;
    SpacePtr l = o.carrier;
    if (o.twist.dom != otimes(l, c.carrier) || o.twist.cod != otimes(c.carrier, l)) {
        r.error("twist has the wrong shape");
        return r;
    }
    if (l->left_algebra() != c.base || l->right_algebra() != c.base) {
        r.error("carrier is not a bimodule over the base algebra");
        return r;
    }
    auto b = check_bilinear(o.twist, "twist-bilinear");
    r.merge(b);
    if (!b.ok()) return r;
    auto ic = id(c.carrier), il = id(l);
    expect_equal(r, "twist-counit", compose({unit_left(l), tensor(c.counit, il), o.twist}),
                 compose(unit_right(l), tensor(il, c.counit)));
    expect_equal(r, "twist-comultiplication", compose(tensor(c.comult, il), o.twist),
                 compose({tensor(ic, o.twist), tensor(o.twist, ic), tensor(il, c.comult)}));
    return r;
}

Bicomodule l_object_bicomodule(const LObject& o) {
    const Coring& c = *o.coring;
    auto rho = tensor(id(o.carrier), c.comult);
    auto lambda = compose(tensor(o.twist, id(c.carrier)), rho);
    return {o.coring, o.coring, otimes(o.carrier, c.carrier), lambda, rho, o.name + "(x)" + c.name};
}

Report check_l_morphism(const LMorphism& m) {
    Report r{"l-morphism", m.from.name + "->" + m.to.name};
    auto bf = l_object_bicomodule(m.from), bt = l_object_bicomodule(m.to);
    if (m.from.coring != m.to.coring || m.map.dom != bf.carrier || m.map.cod != bt.carrier) {
        r.error("morphism has the wrong shape");
        return r;
    }
    auto b = check_bilinear(m.map);
    r.merge(b);
    if (!b.ok()) return r;
    auto ic = id(m.from.coring->carrier);
    expect_equal(r, "left-colinear", compose(bt.lambda, m.map), compose(tensor(ic, m.map), bf.lambda));
    expect_equal(r, "right-colinear", compose(bt.rho, m.map), compose(tensor(m.map, ic), bf.rho));
    return r;
}

LObject l_identity_object(const CoringPtr& c) {
    SpacePtr a = base_space(c->base);
    return {c, a, compose(unit_right_inv(c->carrier), unit_left(c->carrier)), c->base->name()};
}

LObject l_tensor_objects(const LObject& a, const LObject& b) {
    auto twist = compose(tensor(a.twist, id(b.carrier)), tensor(id(a.carrier), b.twist));
    return {a.coring, otimes(a.carrier, b.carrier), twist, a.name + "(x)" + b.name};
}

LMorphism l_tensor_morphisms(const LMorphism& f, const LMorphism& g) {
    const Coring& c = *f.from.coring;
    SpacePtr l = f.from.carrier, k = g.from.carrier, l2 = f.to.carrier, k2 = g.to.carrier;
    auto ic = id(c.carrier);
    auto map = compose({tensor(id(l2), unit_left(otimes(k2, c.carrier))), tensor({id(l2), c.counit, id(k2), ic}),
                        tensor({f.map, id(k2), ic}), tensor({id(l), g.to.twist, ic}), tensor(id(l), tensor(g.map, ic)),
                        tensor({id(l), id(k), c.comult})});
    return {l_tensor_objects(f.from, g.from), l_tensor_objects(f.to, g.to), map};
}

}  // namespace coringlab
