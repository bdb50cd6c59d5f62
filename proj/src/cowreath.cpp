#include "coringlab/cowreath.hpp"

namespace coringlab {

namespace {

LinearMap to_space(const LinearMap& f, const SpacePtr& cod) {
    return f.cod == cod ? f : compose(regroup(f.cod, cod), f);
}

std::string failed_laws(const Report& r) {
    std::string laws;
    for (const auto& w : r.witnesses) laws += (laws.empty() ? "" : ", ") + w.equation;
    return laws.empty() ? r.message : laws;
}

}  // namespace

Report check_cowreath(const Cowreath& w) {
    Report r{"cowreath", w.name};
    auto ro = check_r_object(w.obj);
    r.merge(ro);
    if (r.status == Status::error) return r;
    const Coring& c = *w.obj.coring;
    SpacePtr m = w.obj.carrier;
    if (w.xi.dom != otimes(c.carrier, m) || w.xi.cod != c.carrier || w.delta.dom != otimes(c.carrier, m) ||
        w.delta.cod != otimes({c.carrier, m, m})) {
        r.error("xi or delta has the wrong shape");
        return r;
    }
    auto oo = r_tensor_objects(w.obj, w.obj);
    r.merge(check_r_morphism({w.obj, r_identity_object(w.obj.coring), compose(unit_right_inv(c.carrier), w.xi)}),
            "xi-");
    r.merge(check_r_morphism({w.obj, oo, w.delta}), "delta-");
    if (r.status == Status::error) return r;
    auto im = id(m);
    const LinearMap& t = w.obj.twist;
    expect_equal(r, "cowreath-counit", compose(tensor(w.xi, im), w.delta), id(otimes(c.carrier, m)));
    expect_equal(r, "cowreath-twist", compose({tensor(im, w.xi), tensor(t, im), w.delta}), t);
    expect_equal(r, "cowreath-coassociativity", compose({tensor(im, w.delta), tensor(t, im), w.delta}),
                 compose({tensor({t, im, im}), tensor(w.delta, im), w.delta}));
    return r;
}

Report check_l_cowreath(const LCowreath& w) {
    Report r{"l-cowreath", w.name};
    auto lo = check_l_object(w.obj);
    r.merge(lo);
    if (r.status == Status::error) return r;
    const Coring& d = *w.obj.coring;
    SpacePtr l = w.obj.carrier;
    if (w.xi.dom != otimes(l, d.carrier) || w.xi.cod != d.carrier || w.delta.dom != otimes(l, d.carrier) ||
        w.delta.cod != otimes({l, l, d.carrier})) {
        r.error("xi or delta has the wrong shape");
        return r;
    }
    r.merge(check_l_morphism({w.obj, l_identity_object(w.obj.coring), compose(unit_left_inv(d.carrier), w.xi)}),
            "xi-");
    r.merge(check_l_morphism({w.obj, l_tensor_objects(w.obj, w.obj), w.delta}), "delta-");
    if (r.status == Status::error) return r;
    auto il = id(l);
    const LinearMap& t = w.obj.twist;
    expect_equal(r, "cowreath-counit", compose(tensor(il, w.xi), w.delta), id(otimes(l, d.carrier)));
    expect_equal(r, "cowreath-twist", compose({tensor(w.xi, il), tensor(il, t), w.delta}), t);
    expect_equal(r, "cowreath-coassociativity", compose({tensor(w.delta, il), tensor(il, t), w.delta}),
                 compose({tensor({il, il, t}), tensor(il, w.delta), w.delta}));
    return r;
}

RComonoid cowreath_as_comonoid(const Cowreath& w) {
    auto unit = r_identity_object(w.obj.coring);
    auto oo = r_tensor_objects(w.obj, w.obj);
    return {w.obj, {w.obj, oo, w.delta}, {w.obj, unit, compose(unit_right_inv(w.obj.coring->carrier), w.xi)}};
}

Report check_cowreath_abstract(const Cowreath& w) { return check_r_comonoid(cowreath_as_comonoid(w)); }

Cowreath unit_cowreath(const CoringPtr& c) {
    auto obj = r_identity_object(c);
    return {obj, unit_right(c->carrier), tensor(id(c->carrier), unit_right_inv(obj.carrier)), "unit(" + c->name + ")"};
}

Cowreath flip_cowreath(const CoringPtr& c, const CoringPtr& d) {
    if (c->base->dim() != 1 || d->base != c->base) throw InputError("flip cowreath needs two coalgebras over one field");
    auto ic = id(c->carrier);
    RObject obj{c, d->carrier, swap_map(c->carrier, d->carrier), d->name};
    return {obj, compose(unit_right(c->carrier), tensor(ic, d->counit)), tensor(ic, d->comult),
            "flip(" + c->name + "," + d->name + ")"};
}

Report check_mixed_distributive(const CoringPtr& c, const CoringPtr& d, const LinearMap& dmap) {
    Report r{"mixed-distributive", c->name + "," + d->name};
    SpacePtr cs = c->carrier, ds = d->carrier;
    if (c->base != d->base || dmap.dom != otimes(cs, ds) || dmap.cod != otimes(ds, cs)) {
        r.error("map does not go from C (x) D to D (x) C over one algebra");
        return r;
    }
    auto b = check_bilinear(dmap);
    r.merge(b);
    if (!b.ok()) return r;
    auto ic = id(cs), id_ = id(ds);
    expect_equal(r, "CD-1", compose({unit_right(ds), tensor(id_, c->counit), dmap}),
                 compose(unit_left(ds), tensor(c->counit, id_)));
    expect_equal(r, "CD-2", compose(tensor(id_, c->comult), dmap),
                 compose({tensor(dmap, ic), tensor(ic, dmap), tensor(c->comult, id_)}));
    expect_equal(r, "CD-3", compose({unit_left(cs), tensor(d->counit, ic), dmap}),
                 compose(unit_right(cs), tensor(ic, d->counit)));
    expect_equal(r, "CD-4", compose(tensor(d->comult, ic), dmap),
                 compose({tensor(id_, dmap), tensor(dmap, id_), tensor(ic, d->comult)}));
    return r;
}

DistributiveCowreaths distributive_cowreaths(const CoringPtr& c, const CoringPtr& d, const LinearMap& dmap) {
    auto pre = check_mixed_distributive(c, d, dmap);
    if (!pre.ok()) throw InputError("mixed distributive law fails: " + failed_laws(pre));
    auto ic = id(c->carrier), id_ = id(d->carrier);
    Cowreath right{{c, d->carrier, dmap, d->name}, compose(unit_right(c->carrier), tensor(ic, d->counit)),
                   tensor(ic, d->comult), d->name + " over " + c->name};
    LCowreath left{{d, c->carrier, dmap, c->name}, compose(unit_left(d->carrier), tensor(c->counit, id_)),
                   tensor(c->comult, id_), c->name + " over " + d->name};
    return {right, left};
}

Cowreath lift_cowreath(const EntwiningStructure& e, const CoringPtr& entwined, const Cowreath& w) {
    auto obj = lift_r_object(e, entwined, w.obj);
    const AlgebraPtr& a = e.algebra;
    std::size_t da = a->dim(), dc = e.coalgebra->carrier->dim(), dn = w.obj.carrier->dim();
    SpacePtr ac = entwined->carrier, ana = obj.carrier;
    const auto& unit = a->unit();
    auto split = [&](const Tuple& t) {
        return std::array<std::size_t, 5>{t[0] / dc, t[0] % dc, t[1] / (dn * da), (t[1] / da) % dn, t[1] % da};
    };
    auto xi = from_terms(otimes(ac, ana), ac, [&](const Tuple& t) {
        auto [a0, c0, a1, n0, a2] = split(t);
        Terms out;
        for (const auto& [qc, s] : entwined_normalize(e, a0, c0, a1))
            for (std::size_t c2 = 0; c2 < dc; ++c2) {
                const Scalar& x = w.xi.mat(c2, qc[1] * dn + n0);
                if (x.is_zero()) continue;
                for (const auto& [qc2, s2] : entwined_normalize(e, qc[0], c2, a2))
                    out.push_back({Tuple{qc2[0] * dc + qc2[1]}, s * x * s2});
            }
        return out;
    });
    auto delta = from_terms(otimes(ac, ana), otimes({ac, ana, ana}), [&](const Tuple& t) {
        auto [a0, c0, a1, n0, a2] = split(t);
        Terms out;
        for (const auto& [qc, s] : entwined_normalize(e, a0, c0, a1))
            for (std::size_t row = 0; row < dc * dn * dn; ++row) {
                const Scalar& x = w.delta.mat(row, qc[1] * dn + n0);
                if (x.is_zero()) continue;
                std::size_t c2 = row / (dn * dn), n1 = (row / dn) % dn, n2 = row % dn;
                for (std::size_t u = 0; u < da; ++u)
                    for (std::size_t u1 = 0; u1 < da; ++u1)
                        for (std::size_t u2 = 0; u2 < da; ++u2) {
                            if (unit[u].is_zero() || unit[u1].is_zero() || unit[u2].is_zero()) continue;
                            out.push_back({Tuple{qc[0] * dc + c2, (u * dn + n1) * da + u1, (u2 * dn + n2) * da + a2},
                                           s * x * unit[u] * unit[u1] * unit[u2]});
                        }
            }
        return out;
    });
    return {obj, xi, delta, "lift(" + w.name + ")"};
}

CoringPtr cowreath_product(const Cowreath& w) {
    const Coring& c = *w.obj.coring;
    SpacePtr m = w.obj.carrier, p = otimes(c.carrier, m);
    auto ic = id(c.carrier), im = id(m);
    auto comult = compose({tensor({ic, w.obj.twist, im}), tensor(ic, w.delta), tensor(c.comult, im)});
    return make_coring(c.base, p, to_space(comult, otimes(p, p)), compose(c.counit, w.xi),
                       c.name + "#" + w.obj.name);
}

Report check_cowreath_product(const Cowreath& w, const CoringPtr& product) {
    Report r{"cowreath-product", product->name};
    r.merge(check_coring(*product));
    if (r.status == Status::error) return r;
    r.merge(check_coring_morphism(w.xi, *product, *w.obj.coring), "xi-");
    return r;
}

Report check_cow_comodule(const CowComodule& x) {
    bool right = x.side == Side::right;
    Report r{right ? "right-cow-comodule" : "left-cow-comodule", x.name};
    r.merge(check_r_object(x.obj));
    if (r.status == Status::error) return r;
    const Cowreath& w = x.w;
    SpacePtr c = w.obj.coring->carrier, m = w.obj.carrier, xs = x.obj.carrier;
    if (x.obj.coring != w.obj.coring || x.coaction.dom != otimes(c, xs) ||
        x.coaction.cod != (right ? otimes({c, xs, m}) : otimes({c, m, xs}))) {
        r.error("coaction has the wrong shape");
        return r;
    }
    auto target = right ? r_tensor_objects(x.obj, w.obj) : r_tensor_objects(w.obj, x.obj);
    r.merge(check_r_morphism({x.obj, target, x.coaction}), "coaction-");
    if (r.status == Status::error) return r;
    auto im = id(m), ix = id(xs);
    const LinearMap &tx = x.obj.twist, &tm = w.obj.twist, &co = x.coaction;
    if (right) {
        expect_equal(r, "comodule-counit", compose({tensor(ix, w.xi), tensor(tx, im), co}), tx);
        expect_equal(r, "comodule-coassociativity", compose({tensor(ix, w.delta), tensor(tx, im), co}),
                     compose({tensor({tx, im, im}), tensor(co, im), co}));
    } else {
        expect_equal(r, "comodule-counit", compose(tensor(w.xi, ix), co), id(otimes(c, xs)));
        expect_equal(r, "comodule-coassociativity", compose({tensor(im, co), tensor(tm, ix), co}),
                     compose({tensor({tm, im, ix}), tensor(w.delta, ix), co}));
    }
    return r;
}

Report check_cow_comodule_morphism(const LinearMap& f, const CowComodule& from, const CowComodule& to) {
    Report r{"cow-comodule-morphism", from.name + "->" + to.name};
    if (from.side != to.side || from.w.obj.carrier != to.w.obj.carrier) {
        r.error("comodules do not match");
        return r;
    }
    r.merge(check_r_morphism({from.obj, to.obj, f}));
    if (r.status == Status::error) return r;
    auto im = id(from.w.obj.carrier);
    const LinearMap& tm = from.w.obj.twist;
    if (from.side == Side::right)
        expect_equal(r, "comodule-morphism", compose(to.coaction, f), compose(tensor(f, im), from.coaction));
    else
        expect_equal(r, "comodule-morphism", compose({tensor(im, f), tensor(tm, id(from.obj.carrier)), from.coaction}),
                     compose({tensor(tm, id(to.obj.carrier)), to.coaction, f}));
    return r;
}

CowComodule regular_cow_comodule(const Cowreath& w, Side side) { return {side, w, w.obj, w.delta, w.obj.name}; }

CowComodule square_cow_comodule(const Cowreath& w) {
    const Coring& c = *w.obj.coring;
    SpacePtr m = w.obj.carrier;
    auto ic = id(c.carrier), im = id(m);
    auto co = compose({tensor({ic, im, unit_left(otimes(m, m))}), tensor({ic, im, c.counit, im, im}),
                       tensor({ic, im, w.delta}), tensor({ic, w.obj.twist, im}), tensor({c.comult, im, im})});
    return {Side::right, w, r_tensor_objects(w.obj, w.obj), co, w.obj.name + "(x)" + w.obj.name};
}

Comodule tensor_with_m(const Cowreath& w, const CoringPtr& product, const Comodule& x) {
    if (x.side != Side::right || x.coring != w.obj.coring) throw InputError("need a right comodule over the coring");
    SpacePtr m = w.obj.carrier, xm = otimes(x.carrier, m);
    auto ix = id(x.carrier), im = id(m);
    auto co = compose({tensor({ix, w.obj.twist, im}), tensor(ix, w.delta), tensor(x.coaction, im)});
    return {Side::right, product, xm, to_space(co, otimes(xm, product->carrier)), x.name + "(x)" + w.obj.name};
}

Comodule restrict_along_xi(const Cowreath& w, const Comodule& y) {
    if (y.side != Side::right) throw InputError("need a right comodule");
    auto co = compose(tensor(id(y.carrier), w.xi), y.coaction);
    return {Side::right, w.obj.coring, y.carrier, co, y.name + "_xi"};
}

LinearMap adjunct_of(const Cowreath& w, const Comodule& x, const Comodule& y, const LinearMap& f) {
    const Coring& c = *w.obj.coring;
    SpacePtr m = w.obj.carrier;
    auto im = id(m), ic = id(c.carrier);
    return compose({unit_right(otimes(x.carrier, m)), tensor({id(x.carrier), im, c.counit}), tensor({f, im, ic}),
                    tensor(id(y.carrier), w.obj.twist), y.coaction});
}

LinearMap adjunct_back(const Cowreath& w, const Comodule& x, const Comodule&, const LinearMap& g) {
    const Coring& c = *w.obj.coring;
    auto ix = id(x.carrier);
    return compose({unit_right(x.carrier), tensor(ix, c.counit), tensor(ix, w.xi), tensor(x.coaction, id(w.obj.carrier)),
                    g});
}

Comodule comodule_of_cow(const CoringPtr& product, const CowComodule& x) {
    if (x.side != Side::right) throw InputError("need a right cow-comodule");
    const Coring& c = *x.w.obj.coring;
    SpacePtr cx = otimes(c.carrier, x.obj.carrier);
    auto ic = id(c.carrier);
    auto co = compose({tensor({ic, x.obj.twist, id(x.w.obj.carrier)}), tensor(ic, x.coaction),
                       tensor(c.comult, id(x.obj.carrier))});
    return {Side::right, product, cx, to_space(co, otimes(cx, product->carrier)), c.name + "(x)" + x.name};
}

Comodule comodule_of_r_object(const RObject& y) {
    const Coring& c = *y.coring;
    auto co = compose(tensor(id(c.carrier), y.twist), tensor(c.comult, id(y.carrier)));
    return {Side::right, y.coring, otimes(c.carrier, y.carrier), co, c.name + "(x)" + y.name};
}

RObject r_object_of_comodule(const Comodule& z) {
    if (z.side != Side::right) throw InputError("need a right comodule");
    const Coring& c = *z.coring;
    auto twist = compose({z.coaction, unit_left(z.carrier), tensor(c.counit, id(z.carrier))});
    return {z.coring, z.carrier, twist, z.name};
}

LinearMap r_adjunct_of(const RObject& y, const Comodule&, const LinearMap& g) {
    const Coring& c = *y.coring;
    return compose(tensor(id(c.carrier), g), tensor(c.comult, id(y.carrier)));
}

LinearMap r_adjunct_back(const RObject& y, const Comodule& z, const LinearMap& f) {
    const Coring& c = *y.coring;
    return compose({unit_left(z.carrier), tensor(c.counit, id(z.carrier)), f});
}

}  // namespace coringlab
