#include "coringlab/wreath.hpp"

namespace coringlab {

namespace {

LinearMap on_dom(const LinearMap& f, const SpacePtr& dom) { return f.dom == dom ? f : compose(f, regroup(dom, f.dom)); }

std::string failed_laws(const Report& r) {
    std::string laws;
    for (const auto& w : r.witnesses) laws += (laws.empty() ? "" : ", ") + w.equation;
    return laws.empty() ? r.message : laws;
}

bool shape(Report& r, const LinearMap& f, const SpacePtr& dom, const SpacePtr& cod, const std::string& what) {
    if (f.dom == dom && f.cod == cod) return true;
    r.error(what + " has the wrong shape");
    return false;
}

}  // namespace

ExtPtr extension_on(const AlgebraPtr& base, const SpacePtr& s, const LinearMap& mult, const LinearMap& unit,
                    std::string name) {
    std::size_t n = s->dim();
    Field f = s->field();
    Matrix table(n, n * n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Tuple t = s->lift(i);
            const Tuple& u = s->lift(j);
            t.insert(t.end(), u.begin(), u.end());
            for (const auto& [q, v] : mult.apply(mult.dom->project(t))) table(q, i * n + j) = v;
        }
    std::vector<Scalar> one(n, Scalar(0, f));
    for (std::size_t a = 0; a < base->dim(); ++a)
        if (!base->unit()[a].is_zero())
            for (const auto& [q, v] : unit.apply(unit.dom->project(Tuple{a}))) one[q] += base->unit()[a] * v;
    auto total = std::make_shared<const FinAlgebra>(f, n, table, one, std::vector<std::string>{}, name);
    Matrix iota(n, base->dim(), f);
    for (std::size_t a = 0; a < base->dim(); ++a)
        for (const auto& [q, v] : unit.apply(unit.dom->project(Tuple{a}))) iota(q, a) = v;
    return std::make_shared<const RingExtension>(
        RingExtension{base, total, {base, total, iota}, s, on_dom(mult, otimes(s, s)), unit, name});
}

ExtPtr ring_extension(const AlgebraPtr& base, const AlgebraPtr& total, const AlgebraMorphism& iota) {
    if (iota.source != base || iota.target != total) throw InputError("iota must go from the base to the total algebra");
    SpacePtr s = base->dim() == 1 && base == ground_field(total->field())
                     ? space(underlying(total))
                     : space(restrict_bimodule(regular(total), iota, iota, total->name()));
    auto mult = from_terms(otimes(s, s), s, [&](const Tuple& t) {
        auto p = total->basis_product(t[0], t[1]);
        Terms out;
        for (std::size_t q = 0; q < p.size(); ++q)
            if (!p[q].is_zero()) out.push_back({Tuple{q}, p[q]});
        return out;
    });
    auto unit = from_terms(base_space(base), s, [&](const Tuple& t) {
        Terms out;
        for (std::size_t q = 0; q < total->dim(); ++q)
            if (!iota.matrix(q, t[0]).is_zero()) out.push_back({Tuple{q}, iota.matrix(q, t[0])});
        return out;
    });
    return std::make_shared<const RingExtension>(RingExtension{base, total, iota, s, mult, unit, total->name()});
}

ExtPtr over_field(const AlgebraPtr& total) {
    AlgebraPtr k = ground_field(total->field());
    return ring_extension(k, total, unit_morphism(total));
}

Report check_ring_extension(const RingExtension& e) {
    Report r{"ring-extension", e.name};
    r.merge(check_algebra(*e.total));
    r.merge(check_algebra_morphism(e.iota), "iota-");
    r.merge(check_bilinear(e.mult, "multiplication-bilinear"));
    return r;
}

LinearMap insert_unit(const ExtPtr& e, const SpacePtr& before, const SpacePtr& after) {
    if (!before) return compose(tensor(e->unit, id(after)), unit_left_inv(after));
    if (!after) return compose(tensor(id(before), e->unit), unit_right_inv(before));
    return compose(tensor({id(before), e->unit, id(after)}), tensor(id(before), unit_left_inv(after)));
}

Report check_ring_module(const RingModule& m) {
    bool left = m.side == Side::left;
    Report r{left ? "left-module" : "right-module", m.name};
    SpacePtr t = m.ring->carrier, x = m.carrier;
    if (!shape(r, m.action, left ? otimes(t, x) : otimes(x, t), x, "action")) return r;
    auto b = check_bilinear(m.action, "action-bilinear");
    r.merge(b);
    if (!b.ok()) return r;
    auto it = id(t), ix = id(x);
    const LinearMap& mu = m.ring->mult;
    if (left) {
        expect_equal(r, "action-associative", compose(m.action, tensor(mu, ix)),
                     compose(m.action, tensor(it, m.action)));
        expect_equal(r, "action-unital", compose(m.action, insert_unit(m.ring, nullptr, x)), ix);
    } else {
        expect_equal(r, "action-associative", compose(m.action, tensor(ix, mu)),
                     compose(m.action, tensor(m.action, it)));
        expect_equal(r, "action-unital", compose(m.action, insert_unit(m.ring, x, nullptr)), ix);
    }
    return r;
}

Report check_ring_bimodule(const RingBimodule& b) {
    Report r{"ring-bimodule", b.left.name};
    if (b.left.carrier != b.right.carrier || b.left.side != Side::left || b.right.side != Side::right) {
        r.error("actions do not share a carrier");
        return r;
    }
    r.merge(check_ring_module(b.left));
    r.merge(check_ring_module(b.right));
    if (r.status == Status::error) return r;
    expect_equal(r, "actions-commute", compose(b.right.action, tensor(b.left.action, id(b.right.ring->carrier))),
                 compose(b.left.action, tensor(id(b.left.ring->carrier), b.right.action)));
    return r;
}

RingModule regular_ring_module(const ExtPtr& e, Side side) { return {side, e, e->carrier, e->mult, e->name}; }

RingBimodule regular_ring_bimodule(const ExtPtr& e) {
    return {regular_ring_module(e, Side::left), regular_ring_module(e, Side::right)};
}

namespace {

LinearMap linear_defect(const LinearMap& f, const RingModule& from, const RingModule& to) {
    auto it = id(from.ring->carrier);
    auto lifted = from.side == Side::left ? tensor(it, f) : tensor(f, it);
    return compose(to.action, lifted) - compose(f, from.action);
}

}  // namespace

Report check_ring_linear(const LinearMap& f, const RingModule& from, const RingModule& to, const std::string& tag) {
    Report r{"ring-linear", from.name + "->" + to.name};
    if (from.ring != to.ring || from.side != to.side || f.dom != from.carrier || f.cod != to.carrier) {
        r.error("map and modules do not match");
        return r;
    }
    auto it = id(from.ring->carrier);
    auto lifted = from.side == Side::left ? tensor(it, f) : tensor(f, it);
    expect_equal(r, tag, compose(to.action, lifted), compose(f, from.action));
    return r;
}

std::vector<LinearMap> ring_linear_basis(const RingModule& from, const RingModule& to) {
    if (from.ring != to.ring || from.side != to.side) throw InputError("modules do not match");
    return solve_in_span(bilinear_basis(from.carrier, to.carrier),
                         [&](const LinearMap& f) { return linear_defect(f, from, to).mat; });
}

std::vector<LinearMap> ring_bilinear_basis(const RingBimodule& from, const RingBimodule& to) {
    return solve_in_span(bilinear_basis(from.left.carrier, to.left.carrier), [&](const LinearMap& f) {
        auto dl = linear_defect(f, from.left, to.left), dr = linear_defect(f, from.right, to.right);
        return hstack({dl.mat.transpose(), dr.mat.transpose()}).transpose();
    });
}

Report check_rt_object(const RTObject& o) {
    Report r{"rt-object", o.name};
    SpacePtr t = o.ext->carrier, p = o.carrier;
    if (!shape(r, o.twist, otimes(t, p), otimes(p, t), "twist")) return r;
    auto b = check_bilinear(o.twist, "twist-bilinear");
    r.merge(b);
    if (!b.ok()) return r;
    auto it = id(t), ip = id(p);
    const LinearMap& mu = o.ext->mult;
    expect_equal(r, "twist-multiplication", compose({tensor(ip, mu), tensor(o.twist, it), tensor(it, o.twist)}),
                 compose(o.twist, tensor(mu, ip)));
    expect_equal(r, "twist-unit", compose(o.twist, insert_unit(o.ext, nullptr, p)), insert_unit(o.ext, p, nullptr));
    return r;
}

RTObject rt_identity_object(const ExtPtr& e) {
    return {e, base_space(e->base), compose(unit_left_inv(e->carrier), unit_right(e->carrier)), e->base->name()};
}

RTObject rt_tensor_objects(const RTObject& a, const RTObject& b) {
    auto twist = compose(tensor(id(a.carrier), b.twist), tensor(a.twist, id(b.carrier)));
    return {a.ext, otimes(a.carrier, b.carrier), twist, a.name + "(x)" + b.name};
}

RingBimodule induced_t_bimodule(const RTObject& o, const RingBimodule& x) {
    SpacePtr px = otimes(o.carrier, x.left.carrier);
    auto ip = id(o.carrier);
    auto left = compose(tensor(ip, x.left.action), tensor(o.twist, id(x.left.carrier)));
    std::string name = o.name + "(x)" + x.left.name;
    return {{Side::left, o.ext, px, left, name}, {Side::right, x.right.ring, px, tensor(ip, x.right.action), name}};
}

RingBimodule rt_free_bimodule(const RTObject& o) { return induced_t_bimodule(o, regular_ring_bimodule(o.ext)); }

Report check_rt_morphism(const LinearMap& f, const RTObject& from, const RTObject& to) {
    Report r{"rt-morphism", from.name + "->" + to.name};
    auto bf = rt_free_bimodule(from), bt = rt_free_bimodule(to);
    if (from.ext != to.ext || !shape(r, f, bf.left.carrier, bt.left.carrier, "morphism")) return r;
    auto b = check_bilinear(f);
    r.merge(b);
    if (!b.ok()) return r;
    r.merge(check_ring_linear(f, bf.left, bt.left, "left-linear"));
    r.merge(check_ring_linear(f, bf.right, bt.right, "right-linear"));
    return r;
}

Report strict_morphism_check(const LinearMap& f, const RTObject& from, const RTObject& to) {
    Report r{"strict-morphism", from.name + "->" + to.name};
    if (from.ext != to.ext || !shape(r, f, from.carrier, to.carrier, "map")) return r;
    auto b = check_bilinear(f);
    r.merge(b);
    if (!b.ok()) return r;
    auto it = id(from.ext->carrier);
    expect_equal(r, "strict-intertwining", compose(to.twist, tensor(it, f)), compose(tensor(f, it), from.twist));
    return r;
}

Report check_wreath(const Wreath& w) {
    Report r{"wreath", w.name};
    r.merge(check_rt_object(w.obj));
    if (r.status == Status::error) return r;
    SpacePtr rs = w.obj.carrier, t = w.obj.ext->carrier, rt = otimes(rs, t);
    if (!shape(r, w.eta, t, rt, "eta") || !shape(r, w.mu, otimes({rs, rs, t}), rt, "mu")) return r;
    auto free = rt_free_bimodule(w.obj), free2 = rt_free_bimodule(rt_tensor_objects(w.obj, w.obj));
    auto reg = regular_ring_bimodule(w.obj.ext);
    for (auto [f, from, prefix] : {std::tuple{w.eta, reg, "eta-"}, std::tuple{w.mu, free2, "mu-"}}) {
        auto b = check_bilinear(f);
        r.merge(b, prefix);
        if (!b.ok()) continue;
        r.merge(check_ring_linear(f, from.left, free.left, "left-linear"), prefix);
        r.merge(check_ring_linear(f, from.right, free.right, "right-linear"), prefix);
    }
    if (r.status == Status::error) return r;
    auto ir = id(rs);
    const LinearMap& tw = w.obj.twist;
    expect_equal(r, "wreath-unit", compose(w.mu, tensor(ir, w.eta)), id(rt));
    expect_equal(r, "wreath-twisted-unit", compose({w.mu, tensor(ir, tw), tensor(w.eta, ir)}), tw);
    expect_equal(r, "wreath-associativity", compose({w.mu, tensor(ir, tw), tensor(w.mu, ir)}),
                 compose({w.mu, tensor(ir, w.mu), tensor({ir, ir, tw})}));
    return r;
}

Wreath trivial_wreath(const ExtPtr& e) {
    auto obj = rt_identity_object(e);
    return {obj, unit_left_inv(e->carrier), tensor(unit_left(obj.carrier), id(e->carrier)), "trivial(" + e->name + ")"};
}

ExtPtr wreath_product(const Wreath& w) {
    SpacePtr rs = w.obj.carrier, t = w.obj.ext->carrier;
    auto ir = id(rs), it = id(t);
    auto mult = compose({tensor(ir, w.obj.ext->mult), tensor(w.mu, it), tensor({ir, w.obj.twist, it})});
    return extension_on(w.obj.ext->base, otimes(rs, t), mult, compose(w.eta, w.obj.ext->unit),
                        w.obj.name + "#" + w.obj.ext->name);
}

AlgebraMorphism wreath_unit_morphism(const Wreath& w, const ExtPtr& product) {
    return {w.obj.ext->total, product->total, w.eta.mat};
}

Report check_wreath_module(const Wreath& w, Side side, const RTObject& y, const LinearMap& action) {
    bool left = side == Side::left;
    Report r{left ? "left-wreath-module" : "right-wreath-module", y.name};
    r.merge(check_rt_object(y));
    if (r.status == Status::error) return r;
    SpacePtr rs = w.obj.carrier, t = w.obj.ext->carrier, ys = y.carrier;
    auto src = left ? rt_tensor_objects(w.obj, y) : rt_tensor_objects(y, w.obj);
    if (!shape(r, action, otimes(src.carrier, t), otimes(ys, t), "action")) return r;
    r.merge(check_rt_morphism(action, src, y), "action-");
    if (r.status == Status::error) return r;
    auto ir = id(rs), iy = id(ys);
    const LinearMap &tr = w.obj.twist, &ty = y.twist;
    if (left) {
        expect_equal(r, "module-unit", compose({action, tensor(ir, ty), tensor(w.eta, iy)}), ty);
        expect_equal(r, "module-associativity", compose({action, tensor(ir, action), tensor({ir, ir, ty})}),
                     compose({action, tensor(ir, ty), tensor(w.mu, iy)}));
    } else {
        expect_equal(r, "module-unit", compose(action, tensor(iy, w.eta)), id(otimes(ys, t)));
        expect_equal(r, "module-associativity", compose({action, tensor(iy, w.mu), tensor({iy, ir, tr})}),
                     compose({action, tensor(iy, tr), tensor(action, ir)}));
    }
    return r;
}

Report check_wreath_bimodule(const Wreath& w, const RTObject& y, const LinearMap& left, const LinearMap& right) {
    Report r{"wreath-bimodule", y.name};
    r.merge(check_wreath_module(w, Side::left, y, left), "left-");
    r.merge(check_wreath_module(w, Side::right, y, right), "right-");
    if (r.status == Status::error) return r;
    const ExtPtr& e = w.obj.ext;
    SpacePtr rs = w.obj.carrier, t = e->carrier, ys = y.carrier;
    auto ir = id(rs), iy = id(ys), it = id(t);
    const LinearMap& mu = e->mult;
    auto lhs = compose({left, tensor({ir, iy, mu}), tensor({ir, right, it}), insert_unit(e, otimes({rs, ys, rs}), t)});
    auto rhs = compose({right, tensor({iy, ir, mu}), tensor({iy, w.obj.twist, it}), tensor({left, ir, it}),
                        insert_unit(e, otimes(rs, ys), otimes(rs, t))});
    expect_equal(r, "bimodule-compatibility", lhs, rhs);
    return r;
}

Report check_lt_object(const LTObject& o) {
    Report r{"lt-object", o.name};
    SpacePtr rs = o.ext->carrier, u = o.carrier;
    if (!shape(r, o.twist, otimes(u, rs), otimes(rs, u), "twist")) return r;
    auto b = check_bilinear(o.twist, "twist-bilinear");
    r.merge(b);
    if (!b.ok()) return r;
    auto ir = id(rs), iu = id(u);
    const LinearMap& mu = o.ext->mult;
    expect_equal(r, "twist-multiplication", compose(o.twist, tensor(iu, mu)),
                 compose({tensor(mu, iu), tensor(ir, o.twist), tensor(o.twist, ir)}));
    expect_equal(r, "twist-unit", compose(o.twist, insert_unit(o.ext, u, nullptr)), insert_unit(o.ext, nullptr, u));
    return r;
}

RingBimodule lt_free_bimodule(const LTObject& o) {
    SpacePtr ru = otimes(o.ext->carrier, o.carrier);
    auto iu = id(o.carrier);
    const LinearMap& mu = o.ext->mult;
    std::string name = o.ext->name + "(x)" + o.name;
    return {{Side::left, o.ext, ru, tensor(mu, iu), name},
            {Side::right, o.ext, ru, compose(tensor(mu, iu), tensor(id(o.ext->carrier), o.twist)), name}};
}

Report check_l_wreath(const LWreath& w) {
    Report r{"l-wreath", w.name};
    r.merge(check_lt_object(w.obj));
    if (r.status == Status::error) return r;
    SpacePtr rs = w.obj.ext->carrier, u = w.obj.carrier, ru = otimes(rs, u);
    if (!shape(r, w.eta, rs, ru, "eta") || !shape(r, w.mu, otimes({rs, u, u}), ru, "mu")) return r;
    auto iu = id(u);
    const LinearMap& tw = w.obj.twist;
    LTObject uu{w.obj.ext, otimes(u, u), compose(tensor(tw, iu), tensor(iu, tw)), w.obj.name + "(x)" + w.obj.name};
    auto free = lt_free_bimodule(w.obj), free2 = lt_free_bimodule(uu);
    auto reg = regular_ring_bimodule(w.obj.ext);
    for (auto [f, from, prefix] : {std::tuple{w.eta, reg, "eta-"}, std::tuple{w.mu, free2, "mu-"}}) {
        auto b = check_bilinear(f);
        r.merge(b, prefix);
        if (!b.ok()) continue;
        r.merge(check_ring_linear(f, from.left, free.left, "left-linear"), prefix);
        r.merge(check_ring_linear(f, from.right, free.right, "right-linear"), prefix);
    }
    if (r.status == Status::error) return r;
    expect_equal(r, "wreath-unit", compose(w.mu, tensor(w.eta, iu)), id(ru));
    expect_equal(r, "wreath-twisted-unit", compose({w.mu, tensor(tw, iu), tensor(iu, w.eta)}), tw);
    expect_equal(r, "wreath-associativity", compose({w.mu, tensor(tw, iu), tensor(iu, w.mu)}),
                 compose({w.mu, tensor(w.mu, iu), tensor({tw, iu, iu})}));
    return r;
}

ExtPtr l_wreath_product(const LWreath& w) {
    SpacePtr rs = w.obj.ext->carrier, u = w.obj.carrier;
    auto ir = id(rs), iu = id(u);
    auto mult = compose({tensor(w.obj.ext->mult, iu), tensor(ir, w.mu), tensor({ir, w.obj.twist, iu})});
    return extension_on(w.obj.ext->base, otimes(rs, u), mult, compose(w.eta, w.obj.ext->unit),
                        w.obj.ext->name + "#" + w.obj.name);
}

Report check_ttp_laws(const ExtPtr& r, const ExtPtr& t, const LinearMap& twist) {
    Report rep{"twisted-tensor", r->name + "," + t->name};
    SpacePtr rs = r->carrier, ts = t->carrier;
    if (r->base != t->base) {
        rep.error("the two rings have different base algebras");
        return rep;
    }
    if (!shape(rep, twist, otimes(ts, rs), otimes(rs, ts), "twist")) return rep;
    auto b = check_bilinear(twist, "twist-bilinear");
    rep.merge(b);
    if (!b.ok()) return rep;
    auto ir = id(rs), it = id(ts);
    expect_equal(rep, "TTP-1", compose(twist, insert_unit(t, nullptr, rs)), insert_unit(t, rs, nullptr));
    expect_equal(rep, "TTP-2", compose(twist, tensor(t->mult, ir)),
                 compose({tensor(ir, t->mult), tensor(twist, it), tensor(it, twist)}));
    expect_equal(rep, "TTP-3", compose(twist, insert_unit(r, ts, nullptr)), insert_unit(r, nullptr, ts));
    expect_equal(rep, "TTP-4", compose(twist, tensor(it, r->mult)),
                 compose({tensor(r->mult, it), tensor(ir, twist), tensor(twist, ir)}));
    return rep;
}

Wreath ttp_wreath(const ExtPtr& r, const ExtPtr& t, const LinearMap& twist) {
    RTObject obj{t, r->carrier, twist, r->name};
    return {obj, insert_unit(r, nullptr, t->carrier), tensor(r->mult, id(t->carrier)), r->name + " over " + t->name};
}

LWreath ttp_l_wreath(const ExtPtr& r, const ExtPtr& t, const LinearMap& twist) {
    LTObject obj{r, t->carrier, twist, t->name};
    return {obj, insert_unit(t, r->carrier, nullptr), tensor(id(r->carrier), t->mult), t->name + " over " + r->name};
}

TwistedTensor twisted_tensor_product(const ExtPtr& r, const ExtPtr& t, const LinearMap& twist) {
    auto pre = check_ttp_laws(r, t, twist);
    if (!pre.ok()) throw InputError("twisted tensor product laws fail: " + failed_laws(pre));
    auto wt = ttp_wreath(r, t, twist);
    auto wr = ttp_l_wreath(r, t, twist);
    return {r, t, twist, wt, wr, wreath_product(wt), l_wreath_product(wr)};
}

Report check_left_module_twisting(const TwistedTensor& tt, const ModuleTwist& m) {
    Report r{"module-twisting", m.name};
    r.merge(check_ring_module(m.x));
    if (r.status == Status::error) return r;
    SpacePtr x = m.x.carrier, ts = tt.t->carrier, rs = tt.r->carrier;
    if (m.x.ring != tt.r || m.x.side != Side::left) {
        r.error("X must be a left module over R");
        return r;
    }
    if (!shape(r, m.twist, otimes(ts, x), otimes(x, ts), "twist")) return r;
    auto b = check_bilinear(m.twist, "twist-bilinear");
    r.merge(b);
    if (!b.ok()) return r;
    auto ix = id(x), it = id(ts), ir = id(rs);
    const LinearMap &tw = m.twist, &lx = m.x.action;
    expect_equal(r, "Cap-1", compose(tw, insert_unit(tt.t, nullptr, x)), insert_unit(tt.t, x, nullptr));
    expect_equal(r, "Cap-2", compose(tw, tensor(tt.t->mult, ix)),
                 compose({tensor(ix, tt.t->mult), tensor(tw, it), tensor(it, tw)}));
    expect_equal(r, "Cap-3", compose(tw, tensor(it, lx)), compose({tensor(lx, it), tensor(ir, tw), tensor(tt.twist, ix)}));
    return r;
}

LinearMap twisting_wreath_action(const ModuleTwist& m, const ExtPtr& t) { return tensor(m.x.action, id(t->carrier)); }

RingModule induced_action(const TwistedTensor& tt, const ModuleTwist& m, const RingModule& y) {
    SpacePtr x = m.x.carrier, ys = y.carrier;
    auto it = id(tt.t->carrier), iy = id(ys);
    auto act = compose({tensor(id(x), y.action), tensor({m.x.action, it, iy}), tensor({id(tt.r->carrier), m.twist, iy})});
    SpacePtr xy = otimes(x, ys);
    return {Side::left, tt.product_t, xy, on_dom(act, otimes(tt.product_t->carrier, xy)), m.name + "(x)" + y.name};
}

Report check_induced_action(const TwistedTensor& tt, const ModuleTwist& m, const RingModule& y) {
    Report r{"induced-action", m.name + "(x)" + y.name};
    if (y.ring != tt.t || y.side != Side::left) {
        r.error("Y must be a left module over T");
        return r;
    }
    auto a = induced_action(tt, m, y);
    r.merge(check_ring_module(a));
    if (r.status == Status::error) return r;
    expect_equal(r, "r-compatible", compose(a.action, insert_unit(tt.t, tt.r->carrier, a.carrier)),
                 tensor(m.x.action, id(y.carrier)));
    return r;
}

Report check_bimodule_twisting(const TwistedTensor& tt, const BimoduleTwist& b) {
    Report r{"bimodule-twisting", b.name};
    SpacePtr x = b.x.left.carrier, v = b.v.left.carrier, ts = tt.t->carrier, rs = tt.r->carrier;
    if (!shape(r, b.x_twist, otimes(ts, x), otimes(x, ts), "x twist") ||
        !shape(r, b.v_twist, otimes(v, rs), otimes(rs, v), "v twist"))
        return r;
    auto ix = id(x), iv = id(v), it = id(ts), ir = id(rs);
    const LinearMap &rx = b.x.right.action, &lv = b.v.left.action;
    auto top = compose({tensor(rx, iv), tensor(ix, b.v_twist), tensor({ix, lv, ir}), tensor({b.x_twist, iv, ir})});
    auto bottom = compose({tensor(ix, lv), tensor(b.x_twist, iv), tensor({it, rx, iv}), tensor({it, ix, b.v_twist})});
    expect_equal(r, "Cap-6", top, bottom);
    return r;
}

RingBimodule induced_bimodule(const TwistedTensor& tt, const BimoduleTwist& b) {
    SpacePtr x = b.x.left.carrier, v = b.v.left.carrier, xv = otimes(x, v), p = tt.product_t->carrier;
    auto ix = id(x), iv = id(v), it = id(tt.t->carrier), ir = id(tt.r->carrier);
    auto left = compose({tensor(ix, b.v.left.action), tensor({b.x.left.action, it, iv}), tensor({ir, b.x_twist, iv})});
    auto right =
        compose({tensor(b.x.right.action, iv), tensor({ix, ir, b.v.right.action}), tensor({ix, b.v_twist, it})});
    std::string name = b.x.left.name + "(x)" + b.v.left.name;
    return {{Side::left, tt.product_t, xv, on_dom(left, otimes(p, xv)), name},
            {Side::right, tt.product_t, xv, on_dom(right, otimes(xv, p)), name}};
}

RingBimodule functor_o_dual(const Wreath& w, const ExtPtr& product, const RTObject& y, const LinearMap& action) {
    const ExtPtr& e = w.obj.ext;
    SpacePtr yt = otimes(y.carrier, e->carrier);
    auto iy = id(y.carrier), it = id(e->carrier);
    auto left = compose({tensor(iy, e->mult), tensor(action, it), tensor({id(w.obj.carrier), y.twist, it})});
    return {{Side::left, product, yt, on_dom(left, otimes(product->carrier, yt)), y.name + "(x)" + e->name},
            {Side::right, e, yt, tensor(iy, e->mult), y.name + "(x)" + e->name}};
}

RTObject v_dual(const RingModule& x) {
    if (x.side != Side::left) throw InputError("need a left module");
    return {x.ring, x.carrier, compose(insert_unit(x.ring, x.carrier, nullptr), x.action), x.name};
}

LinearMap dual_hat(const RTObject& o, const RingModule&, const LinearMap& g) {
    return compose(tensor(id(o.carrier), o.ext->mult), tensor(g, id(o.ext->carrier)));
}

LinearMap dual_tilde(const RTObject& o, const RingModule& x, const LinearMap& f) {
    return compose(f, insert_unit(o.ext, x.carrier, nullptr));
}

}  // namespace coringlab
