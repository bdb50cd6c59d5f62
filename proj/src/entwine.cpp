#include "coringlab/entwine.hpp"

namespace coringlab {

namespace {

SpacePtr carrier_of(const AlgebraPtr& a) { return space(underlying(a)); }

}  // namespace

Report check_entwining(const EntwiningStructure& e) {
    Report r{"entwining", e.name};
    const Coring& c = *e.coalgebra;
    SpacePtr a = carrier_of(e.algebra);
    if (c.base->dim() != 1 || e.psi.dom != otimes(c.carrier, a) || e.psi.cod != otimes(a, c.carrier)) {
        r.error("psi must map C (x) A to A (x) C over the ground field");
        return r;
    }
    auto ic = id(c.carrier), ia = id(a);
    auto mu = mult_map(e.algebra), eta = unit_map(e.algebra);
    expect_equal(r, "entwining-multiplication", compose(e.psi, tensor(ic, mu)),
                 compose({tensor(mu, ic), tensor(ia, e.psi), tensor(e.psi, ia)}));
    expect_equal(r, "entwining-unit", compose({e.psi, tensor(ic, eta), unit_right_inv(c.carrier)}),
                 compose(tensor(eta, ic), unit_left_inv(c.carrier)));
    expect_equal(r, "entwining-comultiplication", compose(tensor(ia, c.comult), e.psi),
                 compose({tensor(e.psi, ic), tensor(ic, e.psi), tensor(c.comult, ia)}));
    expect_equal(r, "entwining-counit", compose({unit_right(a), tensor(ia, c.counit), e.psi}),
                 compose(unit_left(a), tensor(c.counit, ia)));
    return r;
}

EntwiningStructure flip_entwining(const AlgebraPtr& a, const CoringPtr& c) {
    return {a, c, swap_map(c->carrier, carrier_of(a)), "flip"};
}

BimodulePtr entwined_bimodule(const EntwiningStructure& e) {
    const AlgebraPtr& a = e.algebra;
    std::size_t da = a->dim(), dc = e.coalgebra->carrier->dim();
    Field f = a->field();
    Matrix psi = e.psi.mat;   // column c * da + a, row a * dc + c
    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < da; ++i) {
        Matrix l(da * dc, da * dc, f), r(da * dc, da * dc, f);
        for (std::size_t a1 = 0; a1 < da; ++a1)
            for (std::size_t c = 0; c < dc; ++c) {
                std::size_t col = a1 * dc + c;
                auto p = a->basis_product(i, a1);
                for (std::size_t a2 = 0; a2 < da; ++a2)
                    if (!p[a2].is_zero()) l(a2 * dc + c, col) += p[a2];
                for (std::size_t row = 0; row < da * dc; ++row) {
                    const Scalar& s = psi(row, c * da + i);
                    if (s.is_zero()) continue;
                    auto q = a->basis_product(a1, row / dc);
                    for (std::size_t a2 = 0; a2 < da; ++a2)
                        if (!q[a2].is_zero()) r(a2 * dc + row % dc, col) += q[a2] * s;
                }
            }
        left.push_back(l);
        right.push_back(r);
    }
    return std::make_shared<Bimodule>(a, a, da * dc, left, right, a->name() + "(x)" + e.coalgebra->name);
}

CoringPtr entwined_coring(const EntwiningStructure& e) {
    const AlgebraPtr& a = e.algebra;
    const Coring& c = *e.coalgebra;
    std::size_t dc = c.carrier->dim();
    SpacePtr s = space(entwined_bimodule(e));
    auto delta = from_terms(s, otimes(s, s), [&](const Tuple& t) {
        std::size_t ai = t[0] / dc, ci = t[0] % dc;
        Terms out;
        for (std::size_t q = 0; q < c.comult.cod->dim(); ++q) {
            const Scalar& x = c.comult.mat(q, ci);
            if (x.is_zero()) continue;
            const Tuple& cc = c.comult.cod->lift(q);
            for (std::size_t u = 0; u < a->dim(); ++u)
                if (!a->unit()[u].is_zero()) out.push_back({Tuple{ai * dc + cc[0], u * dc + cc[1]}, x * a->unit()[u]});
        }
        return out;
    });
    auto eps = from_terms(s, base_space(a), [&](const Tuple& t) {
        std::size_t ai = t[0] / dc, ci = t[0] % dc;
        return Terms{{{ai}, c.counit.mat(0, ci)}};
    });
    return make_coring(a, s, delta, eps, a->name() + "(x)" + c.name);
}

Terms entwined_normalize(const EntwiningStructure& e, std::size_t a0, std::size_t c0, std::size_t a1) {
    const AlgebraPtr& a = e.algebra;
    std::size_t da = a->dim(), dc = e.coalgebra->carrier->dim();
    Terms out;
    for (std::size_t row = 0; row < da * dc; ++row) {
        const Scalar& s = e.psi.mat(row, c0 * da + a1);
        if (s.is_zero()) continue;
        auto p = a->basis_product(a0, row / dc);
        for (std::size_t q = 0; q < da; ++q)
            if (!p[q].is_zero()) out.push_back({Tuple{q, row % dc}, p[q] * s});
    }
    return out;
}

Report check_bialgebra(const Bialgebra& h) {
    Report r{"bialgebra", h.algebra->name()};
    SpacePtr s = carrier_of(h.algebra);
    if (h.coalgebra->carrier != s || h.coalgebra->base->dim() != 1) {
        r.error("coalgebra must live on the underlying space of the algebra");
        return r;
    }
    r.merge(check_algebra(*h.algebra));
    r.merge(check_coring(*h.coalgebra));
    auto mu = mult_map(h.algebra), eta = unit_map(h.algebra);
    const Coring& c = *h.coalgebra;
    auto ih = id(s);
    // (mu (x) mu)(H (x) flip (x) H)(Delta (x) Delta)
    auto mid = tensor({ih, swap_map(s, s), ih});
    expect_equal(r, "comultiplication-multiplicative", compose(c.comult, mu),
                 compose({tensor(mu, mu), mid, tensor(c.comult, c.comult)}));
    auto k = base_space(c.base);
    expect_equal(r, "counit-multiplicative", compose(c.counit, mu),
                 compose(unit_left(k), tensor(c.counit, c.counit)));
    expect_equal(r, "comultiplication-unital", compose(c.comult, eta),
                 compose(tensor(eta, eta), unit_left_inv(k)));
    expect_equal(r, "counit-unital", compose(c.counit, eta), id(k));
    return r;
}

Bialgebra group_bialgebra(const AlgebraPtr& g) { return {g, grouplike_coalgebra(underlying(g), g->name())}; }

Report check_doi_koppinen_data(const DoiKoppinenData& d) {
    Report r{"doi-koppinen", d.a->name()};
    SpacePtr h = carrier_of(d.h.algebra), a = carrier_of(d.a), c = d.c->carrier;
    if (d.coaction.dom != a || d.coaction.cod != otimes(a, h) || d.action.dom != otimes(c, h) ||
        d.action.cod != c || d.c->base->dim() != 1) {
        r.error("coaction or action has the wrong shape");
        return r;
    }
    r.merge(check_bialgebra(d.h));
    if (r.status == Status::error) return r;
    auto hc = std::make_shared<Coring>(*d.h.coalgebra);
    r.merge(check_comodule({Side::right, hc, a, d.coaction, d.a->name()}));
    auto mua = mult_map(d.a), etaa = unit_map(d.a), muh = mult_map(d.h.algebra), etah = unit_map(d.h.algebra);
    auto ia = id(a), ih = id(h), ic = id(c);
    expect_equal(r, "coaction-multiplicative", compose(d.coaction, mua),
                 compose({tensor(mua, muh), tensor({ia, swap_map(h, a), ih}), tensor(d.coaction, d.coaction)}));
    auto k = base_space(d.c->base);
    expect_equal(r, "coaction-unital", compose(d.coaction, etaa), compose(tensor(etaa, etah), unit_left_inv(k)));
    expect_equal(r, "action-associative", compose(d.action, tensor(d.action, ih)),
                 compose(d.action, tensor(ic, muh)));
    expect_equal(r, "action-unital", compose({d.action, tensor(ic, etah), unit_right_inv(c)}), ic);
    const Coring& hcor = *d.h.coalgebra;
    expect_equal(r, "action-comultiplicative", compose(d.c->comult, d.action),
                 compose({tensor(d.action, d.action), tensor({ic, swap_map(c, h), ih}),
                          tensor(d.c->comult, hcor.comult)}));
    expect_equal(r, "action-counital", compose(d.c->counit, d.action),
                 compose(unit_left(k), tensor(d.c->counit, hcor.counit)));
    return r;
}

EntwiningStructure doi_koppinen_entwining(const DoiKoppinenData& d) {
    auto pre = check_doi_koppinen_data(d);
    if (!pre.ok()) {
        std::string laws;
        for (const auto& w : pre.witnesses) laws += (laws.empty() ? "" : ", ") + w.equation;
        throw InputError("Doi-Koppinen preconditions fail: " + (laws.empty() ? pre.message : laws));
    }
    SpacePtr h = carrier_of(d.h.algebra), a = carrier_of(d.a), c = d.c->carrier;
    // c (x) a -> c (x) a0 (x) a1 -> a0 (x) c (x) a1 -> a0 (x) c.a1
    auto psi = compose({tensor(id(a), d.action), tensor(swap_map(c, a), id(h)), tensor(id(c), d.coaction)});
    return {d.a, d.c, psi, "doi-koppinen"};
}

RObject lift_r_object(const EntwiningStructure& e, const CoringPtr& entwined, const RObject& n) {
    const AlgebraPtr& a = e.algebra;
    SpacePtr ns = n.carrier;
    if (ns->left_algebra()->dim() != 1 || ns->right_algebra()->dim() != 1 || n.coring != e.coalgebra)
        throw InputError("lift needs an object over the coalgebra of the entwining");
    std::size_t da = a->dim(), dc = e.coalgebra->carrier->dim(), dn = ns->dim();
    SpacePtr ana = space(outer_bimodule(a, dn, a, a->name() + "(x)" + n.name + "(x)" + a->name()));
    SpacePtr ac = entwined->carrier;
    const Matrix& psi = e.psi.mat;
    const Matrix& nt = n.twist.mat;   // column c * dn + n, row n * dc + c
    auto twist = from_terms(otimes(ac, ana), otimes(ana, ac), [&](const Tuple& t) {
        std::size_t a0 = t[0] / dc, c0 = t[0] % dc;
        std::size_t a1 = t[1] / (dn * da), n0 = (t[1] / da) % dn, a2 = t[1] % da;
        Terms out;
        // a0 psi(c0 (x) a1) (x) n0 (x) a2
        for (std::size_t r1 = 0; r1 < da * dc; ++r1) {
            const Scalar& s1 = psi(r1, c0 * da + a1);
            if (s1.is_zero()) continue;
            auto p = a->basis_product(a0, r1 / dc);
            std::size_t c1 = r1 % dc;
            // n(c1 (x) n0) = sum n1 (x) c2
            for (std::size_t r2 = 0; r2 < dn * dc; ++r2) {
                const Scalar& s2 = nt(r2, c1 * dn + n0);
                if (s2.is_zero()) continue;
                std::size_t n1 = r2 / dc, c2 = r2 % dc;
                // psi(c2 (x) a2) = sum a3 (x) c3
                for (std::size_t r3 = 0; r3 < da * dc; ++r3) {
                    const Scalar& s3 = psi(r3, c2 * da + a2);
                    if (s3.is_zero()) continue;
                    std::size_t a3 = r3 / dc, c3 = r3 % dc;
                    for (std::size_t ap = 0; ap < da; ++ap) {
                        if (p[ap].is_zero()) continue;
                        for (std::size_t u = 0; u < da; ++u)
                            if (!a->unit()[u].is_zero())
                                out.push_back({Tuple{(ap * dn + n1) * da + a3, u * dc + c3},
                                               p[ap] * s1 * s2 * s3 * a->unit()[u]});
                    }
                }
            }
        }
        return out;
    });
    return {entwined, ana, twist, "lift(" + n.name + ")"};
}

RMonoid entwining_wreath(const EntwiningStructure& e) {
    SpacePtr c = e.coalgebra->carrier, a = carrier_of(e.algebra);
    RObject obj{e.coalgebra, a, e.psi, e.algebra->name()};
    auto oo = r_tensor_objects(obj, obj);
    auto unit = r_identity_object(e.coalgebra);
    RMorphism mu{oo, obj, tensor(id(c), mult_map(e.algebra))};
    RMorphism eta{unit, obj, tensor(id(c), unit_map(e.algebra))};
    return {obj, mu, eta};
}

}  // namespace coringlab
