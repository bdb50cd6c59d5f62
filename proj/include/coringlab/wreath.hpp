#pragma once

#include "coringlab/coring.hpp"

namespace coringlab {

// A -> T with T seen as an A-bimodule and its structure maps over A
struct RingExtension {
    AlgebraPtr base, total;
    AlgebraMorphism iota;
    SpacePtr carrier;
    LinearMap mult;   // T (x)_A T -> T
    LinearMap unit;   // A -> T
    std::string name;
};

using ExtPtr = std::shared_ptr<const RingExtension>;

ExtPtr ring_extension(const AlgebraPtr& base, const AlgebraPtr& total, const AlgebraMorphism& iota);
ExtPtr over_field(const AlgebraPtr& total);   // k -> T on the underlying space
// an algebra on the space s with the given multiplication s (x)_A s -> s and unit A -> s
ExtPtr extension_on(const AlgebraPtr& base, const SpacePtr& s, const LinearMap& mult, const LinearMap& unit,
                    std::string name);
Report check_ring_extension(const RingExtension& e);

// X (x) Y -> X (x) T (x) Y through 1_T; either side may be null
LinearMap insert_unit(const ExtPtr& e, const SpacePtr& before, const SpacePtr& after);

struct RingModule {
    Side side = Side::left;
    ExtPtr ring;
    SpacePtr carrier;
    LinearMap action;   // left: T (x) X -> X, right: X (x) T -> X
    std::string name;
};

struct RingBimodule {
    RingModule left, right;
};

Report check_ring_module(const RingModule& m);
Report check_ring_bimodule(const RingBimodule& b);
RingModule regular_ring_module(const ExtPtr& e, Side side);
RingBimodule regular_ring_bimodule(const ExtPtr& e);
Report check_ring_linear(const LinearMap& f, const RingModule& from, const RingModule& to,
                         const std::string& tag = "linear");
std::vector<LinearMap> ring_linear_basis(const RingModule& from, const RingModule& to);
std::vector<LinearMap> ring_bilinear_basis(const RingBimodule& from, const RingBimodule& to);

// objects of the R category of a ring extension
struct RTObject {
    ExtPtr ext;
    SpacePtr carrier;   // P
    LinearMap twist;    // T (x) P -> P (x) T
    std::string name;
};

Report check_rt_object(const RTObject& o);
RTObject rt_identity_object(const ExtPtr& e);
RTObject rt_tensor_objects(const RTObject& a, const RTObject& b);
// P (x) X with (P (x) l)(p (x) X) and P (x) r
RingBimodule induced_t_bimodule(const RTObject& o, const RingBimodule& x);
RingBimodule rt_free_bimodule(const RTObject& o);   // P (x) T
Report check_rt_morphism(const LinearMap& f, const RTObject& from, const RTObject& to);
// q (T (x) f) = (f (x) T) p for f : P -> Q
Report strict_morphism_check(const LinearMap& f, const RTObject& from, const RTObject& to);

struct Wreath {
    RTObject obj;      // (R, r)
    LinearMap eta;     // T -> R (x) T
    LinearMap mu;      // R (x) R (x) T -> R (x) T
    std::string name;
};

Report check_wreath(const Wreath& w);
Wreath trivial_wreath(const ExtPtr& e);
ExtPtr wreath_product(const Wreath& w);
AlgebraMorphism wreath_unit_morphism(const Wreath& w, const ExtPtr& product);

// side = left: action R (x) Y (x) T -> Y (x) T; right: Y (x) R (x) T -> Y (x) T
Report check_wreath_module(const Wreath& w, Side side, const RTObject& y, const LinearMap& action);
Report check_wreath_bimodule(const Wreath& w, const RTObject& y, const LinearMap& left, const LinearMap& right);

// objects (u, U) of the L category of a ring extension A -> R
struct LTObject {
    ExtPtr ext;
    SpacePtr carrier;   // U
    LinearMap twist;    // U (x) R -> R (x) U
    std::string name;
};

struct LWreath {
    LTObject obj;
    LinearMap eta;   // R -> R (x) U
    LinearMap mu;    // R (x) U (x) U -> R (x) U
    std::string name;
};

Report check_lt_object(const LTObject& o);
RingBimodule lt_free_bimodule(const LTObject& o);   // R (x) U
Report check_l_wreath(const LWreath& w);
ExtPtr l_wreath_product(const LWreath& w);

Report check_ttp_laws(const ExtPtr& r, const ExtPtr& t, const LinearMap& twist);   // twist : T (x) R -> R (x) T
Wreath ttp_wreath(const ExtPtr& r, const ExtPtr& t, const LinearMap& twist);         // over T
LWreath ttp_l_wreath(const ExtPtr& r, const ExtPtr& t, const LinearMap& twist);      // over R

struct TwistedTensor {
    ExtPtr r, t;
    LinearMap twist;
    Wreath over_t;
    LWreath over_r;
    ExtPtr product_t, product_r;
};

// throws InputError naming the failed TTP laws
TwistedTensor twisted_tensor_product(const ExtPtr& r, const ExtPtr& t, const LinearMap& twist);

// X a left R-module with x : T (x) X -> X (x) T
struct ModuleTwist {
    RingModule x;
    LinearMap twist;
    std::string name;
};

Report check_left_module_twisting(const TwistedTensor& tt, const ModuleTwist& m);
LinearMap twisting_wreath_action(const ModuleTwist& m, const ExtPtr& t);   // l_X (x) T
// the action of R (x) T on X (x) Y for a left T-module Y
RingModule induced_action(const TwistedTensor& tt, const ModuleTwist& m, const RingModule& y);
Report check_induced_action(const TwistedTensor& tt, const ModuleTwist& m, const RingModule& y);

struct BimoduleTwist {
    RingBimodule x;          // over R
    RingBimodule v;          // over T
    LinearMap x_twist;       // T (x) X -> X (x) T
    LinearMap v_twist;       // V (x) R -> R (x) V
    std::string name;
};

Report check_bimodule_twisting(const TwistedTensor& tt, const BimoduleTwist& b);
RingBimodule induced_bimodule(const TwistedTensor& tt, const BimoduleTwist& b);

// left wreath module Y to Y (x) T over the wreath product and T
RingBimodule functor_o_dual(const Wreath& w, const ExtPtr& product, const RTObject& y, const LinearMap& action);
RTObject v_dual(const RingModule& x);   // (X, (X (x) 1) l_X)
// g : X -> P (x) T left linear goes to X (x) T -> P (x) T and back
LinearMap dual_hat(const RTObject& o, const RingModule& x, const LinearMap& g);
LinearMap dual_tilde(const RTObject& o, const RingModule& x, const LinearMap& f);

}  // namespace coringlab
