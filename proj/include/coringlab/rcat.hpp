#pragma once

#include "coringlab/coring.hpp"

namespace coringlab {

struct RObject {
    CoringPtr coring;
    SpacePtr carrier;   // M
    LinearMap twist;    // C (x) M -> M (x) C
    std::string name;
};

struct RMorphism {
    RObject from, to;
    LinearMap map;   // C (x) M -> C (x) M'
};

struct LObject {
    CoringPtr coring;
    SpacePtr carrier;   // L
    LinearMap twist;    // L (x) C -> C (x) L
    std::string name;
};

struct LMorphism {
    LObject from, to;
    LinearMap map;   // L (x) C -> L' (x) C
};

Report check_r_object(const RObject& o);
Bicomodule r_object_bicomodule(const RObject& o);
Report check_r_morphism(const RMorphism& m);
RObject r_identity_object(const CoringPtr& c);
RMorphism r_identity_morphism(const RObject& o);
RObject r_tensor_objects(const RObject& a, const RObject& b);
RMorphism r_tensor_morphisms(const RMorphism& f, const RMorphism& g);
// the same product read off the six-arrow diagram
LinearMap r_tensor_morphisms_diagram(const RMorphism& f, const RMorphism& g);
RMorphism r_compose(const RMorphism& g, const RMorphism& f);

RObject canonical_c_object(const CoringPtr& c);
// (D, d) with d(c (x) d) = eps(c) d1 (x) phi(d2) for phi : D -> C
RObject object_from_coring_morphism(const LinearMap& phi, const CoringPtr& d, const CoringPtr& c);

// monoids and comonoids in the R category
struct RMonoid {
    RObject obj;
    RMorphism mu;    // obj (x) obj -> obj
    RMorphism eta;   // identity object -> obj
};

struct RComonoid {
    RObject obj;
    RMorphism delta;   // obj -> obj (x) obj
    RMorphism xi;      // obj -> identity object
};

Report check_r_monoid(const RMonoid& m);
Report check_r_comonoid(const RComonoid& m);

Report check_l_object(const LObject& o);
Bicomodule l_object_bicomodule(const LObject& o);
Report check_l_morphism(const LMorphism& m);
LObject l_identity_object(const CoringPtr& c);
LObject l_tensor_objects(const LObject& a, const LObject& b);
LMorphism l_tensor_morphisms(const LMorphism& f, const LMorphism& g);

}  // namespace coringlab
