#pragma once

#include "coringlab/entwine.hpp"

#include <array>

namespace coringlab {

struct Cowreath {
    RObject obj;       // (M, m) over C
    LinearMap xi;      // C (x) M -> C
    LinearMap delta;   // C (x) M -> C (x) M (x) M
    std::string name;
};

// mirror notion: (L, l) in the L category of D
struct LCowreath {
    LObject obj;
    LinearMap xi;      // L (x) D -> D
    LinearMap delta;   // L (x) D -> L (x) L (x) D
    std::string name;
};

Report check_cowreath(const Cowreath& w);
Report check_l_cowreath(const LCowreath& w);
// the same data as a comonoid in the R category
RComonoid cowreath_as_comonoid(const Cowreath& w);
Report check_cowreath_abstract(const Cowreath& w);

Cowreath unit_cowreath(const CoringPtr& c);
// (D, flip) for two coalgebras
Cowreath flip_cowreath(const CoringPtr& c, const CoringPtr& d);

Report check_mixed_distributive(const CoringPtr& c, const CoringPtr& d, const LinearMap& dmap);

struct DistributiveCowreaths {
    Cowreath right;   // (D, d) over C
    LCowreath left;   // (C, d) over D
};

// throws InputError naming the failed CD laws
DistributiveCowreaths distributive_cowreaths(const CoringPtr& c, const CoringPtr& d, const LinearMap& dmap);

// lifts a cowreath over a coalgebra to the entwined coring
Cowreath lift_cowreath(const EntwiningStructure& e, const CoringPtr& entwined, const Cowreath& w);

// C (x) M with (C (x) m (x) M)(C (x) delta)(Delta (x) M) and eps xi
CoringPtr cowreath_product(const Cowreath& w);
Report check_cowreath_product(const Cowreath& w, const CoringPtr& product);

struct CowComodule {
    Side side = Side::right;
    Cowreath w;
    RObject obj;          // (X, x) over C
    LinearMap coaction;   // right: C (x) X -> C (x) X (x) M, left: C (x) X -> C (x) M (x) X
    std::string name;
};

Report check_cow_comodule(const CowComodule& x);
Report check_cow_comodule_morphism(const LinearMap& f, const CowComodule& from, const CowComodule& to);

CowComodule regular_cow_comodule(const Cowreath& w, Side side);
// (M (x) M, (M (x) m)(m (x) M)) on the right
CowComodule square_cow_comodule(const Cowreath& w);

// right C-comodule X over (A, A) to X (x) M over the product coring
Comodule tensor_with_m(const Cowreath& w, const CoringPtr& product, const Comodule& x);
// right comodule over the product coring to a right C-comodule through xi
Comodule restrict_along_xi(const Cowreath& w, const Comodule& y);
// f : Y_xi -> X goes to Y -> X (x) M and back
LinearMap adjunct_of(const Cowreath& w, const Comodule& x, const Comodule& y, const LinearMap& f);
LinearMap adjunct_back(const Cowreath& w, const Comodule& x, const Comodule& y, const LinearMap& g);

// right cow-comodule X to C (x) X over the product coring
Comodule comodule_of_cow(const CoringPtr& product, const CowComodule& x);

// R objects and right C-comodules over (A, A)
Comodule comodule_of_r_object(const RObject& y);
RObject r_object_of_comodule(const Comodule& z);
// g : C (x) Y -> Z colinear goes to C (x) Y -> C (x) Z and back
LinearMap r_adjunct_of(const RObject& y, const Comodule& z, const LinearMap& g);
LinearMap r_adjunct_back(const RObject& y, const Comodule& z, const LinearMap& f);

}  // namespace coringlab
