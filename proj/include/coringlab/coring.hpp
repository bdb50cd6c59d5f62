#pragma once

#include "coringlab/bimodule.hpp"

#include <memory>
#include <string>

namespace coringlab {

struct Coring {
    AlgebraPtr base;
    SpacePtr carrier;
    LinearMap comult;   // C -> C (x)_A C
    LinearMap counit;   // C -> A
    std::string name;
};

using CoringPtr = std::shared_ptr<const Coring>;

enum class Side { left, right };

struct Comodule {
    Side side = Side::right;
    CoringPtr coring;
    SpacePtr carrier;
    LinearMap coaction;   // right: M -> M (x) C, left: M -> C (x) M
    std::string name;
};

struct Bicomodule {
    CoringPtr left_coring, right_coring;
    SpacePtr carrier;
    LinearMap lambda, rho;
    std::string name;
};

Report check_coring(const Coring& c);
Report check_comodule(const Comodule& m);
Report check_bicomodule(const Bicomodule& m);
Report is_colinear(const LinearMap& f, const Comodule& from, const Comodule& to);
Report check_coring_morphism(const LinearMap& phi, const Coring& from, const Coring& to);

CoringPtr make_coring(const AlgebraPtr& base, const SpacePtr& carrier, const LinearMap& comult,
                      const LinearMap& counit, std::string name = {});
CoringPtr trivial_coring(const AlgebraPtr& a);
// every basis element grouplike: Delta(e) = e (x) e, eps(e) = 1
CoringPtr grouplike_coalgebra(const BimodulePtr& carrier, std::string name = {});
CoringPtr group_coalgebra(std::size_t n, Field f = {});
// span{g, x} with g grouplike and x primitive over g
CoringPtr primitive_coalgebra(Field f = {});

// basis of the bicolinear maps between two bicomodules over the same pair of corings
std::vector<LinearMap> bicolinear_basis(const Bicomodule& from, const Bicomodule& to);
// basis of the bilinear colinear maps between two comodules on the same side
std::vector<LinearMap> colinear_basis(const Comodule& from, const Comodule& to);

Comodule regular_comodule(const CoringPtr& c, Side side);
Bicomodule regular_bicomodule(const CoringPtr& c);

}  // namespace coringlab
