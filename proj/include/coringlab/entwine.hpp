#pragma once

#include "coringlab/rcat.hpp"

namespace coringlab {

struct EntwiningStructure {
    AlgebraPtr algebra;
    CoringPtr coalgebra;   // over the ground field
    LinearMap psi;         // C (x) |A| -> |A| (x) C
    std::string name;
};

Report check_entwining(const EntwiningStructure& e);
EntwiningStructure flip_entwining(const AlgebraPtr& a, const CoringPtr& c);
// A (x) C over A with (a' (x) c) a = a' psi(c (x) a), Delta = A (x) Delta, eps = A (x) eps
CoringPtr entwined_coring(const EntwiningStructure& e);
BimodulePtr entwined_bimodule(const EntwiningStructure& e);

// a0 psi(c0 (x) a1) as terms over (A, C) basis pairs
Terms entwined_normalize(const EntwiningStructure& e, std::size_t a0, std::size_t c0, std::size_t a1);

struct Bialgebra {
    AlgebraPtr algebra;
    CoringPtr coalgebra;   // carrier is the underlying space of the algebra
};

Report check_bialgebra(const Bialgebra& h);
Bialgebra group_bialgebra(const AlgebraPtr& group_algebra);   // basis elements grouplike

struct DoiKoppinenData {
    Bialgebra h;
    AlgebraPtr a;
    LinearMap coaction;   // |A| -> |A| (x) |H|
    CoringPtr c;
    LinearMap action;     // C (x) |H| -> C
};

Report check_doi_koppinen_data(const DoiKoppinenData& d);
// psi(c (x) a) = a0 (x) c.a1; throws InputError naming the violated laws
EntwiningStructure doi_koppinen_entwining(const DoiKoppinenData& d);

// A (x) N (x) A with twist (A (x) N (x) psi)(A (x) n (x) A), N over the ground field
RObject lift_r_object(const EntwiningStructure& e, const CoringPtr& entwined, const RObject& n);

// (A, psi) as a monoid in the R category of C with C (x) mu and C (x) 1
RMonoid entwining_wreath(const EntwiningStructure& e);

}  // namespace coringlab
