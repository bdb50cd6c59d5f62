#pragma once

#include "coringlab/algebra.hpp"
#include "coringlab/report.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace coringlab {

class TensorSpace;
using SpacePtr = std::shared_ptr<const TensorSpace>;

class Bimodule {
public:
    Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
             std::vector<Matrix> right_action, std::string name = {});

    const AlgebraPtr& left() const { return left_; }
    const AlgebraPtr& right() const { return right_; }
    std::size_t dim() const { return dim_; }
    Field field() const { return left_->field(); }
    const std::string& name() const { return name_; }
    const Matrix& left_action(std::size_t i) const { return left_action_[i]; }
    const Matrix& right_action(std::size_t i) const { return right_action_[i]; }
    // set when this bimodule is a tensor space viewed as a single factor
    const SpacePtr& origin() const { return origin_; }

private:
    friend std::shared_ptr<const Bimodule> as_bimodule(const SpacePtr& s);
    AlgebraPtr left_, right_;
    std::size_t dim_;
    std::vector<Matrix> left_action_, right_action_;
    std::string name_;
    SpacePtr origin_;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

Report check_bimodule(const Bimodule& m);

BimodulePtr regular(const AlgebraPtr& a);      // A over (A,A), one shared handle per algebra
BimodulePtr underlying(const AlgebraPtr& a);   // A as a vector space over (k,k)
BimodulePtr restrict_bimodule(const BimodulePtr& m, const AlgebraMorphism& left, const AlgebraMorphism& right,
                              std::string name = {});
// A (x)_k k^n (x)_k B with the outer actions
BimodulePtr outer_bimodule(const AlgebraPtr& a, std::size_t n, const AlgebraPtr& b, std::string name = {});
BimodulePtr vector_space(Field f, std::size_t n, std::string name = {});   // over (k,k)

// A term of an element of a tensor space written on atomic basis tuples.
using Tuple = std::vector<std::size_t>;
using Terms = std::vector<std::pair<Tuple, Scalar>>;

// Left-associated iterated tensor product F1 (x) F2 (x) ... (x) Fn over the adjacent algebras,
// realized as a quotient of the ground-field tensor product. The quotient basis consists of
// non-pivot raw coordinates, so every basis element lifts to a single raw tuple.
class TensorSpace {
public:
    const std::vector<BimodulePtr>& factors() const { return factors_; }
    const std::vector<BimodulePtr>& atoms() const { return atoms_; }
    std::size_t dim() const { return dim_; }
    Field field() const { return factors_.front()->field(); }
    const AlgebraPtr& left_algebra() const { return factors_.front()->left(); }
    const AlgebraPtr& right_algebra() const { return factors_.back()->right(); }
    std::string name() const;

    const Tuple& lift(std::size_t q) const { return lift_[q]; }   // atomic tuple
    Tuple lift_factors(std::size_t q) const;
    SparseVec project(const Tuple& atoms) const;
    SparseVec project(const Terms& terms) const;
    SparseVec project_factors(const Tuple& factor_tuple) const;

    const std::vector<SparseVec>& left_action(std::size_t i) const { return left_act_[i]; }   // columns
    const std::vector<SparseVec>& right_action(std::size_t i) const { return right_act_[i]; }
    Matrix left_action_matrix(std::size_t i) const;
    Matrix right_action_matrix(std::size_t i) const;

    // raw coordinates: row-major product of the factor dimensions
    std::size_t raw_dim() const { return raw_dim_; }
    Matrix projection_matrix() const;
    Matrix section_matrix() const;
    std::size_t relation_rank() const { return raw_dim_ - dim_; }

private:
    friend SpacePtr space(const std::vector<BimodulePtr>& factors);
    TensorSpace() = default;
    void build();

    std::vector<BimodulePtr> factors_, atoms_;
    SpacePtr prefix_;
    std::size_t dim_ = 0, raw_dim_ = 1;
    std::vector<std::size_t> basis_raw_;   // last step: quotient basis -> raw (prefix basis, factor basis) index
    std::vector<SparseVec> proj_;          // last step: raw index -> quotient vector
    std::vector<Tuple> lift_;
    std::vector<std::vector<SparseVec>> left_act_, right_act_;
};

SpacePtr space(const std::vector<BimodulePtr>& factors);
SpacePtr space(const BimodulePtr& m);
SpacePtr otimes(const SpacePtr& a, const SpacePtr& b);
SpacePtr otimes(const std::vector<SpacePtr>& parts);
SpacePtr base_space(const AlgebraPtr& a);   // [A] for the regular bimodule
BimodulePtr as_bimodule(const SpacePtr& s);
bool same_atoms(const TensorSpace& a, const TensorSpace& b);

struct LinearMap {
    SpacePtr dom, cod;
    Matrix mat;   // cod.dim x dom.dim

    std::vector<Scalar> column(std::size_t j) const { return mat.column_vector(j); }
    SparseVec apply(const SparseVec& v) const;
};

LinearMap id(const SpacePtr& s);
LinearMap zero_map(const SpacePtr& dom, const SpacePtr& cod);
LinearMap compose(const LinearMap& g, const LinearMap& f);   // g after f
LinearMap compose(std::initializer_list<LinearMap> chain);   // applied right to left as written
LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);
LinearMap operator*(const Scalar& s, const LinearMap& a);
bool operator==(const LinearMap& a, const LinearMap& b);

LinearMap tensor(const std::vector<LinearMap>& maps);
LinearMap tensor(const LinearMap& f, const LinearMap& g);
// builds the quotient map whose value on each basis element is fn(lift(q)), projected
LinearMap from_terms(const SpacePtr& dom, const SpacePtr& cod, const std::function<Terms(const Tuple&)>& fn);
LinearMap from_matrix(const SpacePtr& dom, const SpacePtr& cod, const Matrix& raw);   // raw coordinates on dom/cod atoms
Matrix raw_matrix(const LinearMap& f);   // inverse of from_matrix on the section
LinearMap regroup(const SpacePtr& dom, const SpacePtr& cod);

// A (x) S -> S and S (x) A -> S with their inverses
LinearMap unit_left(const SpacePtr& s);
LinearMap unit_right(const SpacePtr& s);
LinearMap unit_left_inv(const SpacePtr& s);
LinearMap unit_right_inv(const SpacePtr& s);

Report check_bilinear(const LinearMap& f, const std::string& tag = "bilinear");
// compares lhs and rhs column by column; records the first failing basis element
bool expect_equal(Report& r, const std::string& tag, const LinearMap& lhs, const LinearMap& rhs);

// two-factor interface
struct TensorQuotient {
    SpacePtr space;
    BimodulePtr m, n;
    AlgebraPtr base;
    std::size_t dim;
    Matrix project, section;
    BimodulePtr bimodule;
};

TensorQuotient tensor_over(const AlgebraPtr& a, const BimodulePtr& m, const BimodulePtr& n);
LinearMap tensor_maps(const LinearMap& f, const LinearMap& g, const TensorQuotient& source_q,
                      const TensorQuotient& target_q);
std::pair<LinearMap, LinearMap> unit_iso(bool left_side, const BimodulePtr& m);

// structure maps of A on its underlying space over k
LinearMap mult_map(const AlgebraPtr& a);   // |A| (x) |A| -> |A|
LinearMap unit_map(const AlgebraPtr& a);   // k -> |A|

// a (x) b -> b (x) a over the ground field
LinearMap swap_map(const SpacePtr& a, const SpacePtr& b);
// all A-B-bilinear maps dom -> cod
std::vector<LinearMap> bilinear_basis(const SpacePtr& dom, const SpacePtr& cod);
// maps sum_k x_k basis[k] whose defect vanishes; defect must be linear
std::vector<LinearMap> solve_in_span(const std::vector<LinearMap>& basis,
                                     const std::function<Matrix(const LinearMap&)>& defect);

}  // namespace coringlab
