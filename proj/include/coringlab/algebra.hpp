#pragma once

#include "coringlab/exactla.hpp"
#include "coringlab/report.hpp"

#include <memory>
#include <string>
#include <vector>

namespace coringlab {

class FinAlgebra {
public:
    // mult has dim rows and dim*dim columns; column i*dim+j holds e_i*e_j
    FinAlgebra(Field f, std::size_t dim, Matrix mult, std::vector<Scalar> unit, std::vector<std::string> labels = {},
               std::string name = {});

    Field field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Matrix& mult() const { return mult_; }
    const std::vector<Scalar>& unit() const { return unit_; }

    const Matrix& left_mul(std::size_t i) const { return left_[i]; }    // e_j -> e_i e_j
    const Matrix& right_mul(std::size_t i) const { return right_[i]; }  // e_j -> e_j e_i
    std::vector<Scalar> product(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;
    std::vector<Scalar> basis_product(std::size_t i, std::size_t j) const { return mult_.column_vector(i * dim_ + j); }
    std::vector<Scalar> basis_vector(std::size_t i) const;

private:
    Field field_;
    std::size_t dim_;
    Matrix mult_;
    std::vector<Scalar> unit_;
    std::vector<std::string> labels_;
    std::string name_;
    std::vector<Matrix> left_, right_;
};

using AlgebraPtr = std::shared_ptr<const FinAlgebra>;

struct AlgebraMorphism {
    AlgebraPtr source, target;
    Matrix matrix;   // dim(target) x dim(source)
};

Report check_algebra(const FinAlgebra& a);
Report check_algebra_morphism(const AlgebraMorphism& f);
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);
AlgebraMorphism identity_morphism(const AlgebraPtr& a);
AlgebraMorphism unit_morphism(const AlgebraPtr& a);   // ground field -> a

AlgebraPtr ground_field(Field f = {});
AlgebraPtr cyclic_group_algebra(std::size_t n, Field f = {});
AlgebraPtr truncated_polynomial(std::size_t n, Field f = {}, const std::string& var = "x");   // k[x]/(x^n)
AlgebraPtr matrix_algebra(std::size_t n, Field f = {});
AlgebraPtr opposite(const AlgebraPtr& a);
AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
// multiplication given by a callback on basis pairs
AlgebraPtr algebra_from_table(Field f, std::size_t dim,
                              const std::vector<std::vector<std::vector<Scalar>>>& table,
                              std::vector<Scalar> unit, std::vector<std::string> labels = {}, std::string name = {});

}  // namespace coringlab
