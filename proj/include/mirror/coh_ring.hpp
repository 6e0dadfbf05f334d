#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mirror/rational.hpp"

namespace mirror {

/// Index set of H*(P^{n_1} x ... x P^{n_m}; Q): exponent vectors 0 <= e_i <= n_i,
/// stored in mixed radix with the first factor varying fastest.
class CohShape {
public:
    static std::shared_ptr<const CohShape> make(std::vector<int> dims);

    const std::vector<int>& dims() const { return dims_; }
    int factors() const { return static_cast<int>(dims_.size()); }
    int size() const { return size_; }
    /// Complex dimension of the product, sum of n_i.
    int dimension() const { return dimension_; }
    int top_index() const { return size_ - 1; }

    int degree(int index) const { return degree_[index]; }
    std::vector<int> exponents(int index) const;
    /// Throws ShapeError if out of range.
    int index(std::span<const int> exponents) const;
    /// Index of the product monomial, or -1 when a relation H_i^{n_i+1} = 0 kills it.
    int product(int a, int b) const { return product_[static_cast<std::size_t>(a) * size_ + b]; }

    bool operator==(const CohShape& other) const { return dims_ == other.dims_; }

private:
    explicit CohShape(std::vector<int> dims);

    std::vector<int> dims_;
    std::vector<int> strides_;
    int size_ = 1;
    int dimension_ = 0;
    std::vector<int> degree_;
    std::vector<int> product_;
};

using ShapePtr = std::shared_ptr<const CohShape>;

bool same_shape(const ShapePtr& a, const ShapePtr& b);

/// Element of H*(prod P^{n_i}; Q) with dense coefficients.
class CohClass {
public:
    explicit CohClass(ShapePtr shape);

    static CohClass scalar(ShapePtr shape, const Rat& value);
    static CohClass one(ShapePtr shape) { return scalar(std::move(shape), Rat(1)); }
    /// The hyperplane class H_i of factor i.
    static CohClass hyperplane(ShapePtr shape, int factor);
    /// sum_i coeffs[i] * H_i
    static CohClass linear(ShapePtr shape, std::span<const long> coeffs);
    static CohClass monomial(ShapePtr shape, std::span<const int> exponents, const Rat& coeff);

    const ShapePtr& shape() const { return shape_; }
    const Rat& operator[](int index) const { return coeffs_[index]; }
    Rat& operator[](int index) { return coeffs_[index]; }
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    const Rat& scalar_part() const { return coeffs_[0]; }
    bool is_zero() const;
    bool is_nilpotent() const { return coeffs_[0] == 0; }
    /// Homogeneous component of the given cohomological (complex) degree.
    CohClass component(int degree) const;

    CohClass& operator+=(const CohClass& other);
    CohClass& operator-=(const CohClass& other);
    CohClass& operator*=(const Rat& factor);
    /// Adds factor * a * b without materializing the product.
    void add_product(const CohClass& a, const CohClass& b, const Rat& factor);

    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    friend CohClass operator*(CohClass a, const Rat& f) { return a *= f; }
    friend CohClass operator*(const Rat& f, CohClass a) { return a *= f; }
    friend CohClass operator*(const CohClass& a, const CohClass& b);
    CohClass operator-() const;

    bool operator==(const CohClass& other) const;

    std::string to_string() const;

private:
    ShapePtr shape_;
    std::vector<Rat> coeffs_;
};

/// Cup product. Throws ShapeError on mismatched factor dimensions.
CohClass coh_mul(const CohClass& a, const CohClass& b);

/// Coefficient of the top class H_1^{n_1} ... H_m^{n_m}.
Rat integrate(const CohClass& a);

}  // namespace mirror
