#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mirror/coh_ring.hpp"

namespace mirror {

/// alpha^a x^b t_1^{c_1} ... t_m^{c_m}
struct Monomial {
    int alpha = 0;
    int x = 0;
    std::vector<int> t;

    int t_degree() const;
    auto operator<=>(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Finite Laurent polynomial in alpha and x, polynomial in t_1..t_m, with
/// coefficients in H*(prod P^{n_i}). Zero coefficients are never stored.
class LaurentBlock {
public:
    /// tvars is the number of Kaehler parameters t_i; t-degree is capped at
    /// dim X + 1 unless a larger cap is given.
    LaurentBlock(ShapePtr shape, int tvars, std::optional<int> t_cap = std::nullopt);

    static LaurentBlock constant(const CohClass& c, int tvars);
    static LaurentBlock term(const Monomial& m, const CohClass& c);
    /// coeff * alpha^a x^b
    static LaurentBlock monomial(ShapePtr shape, int tvars, int alpha, int x, const Rat& coeff);
    /// x + c - k alpha, the basic linear factor of Euler data. with_x=false drops x.
    static LaurentBlock linear_factor(const CohClass& c, long k, int tvars, bool with_x = true);

    const ShapePtr& shape() const { return shape_; }
    int tvars() const { return tvars_; }
    int t_cap() const { return t_cap_; }
    const std::map<Monomial, CohClass>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    CohClass coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const CohClass& c);

    std::optional<int> min_alpha() const;
    std::optional<int> max_alpha() const;
    std::optional<int> min_x() const;

    /// Terms whose monomial satisfies the predicate.
    LaurentBlock filter(const std::function<bool(const Monomial&)>& keep) const;
    LaurentBlock alpha_slice(int a) const;
    /// Substitutes alpha := value.
    LaurentBlock evaluate_alpha(const Rat& value) const;
    /// Drops x; requires no negative x exponents.
    LaurentBlock at_x_zero() const;

    LaurentBlock& operator+=(const LaurentBlock& other);
    LaurentBlock& operator-=(const LaurentBlock& other);
    LaurentBlock& operator*=(const Rat& f);
    LaurentBlock& operator*=(const CohClass& c);
    friend LaurentBlock operator+(LaurentBlock a, const LaurentBlock& b) { return a += b; }
    friend LaurentBlock operator-(LaurentBlock a, const LaurentBlock& b) { return a -= b; }
    friend LaurentBlock operator*(LaurentBlock a, const Rat& f) { return a *= f; }
    friend LaurentBlock operator*(const LaurentBlock& a, const LaurentBlock& b);
    LaurentBlock operator-() const;

    /// Adds factor * a * b.
    void add_product(const LaurentBlock& a, const LaurentBlock& b, const Rat& factor);

    bool operator==(const LaurentBlock& other) const;

    std::string to_string() const;

private:
    void check_compatible(const LaurentBlock& other) const;

    ShapePtr shape_;
    int tvars_;
    int t_cap_;
    std::map<Monomial, CohClass> terms_;
};

/// (c - k alpha)^{-1} = -(k alpha)^{-1} sum_j (c/(k alpha))^j, finite since c is nilpotent.
/// Throws DomainError when k == 0 or c has a nonzero scalar part.
LaurentBlock invert_linear_factor(const CohClass& c, long k, int tvars);

/// (x + c)^{-1} = sum_j (-c)^j x^{-1-j}, c nilpotent.
LaurentBlock invert_x_factor(const CohClass& c, int tvars);

/// exp(arg) for arg with nilpotent coefficients; DomainError otherwise.
LaurentBlock exp_nilpotent(const LaurentBlock& arg);

/// exp(-sum_i H_i t_i / alpha)
LaurentBlock exp_minus_Ht_over_alpha(const ShapePtr& shape);

/// Fiberwise integral over X: each coefficient replaced by its top-class
/// coefficient; the result lives over the point.
LaurentBlock integrate(const LaurentBlock& block);

/// Point shape (no factors): scalar coefficients.
ShapePtr point_shape();

}  // namespace mirror
