#pragma once

#include <map>
#include <vector>

#include "mirror/geometry.hpp"
#include "mirror/laurent.hpp"
#include "mirror/qseries.hpp"
#include "mirror/weights.hpp"

namespace mirror {

/// chern: b is the Chern polynomial in x. euler: x = 0 in every B_d, d != 0.
enum class ChernMode { chern, euler };

/// Omega = B_0 = prod_convex (x + c1(L)) / prod_concave (x + c1(L)), x-Laurent.
/// In euler mode x is dropped when V- = 0; otherwise Omega has no x -> 0 value and keeps x.
LaurentBlock omega(const ValidatedSpec& vs, ChernMode mode = ChernMode::chern);

/// e_{S^1}(X_0/W_d) = prod_i prod_{k=1}^{d_i} (H_i - k alpha)^{n_i + 1} and its Laurent inverse.
struct EulerNormal {
    LaurentBlock product;
    LaurentBlock inverse;
};
EulerNormal euler_normal(const ValidatedSpec& vs, const Degree& d);

/// The hypergeometric class B_d; B_0 = Omega.
LaurentBlock b_d(const ValidatedSpec& vs, const Degree& d, ChernMode mode = ChernMode::chern);

/// alpha-exponent of the leading term of B_d, counted from the defining products.
int b_d_top_alpha(const GeometrySpec& spec, const Degree& d);

struct EulerData {
    ValidatedSpec spec;
    ChernMode mode = ChernMode::chern;
    LaurentBlock omega;
    std::map<Degree, LaurentBlock> terms;
    int order = 0;
};

EulerData build_euler_data(const ValidatedSpec& vs, int order, ChernMode mode = ChernMode::chern);

/// sum_d q^d B_d, no t-dependence.
QSeries b_sum(const EulerData& data);

/// B(t) = e^{-H.t/alpha} sum_d B_d q^d
QSeries b_series(const EulerData& data);
QSeries b_series(const ValidatedSpec& vs, int order, ChernMode mode = ChernMode::chern);

/// T-equivariant class on P^n, stored as its restrictions to the n+1 fixed points
/// at sampled weights. Values are Laurent in alpha and x.
struct EquivariantClass {
    std::vector<Rat> lambda;
    std::vector<LaurentBlock> restrictions;
};

/// H with H|_{p_j} = lambda_j
EquivariantClass equivariant_hyperplane(const std::vector<Rat>& lambda);

/// B_d = (1/x) prod_{i=0}^n prod_{k=0}^d (x + H - lambda_i - k alpha), for V = TP^n.
EquivariantClass tangent_b_d(int n, int d, const std::vector<Rat>& lambda);

/// prod_i prod_{k=0}^d (x + lambda_j - lambda_i - k lambda/d) with lambda = lambda_j - lambda_l.
LaurentBlock linking_values(int n, int d, int j, int l, const std::vector<Rat>& lambda);

/// sum_j value_j / prod_{k != j} (lambda_j - lambda_k)
LaurentBlock integrate_fixed_points(const EquivariantClass& c);

}  // namespace mirror
