#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mirror/euler_data.hpp"

namespace mirror {

/// The change of variables normalizing B(t):
///   e^{f/alpha} B(t) / N(q)  with  t~ = t + g(q),
/// where f = x * sum_d f_d q^d, g_i = sum_d g_{i,d} q^d, N = 1 + sum_d N_d q^d.
/// No degree-0 terms are stored.
struct MirrorMap {
    int factors = 0;
    int order = 0;
    std::map<Degree, Rat> f;
    std::vector<std::map<Degree, Rat>> g;
    std::map<Degree, Rat> normalization;

    Rat f_at(const Degree& d) const;
    Rat g_at(int axis, const Degree& d) const;
    Rat normalization_at(const Degree& d) const;
    bool is_trivial() const;
    /// Coefficients with |d| <= order only.
    MirrorMap truncated(int order) const;
    bool operator==(const MirrorMap&) const = default;
};

MirrorMap zero_mirror_map(int factors, int order);

/// e^{-H.t/alpha} [ e^{f/alpha} sum_d B_d q^d / N - e^{-H.g/alpha} Omega ], truncated at order
/// (defaults to the data's truncation).
QSeries integrand(const EulerData& data, const MirrorMap& mm, std::optional<int> order = std::nullopt);

struct SolveOptions {
    /// Visit degrees of equal total degree in reverse lexicographic order.
    bool reverse_ties = false;
};

/// Solves degree by degree for N_d (alpha^0 coefficient), then f_d and g_{i,d}
/// (alpha^-1 coefficient in span{x Omega, H_i Omega}). Throws InconsistencyError if a
/// coefficient is outside that span or anything at alpha^{>= -1} survives.
MirrorMap solve_mirror_map(const EulerData& data, SolveOptions options = {});

/// Largest alpha exponent present at any degree d != 0, or nullopt if none.
std::optional<int> max_alpha_exponent(const QSeries& series);

struct InvariantEntry {
    Degree degree;
    /// x-exponent -> value; only x^s survives the grading check
    std::map<int, Rat> k_raw;
    Rat k;
};

struct InvariantTable {
    int s = 0;
    std::vector<InvariantEntry> entries;

    const Rat& at(const Degree& d) const;
    bool operator==(const InvariantTable& other) const;
};

/// Integrates the solved integrand over X, keeps the x^s alpha^-3 part and solves
/// 2 Phi(t~) - sum_i t~_i dPhi/dt~_i for K_d from the t-degree-0 component. The
/// t-degree-1 component is checked, and every higher t-degree must vanish.
InvariantTable extract_invariants(const EulerData& data, const MirrorMap& mm);

struct PipelineResult {
    EulerData data;
    MirrorMap mirror_map;
    InvariantTable table;
};

PipelineResult run_pipeline(const ValidatedSpec& vs, int order, ChernMode mode = ChernMode::chern,
                            SolveOptions options = {});

/// X = P^1, V = O(-1) + O(-1)
bool is_p1_concave_pair(const GeometrySpec& spec);

/// Integral over M_{0,1}(d, P^1) of e^*(H) b(V_d') = d K_d.
Rat one_pointed(const GeometrySpec& spec, const InvariantTable& table, int d);

/// Integral over M_{0,2}(d, P^1) of e_1^*(H) e_2^*(H) b(V_d'') = d * one_pointed.
Rat two_pointed(const GeometrySpec& spec, const InvariantTable& table, int d);

}  // namespace mirror
