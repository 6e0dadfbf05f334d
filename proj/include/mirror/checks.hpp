#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mirror/mirror_transform.hpp"

namespace mirror {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// No alpha^{>= -1} terms in the solved integrand at any degree d != 0.
CheckResult check_alpha_order(const PipelineResult& run);

/// Re-runs extraction, which verifies the t-degree-1 component and the vanishing of higher ones.
CheckResult check_overdetermination(const PipelineResult& run);

/// Chern-polynomial pipeline at x -> 0 against the Euler-class pipeline (s = 0 only).
CheckResult check_x_to_zero(const ValidatedSpec& vs, const PipelineResult& run);

/// Recomputes at order + extra and compares every degree <= order.
CheckResult check_truncation_stability(const ValidatedSpec& vs, const PipelineResult& run, int extra = 2);

/// Solves with ties in total degree visited in reverse order.
CheckResult check_tie_order(const ValidatedSpec& vs, const PipelineResult& run);

/// Engine K_d against the localization oracle at `samples` weight draws.
CheckResult check_oracle(const ValidatedSpec& vs, const PipelineResult& run, int d, int samples,
                         std::uint64_t seed);

/// K_d d^3 = 1 for the P^1 concave pair.
CheckResult check_multiple_cover(const PipelineResult& run);

/// Euler-sequence identity and linking values of the T P^n data for 1 <= n <= max_n,
/// 0 <= d <= max_d, at `samples` weight draws.
CheckResult check_equivariant(int max_n, int max_d, int samples, std::uint64_t seed);

/// Every applicable check for a spec at the given order.
std::vector<CheckResult> verify_all(const ValidatedSpec& vs, int order, std::uint64_t seed = 1);

}  // namespace mirror
