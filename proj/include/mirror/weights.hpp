#pragma once

#include <cstdint>
#include <vector>

#include "mirror/rational.hpp"

namespace mirror {

/// Torus weights lambda_0..lambda_n evaluated at rational sample points.
struct WeightSample {
    std::vector<Rat> lambda;
    std::uint64_t seed = 0;
};

/// count pairwise-distinct random rationals, deterministic in seed.
WeightSample draw_weights(int count, std::uint64_t seed);

/// Throws SamplingError if two weights coincide.
void require_distinct(const std::vector<Rat>& lambda);

}  // namespace mirror
