#include "mirror/weights.hpp"

#include <random>

#include "mirror/error.hpp"

namespace mirror {

WeightSample draw_weights(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-997, 997);
    std::uniform_int_distribution<long> den(1, 89);
    WeightSample w{{}, seed};
    while (static_cast<int>(w.lambda.size()) < count) {
        Rat r = make_rat(num(rng), den(rng));
        bool fresh = true;
        for (const auto& existing : w.lambda)
            fresh &= existing != r;
        if (fresh)
            w.lambda.push_back(r);
    }
    return w;
}

void require_distinct(const std::vector<Rat>& lambda)
{
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (std::size_t j = i + 1; j < lambda.size(); ++j)
            if (lambda[i] == lambda[j])
                throw SamplingError("coincident torus weights at positions " + std::to_string(i) + " and " +
                                    std::to_string(j));
}

}  // namespace mirror
