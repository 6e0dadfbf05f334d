#pragma once

#include <random>
#include <string>
#include <vector>

#include "mirror/geometry.hpp"
#include "mirror/laurent.hpp"

namespace testing_support {

using namespace mirror;

inline std::string data_path(const std::string& file)
{
    return std::string(MIRROR_TEST_DATA) + "/" + file;
}

inline ValidatedSpec load(const std::string& file)
{
    return validate(load_spec(data_path(file)));
}

inline ValidatedSpec from_text(const std::string& text)
{
    return validate(parse_spec(text));
}

/// Small random rationals for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    Rat rational() { return make_rat(integer(-9, 9), integer(1, 5)); }

    CohClass coh(const ShapePtr& shape)
    {
        CohClass c(shape);
        for (int i = 0; i < shape->size(); ++i)
            if (integer(0, 2))
                c[i] = rational();
        return c;
    }

    CohClass nilpotent(const ShapePtr& shape)
    {
        CohClass c = coh(shape);
        c[0] = 0;
        return c;
    }

    LaurentBlock block(const ShapePtr& shape, int tvars)
    {
        LaurentBlock b(shape, tvars);
        const int n = integer(0, 4);
        for (int k = 0; k < n; ++k) {
            std::vector<int> t(tvars, 0);
            if (tvars && integer(0, 1))
                t[integer(0, tvars - 1)] = 1;
            b.add_term(Monomial{integer(-3, 2), integer(-1, 2), t}, coh(shape));
        }
        return b;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing_support
