#include <doctest.h>

#include "mirror/error.hpp"
#include "mirror/localization.hpp"
#include "support.hpp"

using namespace mirror;
using testing_support::load;

TEST_CASE("graph enumeration")
{
    for (int n = 1; n <= 4; ++n) {
        const int pairs = n * (n + 1) / 2;
        CHECK(enumerate_graphs(n, 1).size() == static_cast<std::size_t>(pairs));
        // double covers plus paths (middle j, ordered ends i, k != j)
        CHECK(enumerate_graphs(n, 2).size() == static_cast<std::size_t>(pairs + (n + 1) * n * n));
    }
    for (const auto& g : enumerate_graphs(3, 2)) {
        int total = 0;
        for (const auto& e : g.edges)
            total += e.delta;
        CHECK(total == 2);
        CHECK(g.automorphism == make_rat(1, 2));
    }
    CHECK_THROWS_AS(enumerate_graphs(2, 3), Unsupported);
}

TEST_CASE("oracle examples")
{
    CHECK(oracle_invariant(load("p1_pair.spec"), 1, 3, 1) == 1);
    CHECK(oracle_invariant(load("p1_pair.spec"), 2, 3, 1) == make_rat(1, 8));
    CHECK(oracle_invariant(load("quintic.spec"), 1, 3, 1) == 2875);
    CHECK(oracle_invariant(load("local_p2.spec"), 1, 3, 1) == 3);
}

TEST_CASE("oracle is independent of the weights")
{
    for (const char* file : {"p1_pair.spec", "local_p2.spec", "quintic.spec", "p3_quartic.spec"}) {
        const ValidatedSpec vs = load(file);
        const int n = vs.spec.factors.front();
        for (int d = 1; d <= 2; ++d) {
            const Rat first = oracle_invariant(vs, d, draw_weights(n + 1, 1000));
            for (std::uint64_t seed = 1001; seed < 1006; ++seed)
                CHECK(oracle_invariant(vs, d, draw_weights(n + 1, seed)) == first);
        }
    }
}

TEST_CASE("dropping either degree-2 graph family changes the answer")
{
    for (const char* file : {"p1_pair.spec", "local_p2.spec", "quintic.spec"}) {
        const ValidatedSpec vs = load(file);
        const WeightSample w = draw_weights(vs.spec.factors.front() + 1, 3);
        const Rat full = oracle_invariant(vs, 2, w);
        CHECK(oracle_invariant(vs, 2, w, GraphSelection{true, false, true}) != full);
        CHECK(oracle_invariant(vs, 2, w, GraphSelection{true, true, false}) != full);
    }
}

TEST_CASE("oracle errors")
{
    const ValidatedSpec vs = load("quintic.spec");
    CHECK_THROWS_AS(oracle_invariant(vs, 3, 3, 1), Unsupported);
    CHECK_THROWS_AS(oracle_invariant(vs, 1, WeightSample{{Rat(1), Rat(2), Rat(1), Rat(4), Rat(5)}, 0}), SamplingError);
    CHECK_THROWS_AS(oracle_invariant(vs, 1, WeightSample{{Rat(1), Rat(2)}, 0}), SamplingError);
    CHECK_THROWS_AS(oracle_invariant(load("local_p1xp1.spec"), 1, 3, 1), Unsupported);
}

TEST_CASE("Schubert calculus gives the 2875 lines")
{
    CHECK(schubert_lines_quintic() == 2875);
    // Sym^5 of a rank-2 bundle has rank 6, so c_6 fills the 6-dimensional G(2,5).
    CHECK(5 + 1 == 2 * (5 - 2));
}
