// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mirror/checks.hpp"
#include "mirror/error.hpp"
#include "mirror/localization.hpp"

using namespace mirror;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

struct SpecCase {
    const char* file;
    int order;
};

const std::vector<SpecCase> acceptance_specs{
    {"p1_pair.spec", 10},
    {"quintic.spec", 2},
    {"local_p2.spec", 3},
    {"p3_quartic.spec", 3},
    {"local_p1xp1.spec", 2},
};

ValidatedSpec load(const std::string& file)
{
    return validate(load_spec(std::string(MIRROR_TEST_DATA) + "/" + file));
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome multiple_cover()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const PipelineResult run = run_pipeline(load("p1_pair.spec"), 10);
    const double elapsed = seconds_since(start);
    if (!run.mirror_map.f.empty() || !run.mirror_map.g[0].empty())
        o.fail("f or g is nonzero");
    for (int d = 1; d <= 10; ++d)
        if (run.table.at({d}) != make_rat(1, d * d * d))
            o.fail("K_" + std::to_string(d) + " = " + to_string(run.table.at({d})));
    if (elapsed >= 5.0)
        o.fail("took " + std::to_string(elapsed) + " s");
    if (o.pass)
        o.detail = "K_d = 1/d^3 for d <= 10 in " + std::to_string(elapsed) + " s";
    return o;
}

Outcome pointed_numbers()
{
    Outcome o;
    const PipelineResult run = run_pipeline(load("p1_pair.spec"), 10);
    const GeometrySpec& s = run.data.spec.spec;
    for (int d = 1; d <= 10; ++d) {
        if (one_pointed(s, run.table, d) != make_rat(1, d * d))
            o.fail("one_pointed(" + std::to_string(d) + ")");
        if (two_pointed(s, run.table, d) != make_rat(1, d))
            o.fail("two_pointed(" + std::to_string(d) + ")");
    }
    return o;
}

Outcome quintic_cross_check()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const ValidatedSpec vs = load("quintic.spec");
    const PipelineResult run = run_pipeline(vs, 2);
    const Rat k1 = run.table.at({1}), k2 = run.table.at({2});
    const Rat o1 = oracle_invariant(vs, 1, 3, 11), o2 = oracle_invariant(vs, 2, 3, 12);
    const Rat schubert = schubert_lines_quintic();
    if (k1 != o1 || k1 != schubert)
        o.fail("K_1 " + to_string(k1) + ", oracle " + to_string(o1) + ", Schubert " + to_string(schubert));
    if (k2 != o2)
        o.fail("K_2 " + to_string(k2) + ", oracle " + to_string(o2));
    const double elapsed = seconds_since(start);
    if (elapsed >= 120.0)
        o.fail("took " + std::to_string(elapsed) + " s");
    if (o.pass)
        o.detail = "K_1 = " + to_string(k1) + ", K_2 = " + to_string(k2);
    return o;
}

Outcome local_p2_cross_check()
{
    Outcome o;
    const ValidatedSpec vs = load("local_p2.spec");
    const PipelineResult run = run_pipeline(vs, 2);
    for (int d = 1; d <= 2; ++d) {
        const Rat oracle = oracle_invariant(vs, d, 3, 20 + d);
        if (run.table.at({d}) != oracle)
            o.fail("K_" + std::to_string(d) + " " + to_string(run.table.at({d})) + " vs " + to_string(oracle));
    }
    if (o.pass)
        o.detail = "K_1 = " + to_string(run.table.at({1})) + ", K_2 = " + to_string(run.table.at({2}));
    return o;
}

/// Runs a per-spec check over every acceptance spec.
Outcome over_specs(const std::function<CheckResult(const ValidatedSpec&, const PipelineResult&)>& check)
{
    Outcome o;
    std::string notes;
    for (const auto& c : acceptance_specs) {
        const ValidatedSpec vs = load(c.file);
        const PipelineResult run = run_pipeline(vs, c.order);
        const CheckResult r = check(vs, run);
        if (!r.pass)
            o.fail(std::string(c.file) + ": " + r.detail);
        else if (!r.detail.empty())
            notes += (notes.empty() ? "" : "; ") + std::string(c.file) + " " + r.detail;
    }
    if (o.pass)
        o.detail = std::to_string(acceptance_specs.size()) + " specs" + (notes.empty() ? "" : "; " + notes);
    return o;
}

Outcome lambda_independence()
{
    Outcome o;
    int evaluated = 0;
    for (const auto& c : acceptance_specs) {
        const ValidatedSpec vs = load(c.file);
        if (vs.spec.factors.size() != 1)
            continue;
        for (int d = 1; d <= 2; ++d) {
            try {
                oracle_invariant(vs, d, 5, 500 + d);
                ++evaluated;
            } catch (const OracleError& e) {
                o.fail(std::string(c.file) + ": " + e.what());
            }
        }
    }
    if (o.pass)
        o.detail = std::to_string(evaluated) + " oracle values agree across 5 samples";
    return o;
}

Outcome equivariant()
{
    Outcome o;
    const CheckResult r = check_equivariant(4, 3, 2, 900);
    if (!r.pass)
        o.fail(r.detail);
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"multiple-cover formula K_d = 1/d^3, f = g = 0", multiple_cover},
        {"one-pointed 1/d^2 and two-pointed 1/d", pointed_numbers},
        {"quintic engine = localization = Schubert", quintic_cross_check},
        {"local P2 engine = localization", local_p2_cross_check},
        {"integrand is O(alpha^-2) after solving", [] { return over_specs([](auto&, auto& run) { return check_alpha_order(run); }); }},
        {"t-degree-1 overdetermination", [] { return over_specs([](auto&, auto& run) { return check_overdetermination(run); }); }},
        {"x -> 0 equals the Euler-class pipeline", [] { return over_specs(check_x_to_zero); }},
        {"oracle independent of torus weights", lambda_independence},
        {"Euler sequence and linking values", equivariant},
        {"truncation stability at D + 2", [] { return over_specs([](auto& vs, auto& run) { return check_truncation_stability(vs, run, 2); }); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!o.detail.empty())
            std::cout << " (" << o.detail << ")";
        std::cout << "\n";
    }
    std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed\n";
    return failures ? 1 : 0;
}
