#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mirror/checks.hpp"
#include "mirror/error.hpp"
#include "mirror/localization.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mirror;

constexpr int exit_usage = 2;
constexpr int exit_inconsistent = 3;

json spec_json(const ValidatedSpec& vs)
{
    json bundles = json::array();
    for (const auto& b : vs.spec.bundles)
        bundles.push_back({{"kind", b.kind == BundleKind::convex ? "convex" : "concave"}, {"multidegree", b.multidegree}});
    return {{"name", vs.spec.name}, {"factors", vs.spec.factors}, {"bundles", bundles}};
}

json coefficient_list(const std::map<Degree, Rat>& m)
{
    json out = json::array();
    for (const auto& [d, v] : m)
        out.push_back({d, to_string(v)});
    return out;
}

std::string degree_csv(const Degree& d)
{
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? "," : "") + std::to_string(d[i]);
    return s;
}

struct ComputeArgs {
    std::string spec;
    int max_degree = 1;
    std::string format = "json";
    bool euler = false;
    bool chern = false;
    bool oracle = false;
    bool timing = false;
    std::uint64_t seed = 1;
};

int run_compute(const ComputeArgs& args)
{
    const auto start = std::chrono::steady_clock::now();
    const ValidatedSpec vs = validate(load_spec(args.spec));
    const ChernMode mode = args.euler ? ChernMode::euler : ChernMode::chern;
    const PipelineResult run = run_pipeline(vs, args.max_degree, mode);
    const std::vector<CheckResult> checks{check_alpha_order(run), check_overdetermination(run)};

    std::map<Degree, Rat> oracle;
    if (args.oracle && vs.spec.factors.size() == 1)
        for (int d = 1; d <= std::min(args.max_degree, 2); ++d)
            oracle.emplace(Degree{d}, oracle_invariant(vs, d, 3, args.seed));

    std::ostringstream out;
    if (args.format == "csv") {
        for (std::size_t i = 0; i < vs.spec.factors.size(); ++i)
            out << "d" << i + 1 << ",";
        out << "K,oracle,match\n";
        for (const auto& e : run.table.entries) {
            out << degree_csv(e.degree) << "," << to_string(e.k) << ",";
            if (auto it = oracle.find(e.degree); it != oracle.end())
                out << to_string(it->second) << "," << (it->second == e.k ? "true" : "false");
            else
                out << ",";
            out << "\n";
        }
    } else {
        json g = json::array();
        for (int i = 0; i < run.mirror_map.factors; ++i)
            for (const auto& [d, v] : run.mirror_map.g[i])
                g.push_back({i, d, to_string(v)});
        json invariants = json::array();
        for (const auto& e : run.table.entries) {
            json raw = json::array();
            for (const auto& [x, v] : e.k_raw)
                raw.push_back({x, to_string(v)});
            json entry{{"degree", e.degree}, {"K", to_string(e.k)}, {"K_raw", raw}};
            if (auto it = oracle.find(e.degree); it != oracle.end()) {
                entry["oracle"] = to_string(it->second);
                entry["match"] = it->second == e.k;
            }
            invariants.push_back(entry);
        }
        json check_list = json::array();
        for (const auto& c : checks)
            check_list.push_back({{"name", c.name}, {"pass", c.pass}});
        json report{{"spec", spec_json(vs)},
                    {"s", vs.s},
                    {"mode", mode == ChernMode::euler ? "euler" : "chern"},
                    {"mirror_map",
                     {{"f", coefficient_list(run.mirror_map.f)},
                      {"g", g},
                      {"normalization", coefficient_list(run.mirror_map.normalization)}}},
                    {"invariants", invariants},
                    {"checks", check_list}};
        out << report.dump(2) << "\n";
    }
    std::cout << out.str();
    if (args.timing) {
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        std::cerr << "elapsed " << dt.count() << " s\n";
    }
    for (const auto& c : checks)
        if (!c.pass) {
            std::cerr << "check failed: " << c.name << " " << c.detail << "\n";
            return exit_inconsistent;
        }
    return 0;
}

int run_oracle(const std::string& path, int degree, int samples, std::uint64_t seed)
{
    const ValidatedSpec vs = validate(load_spec(path));
    if (degree != 1 && degree != 2)
        throw Unsupported("oracle degree must be 1 or 2");
    if (samples < 1)
        throw SamplingError("--samples must be >= 1");
    const int n = vs.spec.factors.size() == 1 ? vs.spec.factors.front() : 0;
    std::optional<Rat> first;
    bool agree = true;
    std::ostringstream out;
    for (int k = 0; k < samples; ++k) {
        const WeightSample sample = draw_weights(n + 1, seed + static_cast<std::uint64_t>(k));
        const Rat v = oracle_invariant(vs, degree, sample);
        out << "sample " << k + 1 << " seed " << sample.seed << ": " << to_string(v) << "\n";
        if (!first)
            first = v;
        agree = agree && v == *first;
    }
    out << "oracle " << to_string(*first) << (agree ? " (all samples agree)" : " (samples disagree)") << "\n";
    std::cout << out.str();
    return agree ? 0 : exit_inconsistent;
}

int run_verify(const std::string& path, int max_degree, std::uint64_t seed)
{
    const ValidatedSpec vs = validate(load_spec(path));
    if (max_degree < 1)
        throw DomainError("--max-degree must be >= 1");
    const auto results = verify_all(vs, max_degree, seed);
    const CheckResult* failure = nullptr;
    for (const auto& c : results) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty())
            std::cout << ": " << c.detail;
        std::cout << "\n";
        if (!c.pass && !failure)
            failure = &c;
    }
    if (failure) {
        std::cerr << "first failure: " << failure->name << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Genus-0 invariants from hypergeometric Euler data"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* cmd_compute = app.add_subcommand("compute", "solve the mirror map and extract K_d");
    cmd_compute->add_option("--spec", compute.spec, "geometry spec file")->required();
    cmd_compute->add_option("--max-degree", compute.max_degree, "truncation order D")->required()->check(
        CLI::PositiveNumber);
    cmd_compute->add_option("--format", compute.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    auto* euler_flag = cmd_compute->add_flag("--euler", compute.euler, "Euler-class specialization of b");
    auto* chern_flag = cmd_compute->add_flag("--chern", compute.chern, "Chern polynomial b (default)");
    euler_flag->excludes(chern_flag);
    cmd_compute->add_flag("--oracle", compute.oracle, "add localization values for degrees 1 and 2");
    cmd_compute->add_option("--seed", compute.seed, "oracle weight seed");
    cmd_compute->add_flag("--timing", compute.timing, "print elapsed time to stderr");

    std::string oracle_spec;
    int oracle_degree = 1;
    int oracle_samples = 3;
    std::uint64_t oracle_seed = 1;
    auto* cmd_oracle = app.add_subcommand("oracle", "fixed-point localization at random weights");
    cmd_oracle->add_option("--spec", oracle_spec, "geometry spec file")->required();
    cmd_oracle->add_option("--degree", oracle_degree, "1 or 2")->required();
    cmd_oracle->add_option("--samples", oracle_samples, "number of weight samples");
    cmd_oracle->add_option("--seed", oracle_seed, "first seed");

    std::string verify_spec;
    int verify_degree = 1;
    std::uint64_t verify_seed = 1;
    auto* cmd_verify = app.add_subcommand("verify", "run the engine, oracle and property checks");
    cmd_verify->add_option("--spec", verify_spec, "geometry spec file")->required();
    cmd_verify->add_option("--max-degree", verify_degree, "truncation order D")->required();
    cmd_verify->add_option("--seed", verify_seed, "oracle weight seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*cmd_compute)
            return run_compute(compute);
        if (*cmd_oracle)
            return run_oracle(oracle_spec, oracle_degree, oracle_samples, oracle_seed);
        return run_verify(verify_spec, verify_degree, verify_seed);
    } catch (const InconsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_inconsistent;
    } catch (const ExtractionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_inconsistent;
    } catch (const OracleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_inconsistent;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
