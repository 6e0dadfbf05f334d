#include "mirror/checks.hpp"

#include <optional>

#include "mirror/error.hpp"
#include "mirror/localization.hpp"

namespace mirror {

namespace {

std::string degree_text(const Degree& d)
{
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

CheckResult compare_tables(const std::string& name, const InvariantTable& base, const InvariantTable& other, int order)
{
    for (const auto& e : base.entries) {
        if (total_degree(e.degree) > order)
            continue;
        const Rat& k = other.at(e.degree);
        if (k != e.k)
            return {name, false, "K" + degree_text(e.degree) + ": " + to_string(e.k) + " vs " + to_string(k)};
    }
    return {name, true, ""};
}

}  // namespace

CheckResult check_alpha_order(const PipelineResult& run)
{
    const auto top = max_alpha_exponent(integrand(run.data, run.mirror_map));
    if (top && *top >= -1)
        return {"alpha_order", false, "alpha^" + std::to_string(*top) + " survives"};
    return {"alpha_order", true, ""};
}

CheckResult check_overdetermination(const PipelineResult& run)
{
    try {
        const InvariantTable again = extract_invariants(run.data, run.mirror_map);
        if (!(again == run.table))
            return {"overdetermination", false, "re-extraction differs"};
    } catch (const ExtractionError& e) {
        return {"overdetermination", false, e.what()};
    }
    return {"overdetermination", true, ""};
}

CheckResult check_x_to_zero(const ValidatedSpec& vs, const PipelineResult& run)
{
    if (vs.s != 0)
        return {"x_to_0", true, "not applicable for s > 0"};
    try {
        const PipelineResult euler = run_pipeline(vs, run.data.order, ChernMode::euler);
        return compare_tables("x_to_0", run.table, euler.table, run.data.order);
    } catch (const Error& e) {
        return {"x_to_0", false, e.what()};
    }
}

CheckResult check_truncation_stability(const ValidatedSpec& vs, const PipelineResult& run, int extra)
{
    const int order = run.data.order;
    try {
        const PipelineResult longer = run_pipeline(vs, order + extra, run.data.mode);
        if (!(longer.mirror_map.truncated(order) == run.mirror_map))
            return {"truncation_stability", false, "mirror map changed at order " + std::to_string(order + extra)};
        return compare_tables("truncation_stability", run.table, longer.table, order);
    } catch (const Error& e) {
        return {"truncation_stability", false, e.what()};
    }
}

CheckResult check_tie_order(const ValidatedSpec& vs, const PipelineResult& run)
{
    try {
        const PipelineResult reversed = run_pipeline(vs, run.data.order, run.data.mode, SolveOptions{true});
        if (!(reversed.mirror_map == run.mirror_map))
            return {"degree_order", false, "mirror map depends on the order of ties"};
        return compare_tables("degree_order", run.table, reversed.table, run.data.order);
    } catch (const Error& e) {
        return {"degree_order", false, e.what()};
    }
}

CheckResult check_oracle(const ValidatedSpec& vs, const PipelineResult& run, int d, int samples, std::uint64_t seed)
{
    const std::string name = "oracle_d" + std::to_string(d);
    try {
        const Rat oracle = oracle_invariant(vs, d, samples, seed);
        const Rat& engine = run.table.at(Degree{d});
        if (oracle != engine)
            return {name, false, "engine " + to_string(engine) + " vs oracle " + to_string(oracle)};
        return {name, true, to_string(oracle)};
    } catch (const Error& e) {
        return {name, false, e.what()};
    }
}

CheckResult check_multiple_cover(const PipelineResult& run)
{
    for (const auto& e : run.table.entries) {
        const int d = e.degree.front();
        if (e.k * d * d * d != 1)
            return {"multiple_cover", false, "K_" + std::to_string(d) + " = " + to_string(e.k)};
    }
    if (!run.mirror_map.f.empty() || !run.mirror_map.g.front().empty())
        return {"multiple_cover", false, "f or g is nonzero"};
    return {"multiple_cover", true, ""};
}

CheckResult check_equivariant(int max_n, int max_d, int samples, std::uint64_t seed)
{
    const std::string name = "equivariant";
    const ShapePtr point = point_shape();
    const LaurentBlock x = LaurentBlock::monomial(point, 0, 0, 1, Rat(1));
    for (int k = 0; k < samples; ++k) {
        for (int n = 1; n <= max_n; ++n) {
            const WeightSample sample = draw_weights(n + 1, seed + static_cast<std::uint64_t>(k));
            const auto& lambda = sample.lambda;
            // x B_0 = prod_i (x + H - lambda_i) at every fixed point
            const EquivariantClass b0 = tangent_b_d(n, 0, lambda);
            for (int j = 0; j <= n; ++j) {
                LaurentBlock product = LaurentBlock::monomial(point, 0, 0, 0, Rat(1));
                for (int i = 0; i <= n; ++i)
                    product = product * (x + LaurentBlock::monomial(point, 0, 0, 0, lambda[j] - lambda[i]));
                if (!(x * b0.restrictions[j] == product))
                    return {name, false, "Euler sequence fails at n=" + std::to_string(n) + ", p_" + std::to_string(j)};
            }
            for (int d = 1; d <= max_d; ++d) {
                const EquivariantClass bd = tangent_b_d(n, d, lambda);
                for (int j = 0; j <= n; ++j)
                    for (int l = 0; l <= n; ++l) {
                        if (l == j)
                            continue;
                        const Rat alpha = (lambda[j] - lambda[l]) / d;
                        const LaurentBlock restricted = x * bd.restrictions[j].evaluate_alpha(alpha);
                        if (!(restricted == linking_values(n, d, j, l, lambda)))
                            return {name, false,
                                    "linking value mismatch at n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                                        ", (j,l)=(" + std::to_string(j) + "," + std::to_string(l) + ")"};
                    }
            }
        }
    }
    return {name, true, ""};
}

std::vector<CheckResult> verify_all(const ValidatedSpec& vs, int order, std::uint64_t seed)
{
    std::vector<CheckResult> out;
    std::optional<PipelineResult> solved;
    try {
        solved.emplace(run_pipeline(vs, order));
    } catch (const Error& e) {
        out.push_back({"solve", false, e.what()});
        return out;
    }
    const PipelineResult& run = *solved;
    out.push_back({"solve", true, ""});
    out.push_back(check_alpha_order(run));
    out.push_back(check_overdetermination(run));
    out.push_back(check_x_to_zero(vs, run));
    out.push_back(check_truncation_stability(vs, run));
    if (vs.spec.factors.size() > 1)
        out.push_back(check_tie_order(vs, run));
    if (vs.spec.factors.size() == 1)
        for (int d = 1; d <= std::min(order, 2); ++d)
            out.push_back(check_oracle(vs, run, d, 3, seed));
    if (is_p1_concave_pair(vs.spec))
        out.push_back(check_multiple_cover(run));
    return out;
}

}  // namespace mirror
