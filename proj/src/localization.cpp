#include "mirror/localization.hpp"

#include <algorithm>
#include <map>

#include "mirror/error.hpp"

namespace mirror {

int FixedGraph::valence(int vertex) const
{
    int v = 0;
    for (const auto& e : edges)
        v += (e.u == vertex) + (e.v == vertex);
    return v;
}

std::vector<FixedGraph> enumerate_graphs(int n, int d, GraphSelection selection)
{
    if (d != 1 && d != 2)
        throw Unsupported("localization oracle supports degrees 1 and 2 only");
    std::vector<FixedGraph> out;
    if (d == 1) {
        if (selection.single_edge)
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    out.push_back({{i, j}, {{0, 1, 1}}, 1});
        return out;
    }
    if (selection.double_cover)
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                out.push_back({{i, j}, {{0, 1, 2}}, Rat(1, 2)});
    // Two degree-1 edges meeting at j; ordered ends (i, k) carry a factor 1/2, and
    // i == k is the doubled line with its swap automorphism.
    if (selection.path)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n; ++i)
                for (int k = 0; k <= n; ++k)
                    if (i != j && k != j)
                        out.push_back({{i, j, k}, {{0, 1, 1}, {1, 2, 1}}, Rat(1, 2)});
    return out;
}

GraphFamily family_of(const FixedGraph& graph)
{
    if (graph.edges.size() == 2)
        return GraphFamily::path;
    return graph.edges.front().delta == 1 ? GraphFamily::single_edge : GraphFamily::double_cover;
}

namespace {

/// Inverse Euler class of the moving part of the deformation space.
Rat normal_factor(const FixedGraph& graph, const std::vector<Rat>& lambda)
{
    const int n = static_cast<int>(lambda.size()) - 1;
    Rat result = 1;
    for (const auto& e : graph.edges) {
        const int ei = graph.label[e.u];
        const int ej = graph.label[e.v];
        const Rat& li = lambda[ei];
        const Rat& lj = lambda[ej];
        const int delta = e.delta;
        Rat factor = delta % 2 ? Rat(-1) : Rat(1);
        Rat fact = 1;
        for (int a = 2; a <= delta; ++a)
            fact *= a;
        Rat diff_pow = 1;
        for (int a = 0; a < 2 * delta; ++a) {
            factor *= delta;
            diff_pow *= li - lj;
        }
        factor /= fact * fact * diff_pow;
        for (int k = 0; k <= n; ++k) {
            if (k == ei || k == ej)
                continue;
            for (int a = 0; a <= delta; ++a)
                factor /= Rat(a, delta) * li + Rat(delta - a, delta) * lj - lambda[k];
        }
        result *= factor;
    }
    for (int v = 0; v < static_cast<int>(graph.label.size()); ++v) {
        const int val = graph.valence(v);
        const int p = graph.label[v];
        std::vector<Rat> omega;
        for (const auto& e : graph.edges) {
            if (e.u == v)
                omega.push_back((lambda[p] - lambda[graph.label[e.v]]) / e.delta);
            if (e.v == v)
                omega.push_back((lambda[p] - lambda[graph.label[e.u]]) / e.delta);
        }
        for (int k = 0; k <= n; ++k)
            if (k != p)
                for (int a = 0; a < val - 1; ++a)
                    result *= lambda[p] - lambda[k];
        if (val == 1) {
            result *= omega[0];
        } else {
            Rat inv_sum = 0;
            Rat inv_prod = 1;
            for (const auto& w : omega) {
                inv_sum += 1 / w;
                inv_prod /= w;
            }
            // (sum w^-1)^{val-3} prod w^-1
            Rat p = 1;
            for (int a = 0; a < std::abs(val - 3); ++a)
                p *= inv_sum;
            result *= (val >= 3 ? p : 1 / p) * inv_prod;
        }
    }
    return result;
}

/// Weights of H^0 (convex) or H^1 (concave) of the pulled-back line bundle.
std::vector<Rat> bundle_weights(const FixedGraph& graph, const LineBundleSpec& bundle, const std::vector<Rat>& lambda)
{
    const long l = bundle.multidegree.front();
    const bool convex = bundle.kind == BundleKind::convex;
    std::vector<Rat> w;
    for (const auto& e : graph.edges) {
        const long total = l * e.delta;
        const Rat& li = lambda[graph.label[e.u]];
        const Rat& lj = lambda[graph.label[e.v]];
        if (convex) {
            for (long a = 0; a <= total; ++a)
                w.push_back((Rat(a) * li + Rat(total - a) * lj) / e.delta);
        } else {
            for (long a = -1; a >= total + 1; --a)
                w.push_back((Rat(a) * li + Rat(total - a) * lj) / e.delta);
        }
    }
    for (int v = 0; v < static_cast<int>(graph.label.size()); ++v) {
        const Rat node = Rat(l) * lambda[graph.label[v]];
        for (int c = 0; c < graph.valence(v) - 1; ++c) {
            if (convex) {
                auto it = std::find(w.begin(), w.end(), node);
                if (it == w.end())
                    throw OracleError("node weight missing from edge sections");
                w.erase(it);
            } else {
                w.push_back(node);
            }
        }
    }
    return w;
}

/// x^s coefficient of prod (x + w)
Rat chern_coefficient(const std::vector<Rat>& weights, int s)
{
    std::vector<Rat> poly{1};
    for (const auto& w : weights) {
        std::vector<Rat> next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k] * w;
            next[k + 1] += poly[k];
        }
        poly = std::move(next);
    }
    return s < static_cast<int>(poly.size()) ? poly[s] : Rat(0);
}

}  // namespace

Rat oracle_invariant(const ValidatedSpec& vs, int d, const WeightSample& sample, GraphSelection selection)
{
    if (vs.spec.factors.size() != 1)
        throw Unsupported("localization oracle needs a single projective factor");
    const int n = vs.spec.factors.front();
    if (static_cast<int>(sample.lambda.size()) != n + 1)
        throw SamplingError("weight sample has " + std::to_string(sample.lambda.size()) + " entries, need " +
                            std::to_string(n + 1));
    require_distinct(sample.lambda);

    Rat total = 0;
    for (const auto& graph : enumerate_graphs(n, d, selection)) {
        std::vector<Rat> weights;
        for (const auto& b : vs.spec.bundles) {
            auto w = bundle_weights(graph, b, sample.lambda);
            weights.insert(weights.end(), w.begin(), w.end());
        }
        total += graph.automorphism * normal_factor(graph, sample.lambda) * chern_coefficient(weights, vs.s);
    }
    return total;
}

Rat oracle_invariant(const ValidatedSpec& vs, int d, int samples, std::uint64_t seed, GraphSelection selection)
{
    if (samples < 1)
        throw SamplingError("need at least one weight sample");
    const int n = vs.spec.factors.empty() ? 0 : vs.spec.factors.front();
    Rat first;
    for (int k = 0; k < samples; ++k) {
        const WeightSample sample = draw_weights(n + 1, seed + static_cast<std::uint64_t>(k));
        const Rat v = oracle_invariant(vs, d, sample, selection);
        if (k == 0)
            first = v;
        else if (v != first)
            throw OracleError("oracle depends on the weights: " + to_string(first) + " vs " + to_string(v) +
                              " (seed " + std::to_string(sample.seed) + ")");
    }
    return first;
}

Rat schubert_lines_quintic()
{
    // prod_{i=0}^{5} (i a + (5 - i) b) in the Chern roots a, b of S*
    using Poly = std::map<std::pair<int, int>, BigInt>;
    Poly roots{{{0, 0}, 1}};
    for (int i = 0; i <= 5; ++i) {
        Poly next;
        for (const auto& [e, c] : roots) {
            if (i)
                next[{e.first + 1, e.second}] += c * i;
            if (5 - i)
                next[{e.first, e.second + 1}] += c * (5 - i);
        }
        roots = std::move(next);
    }
    auto expand = [](int p, int q) {  // e1^p e2^q
        Poly r{{{q, q}, 1}};
        for (int k = 0; k < p; ++k) {
            Poly next;
            for (const auto& [e, c] : r) {
                next[{e.first + 1, e.second}] += c;
                next[{e.first, e.second + 1}] += c;
            }
            r = std::move(next);
        }
        return r;
    };
    // Rewrite in e1 = sigma_1, e2 = sigma_11 by stripping leading monomials.
    std::map<std::pair<int, int>, BigInt> in_e;
    for (;;) {
        std::erase_if(roots, [](const auto& kv) { return kv.second == 0; });
        if (roots.empty())
            break;
        const auto [lead, c] = *roots.rbegin();
        const int p = lead.first - lead.second;
        const int q = lead.second;
        in_e[{p, q}] += c;
        for (const auto& [e, v] : expand(p, q))
            roots[e] -= c * v;
    }
    // Pieri in the 2 x 3 box; the point class is sigma_{3,3}.
    BigInt total = 0;
    for (const auto& [pq, c] : in_e) {
        std::map<std::pair<int, int>, BigInt> state{{{0, 0}, 1}};
        for (int k = 0; k < pq.second; ++k) {
            std::map<std::pair<int, int>, BigInt> next;
            for (const auto& [lam, v] : state)
                if (lam.first < 3)
                    next[{lam.first + 1, lam.second + 1}] += v;
            state = std::move(next);
        }
        for (int k = 0; k < pq.first; ++k) {
            std::map<std::pair<int, int>, BigInt> next;
            for (const auto& [lam, v] : state) {
                if (lam.first < 3)
                    next[{lam.first + 1, lam.second}] += v;
                if (lam.second < lam.first)
                    next[{lam.first, lam.second + 1}] += v;
            }
            state = std::move(next);
        }
        if (auto it = state.find({3, 3}); it != state.end())
            total += c * it->second;
    }
    return Rat(total);
}

}  // namespace mirror
