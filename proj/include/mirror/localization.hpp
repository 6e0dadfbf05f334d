#pragma once

#include <vector>

#include "mirror/geometry.hpp"
#include "mirror/weights.hpp"

namespace mirror {

/// Edge between tree vertices u and v, covering their coordinate line delta times.
struct GraphEdge {
    int u = 0;
    int v = 0;
    int delta = 1;
};

/// A torus-fixed locus in M_{0,0}(d, P^n): a tree whose vertices sit at fixed points.
struct FixedGraph {
    std::vector<int> label;
    std::vector<GraphEdge> edges;
    Rat automorphism = 1;

    int valence(int vertex) const;
};

enum class GraphFamily { single_edge, double_cover, path };

struct GraphSelection {
    bool single_edge = true;
    bool double_cover = true;
    bool path = true;
};

/// Fixed graphs of total degree d in {1, 2} on P^n.
std::vector<FixedGraph> enumerate_graphs(int n, int d, GraphSelection selection = {});
GraphFamily family_of(const FixedGraph& graph);

/// Sum over fixed graphs of the x^s coefficient of the equivariant Chern polynomial
/// of V_d divided by the Euler class of the normal bundle, at the sampled weights.
Rat oracle_invariant(const ValidatedSpec& vs, int d, const WeightSample& sample, GraphSelection selection = {});

/// Evaluates at `samples` independent seeds starting from `seed` and requires agreement.
/// Throws OracleError on disagreement.
Rat oracle_invariant(const ValidatedSpec& vs, int d, int samples, std::uint64_t seed,
                     GraphSelection selection = {});

/// Integral over G(2,5) of c_6(Sym^5 S*), by Pieri rules.
Rat schubert_lines_quintic();

}  // namespace mirror
