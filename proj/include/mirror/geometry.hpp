#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mirror/coh_ring.hpp"
#include "mirror/qseries.hpp"

namespace mirror {

enum class BundleKind { convex, concave };

/// A line bundle O(a_1, ..., a_m) on prod P^{n_i}. The multidegree is the
/// signed first Chern class: concave bundles carry nonpositive entries.
struct LineBundleSpec {
    std::vector<long> multidegree;
    BundleKind kind = BundleKind::convex;

    bool operator==(const LineBundleSpec&) const = default;
};

/// X = prod P^{n_i} together with V = sum of line bundles.
struct GeometrySpec {
    std::vector<int> factors;
    std::vector<LineBundleSpec> bundles;
    std::string name;

    int dimension() const;
    int convex_rank() const;
    int concave_rank() const;
    bool operator==(const GeometrySpec&) const = default;
};

/// A spec that satisfies c1(V+) - c1(V-) = c1(X) and s >= 0.
struct ValidatedSpec {
    GeometrySpec spec;
    int s = 0;
    ShapePtr shape;
};

/// Line format: `space <n>`, `bundle convex|concave <d1> ... <dm>`, `name <text>`,
/// `#` comments, blank lines ignored. Throws ParseError with the line number.
GeometrySpec parse_spec(std::string_view text);
GeometrySpec load_spec(const std::string& path);

/// Inverse of parse_spec on well-formed specs.
std::string serialize(const GeometrySpec& spec);

/// Throws ValidationError naming the offending factor, or factor -1 for s < 0.
ValidatedSpec validate(const GeometrySpec& spec);

/// <c1(L), d>
long pairing(const LineBundleSpec& bundle, const Degree& d);

/// sum_i (n_i + 1) H_i
CohClass c1_X(const GeometrySpec& spec, const ShapePtr& shape);

/// c1(L) as a class
CohClass c1(const LineBundleSpec& bundle, const ShapePtr& shape);

}  // namespace mirror
