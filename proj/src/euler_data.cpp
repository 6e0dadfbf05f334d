#include "mirror/euler_data.hpp"

#include "mirror/error.hpp"

namespace mirror {

namespace {

int tvars_of(const ValidatedSpec& vs)
{
    return static_cast<int>(vs.spec.factors.size());
}

LaurentBlock one_block(const ValidatedSpec& vs)
{
    return LaurentBlock::constant(CohClass::one(vs.shape), tvars_of(vs));
}

}  // namespace

LaurentBlock omega(const ValidatedSpec& vs, ChernMode mode)
{
    const int tv = tvars_of(vs);
    const bool with_x = mode == ChernMode::chern || vs.spec.concave_rank() > 0;
    LaurentBlock out = one_block(vs);
    for (const auto& b : vs.spec.bundles) {
        const CohClass c = c1(b, vs.shape);
        if (b.kind == BundleKind::convex)
            out = out * LaurentBlock::linear_factor(c, 0, tv, with_x);
        else
            out = out * invert_x_factor(c, tv);
    }
    return out;
}

EulerNormal euler_normal(const ValidatedSpec& vs, const Degree& d)
{
    const int tv = tvars_of(vs);
    EulerNormal e{one_block(vs), one_block(vs)};
    for (std::size_t i = 0; i < d.size(); ++i) {
        const CohClass h = CohClass::hyperplane(vs.shape, static_cast<int>(i));
        const int power = vs.spec.factors[i] + 1;
        for (int k = 1; k <= d[i]; ++k) {
            const LaurentBlock factor = LaurentBlock::linear_factor(h, k, tv, false);
            const LaurentBlock inv = invert_linear_factor(h, k, tv);
            for (int p = 0; p < power; ++p) {
                e.product = e.product * factor;
                e.inverse = e.inverse * inv;
            }
        }
    }
    return e;
}

LaurentBlock b_d(const ValidatedSpec& vs, const Degree& d, ChernMode mode)
{
    if (d.size() != vs.spec.factors.size())
        throw ShapeError("degree has wrong arity");
    if (total_degree(d) == 0)
        return omega(vs, mode);
    const int tv = tvars_of(vs);
    const bool with_x = mode == ChernMode::chern;
    LaurentBlock out = euler_normal(vs, d).inverse;
    for (const auto& b : vs.spec.bundles) {
        const CohClass c = c1(b, vs.shape);
        const long p = pairing(b, d);
        if (b.kind == BundleKind::convex) {
            for (long k = 0; k <= p; ++k)
                out = out * LaurentBlock::linear_factor(c, k, tv, with_x);
        } else if (p <= -1) {
            // (x + c1 + k alpha), k = 1 .. -p-1; empty when p = -1
            for (long k = 1; k <= -p - 1; ++k)
                out = out * LaurentBlock::linear_factor(c, -k, tv, with_x);
        } else {
            // <c1(L-), d> = 0: the ratio convention gives 1/(x + c1(L))
            if (!with_x)
                throw Unsupported("Euler specialization of a concave bundle with <c1(L), d> = 0");
            out = out * invert_x_factor(c, tv);
        }
    }
    return out;
}

int b_d_top_alpha(const GeometrySpec& spec, const Degree& d)
{
    int top = 0;
    for (const auto& b : spec.bundles) {
        const long p = pairing(b, d);
        if (b.kind == BundleKind::convex)
            top += static_cast<int>(p);
        else if (p <= -1)
            top += static_cast<int>(-p - 1);
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        top -= d[i] * (spec.factors[i] + 1);
    return top;
}

EulerData build_euler_data(const ValidatedSpec& vs, int order, ChernMode mode)
{
    if (mode == ChernMode::euler && vs.s != 0)
        throw Unsupported("Euler-class specialization requires s = 0 (s = " + std::to_string(vs.s) + ")");
    EulerData data{vs, mode, omega(vs, mode), {}, order};
    for (const auto& d : effective_degrees(static_cast<int>(vs.spec.factors.size()), 0, order))
        data.terms.emplace(d, total_degree(d) == 0 ? data.omega : b_d(vs, d, mode));
    return data;
}

QSeries b_sum(const EulerData& data)
{
    const int m = static_cast<int>(data.spec.spec.factors.size());
    QSeries s(data.spec.shape, m, m, data.order);
    for (const auto& [d, b] : data.terms)
        s.add(d, b);
    return s;
}

QSeries b_series(const EulerData& data)
{
    return b_sum(data).times(exp_minus_Ht_over_alpha(data.spec.shape));
}

QSeries b_series(const ValidatedSpec& vs, int order, ChernMode mode)
{
    return b_series(build_euler_data(vs, order, mode));
}

namespace {

LaurentBlock scalar_block(int alpha, int x, const Rat& coeff)
{
    return LaurentBlock::monomial(point_shape(), 0, alpha, x, coeff);
}

/// x + c - k alpha over the point
LaurentBlock scalar_linear(const Rat& c, const Rat& k)
{
    return scalar_block(0, 1, Rat(1)) + scalar_block(0, 0, c) + scalar_block(1, 0, -k);
}

}  // namespace

EquivariantClass equivariant_hyperplane(const std::vector<Rat>& lambda)
{
    require_distinct(lambda);
    EquivariantClass h{lambda, {}};
    for (const auto& l : lambda)
        h.restrictions.push_back(scalar_block(0, 0, l));
    return h;
}

EquivariantClass tangent_b_d(int n, int d, const std::vector<Rat>& lambda)
{
    if (static_cast<int>(lambda.size()) != n + 1)
        throw ShapeError("tangent_b_d: need n + 1 weights");
    if (d < 0)
        throw DomainError("tangent_b_d: negative degree");
    require_distinct(lambda);
    EquivariantClass out{lambda, {}};
    for (int j = 0; j <= n; ++j) {
        LaurentBlock v = scalar_block(0, 0, Rat(1));
        for (int i = 0; i <= n; ++i)
            for (int k = 0; k <= d; ++k)
                v = v * scalar_linear(lambda[j] - lambda[i], Rat(k));
        // the factor 1/x
        LaurentBlock shifted(point_shape(), 0);
        for (const auto& [m, c] : v.terms())
            shifted.add_term(Monomial{m.alpha, m.x - 1, {}}, c);
        out.restrictions.push_back(std::move(shifted));
    }
    return out;
}

LaurentBlock linking_values(int n, int d, int j, int l, const std::vector<Rat>& lambda)
{
    if (static_cast<int>(lambda.size()) != n + 1)
        throw ShapeError("linking_values: need n + 1 weights");
    if (j == l)
        throw DomainError("linking_values: j == l");
    if (d < 1)
        throw DomainError("linking_values: d < 1");
    require_distinct(lambda);
    const Rat weight = lambda[j] - lambda[l];
    LaurentBlock v = scalar_block(0, 0, Rat(1));
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= d; ++k)
            v = v * (scalar_block(0, 1, Rat(1)) + scalar_block(0, 0, lambda[j] - lambda[i] - Rat(k) * weight / d));
    return v;
}

LaurentBlock integrate_fixed_points(const EquivariantClass& c)
{
    require_distinct(c.lambda);
    if (c.restrictions.size() != c.lambda.size())
        throw ShapeError("equivariant class has wrong number of restrictions");
    LaurentBlock out(point_shape(), 0);
    for (std::size_t j = 0; j < c.lambda.size(); ++j) {
        Rat denom = 1;
        for (std::size_t k = 0; k < c.lambda.size(); ++k)
            if (k != j)
                denom *= c.lambda[j] - c.lambda[k];
        out += c.restrictions[j] * (1 / denom);
    }
    return out;
}

}  // namespace mirror
