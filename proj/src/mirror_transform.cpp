#include "mirror/mirror_transform.hpp"

#include <algorithm>
#include <sstream>

#include "mirror/error.hpp"

namespace mirror {

Rat MirrorMap::f_at(const Degree& d) const
{
    auto it = f.find(d);
    return it == f.end() ? Rat(0) : it->second;
}

Rat MirrorMap::g_at(int axis, const Degree& d) const
{
    auto it = g[axis].find(d);
    return it == g[axis].end() ? Rat(0) : it->second;
}

Rat MirrorMap::normalization_at(const Degree& d) const
{
    auto it = normalization.find(d);
    return it == normalization.end() ? Rat(0) : it->second;
}

bool MirrorMap::is_trivial() const
{
    for (const auto& axis : g)
        if (!axis.empty())
            return false;
    return f.empty() && normalization.empty();
}

MirrorMap MirrorMap::truncated(int new_order) const
{
    MirrorMap out = zero_mirror_map(factors, std::min(order, new_order));
    auto copy = [&](const std::map<Degree, Rat>& from, std::map<Degree, Rat>& to) {
        for (const auto& [d, v] : from)
            if (total_degree(d) <= out.order)
                to.emplace(d, v);
    };
    copy(f, out.f);
    copy(normalization, out.normalization);
    for (int i = 0; i < factors; ++i)
        copy(g[i], out.g[i]);
    return out;
}

MirrorMap zero_mirror_map(int factors, int order)
{
    MirrorMap mm;
    mm.factors = factors;
    mm.order = order;
    mm.g.resize(factors);
    return mm;
}

namespace {

void set_or_erase(std::map<Degree, Rat>& m, const Degree& d, const Rat& v)
{
    if (v == 0)
        m.erase(d);
    else
        m[d] = v;
}

Monomial plain(int alpha, int x, int tvars)
{
    return Monomial{alpha, x, std::vector<int>(tvars, 0)};
}

/// sum_d q^d * block(d) for the stored coefficients
QSeries series_from(const std::map<Degree, Rat>& coeffs, const LaurentBlock& unit, int factors, int order)
{
    QSeries s(unit.shape(), factors, unit.tvars(), order);
    for (const auto& [d, v] : coeffs)
        s.add(d, unit * v);
    return s;
}

struct SeriesParts {
    QSeries exp_f;
    QSeries exp_minus_hg;
    QSeries inverse_normalization;
};

SeriesParts mirror_series(const EulerData& data, const MirrorMap& mm, int order)
{
    const ShapePtr& shape = data.spec.shape;
    const int m = mm.factors;
    const LaurentBlock one = LaurentBlock::constant(CohClass::one(shape), m);

    const LaurentBlock x_over_alpha = LaurentBlock::term(plain(-1, 1, m), CohClass::one(shape));
    QSeries f_arg = series_from(mm.f, x_over_alpha, m, order);

    QSeries hg_arg(shape, m, m, order);
    for (int i = 0; i < m; ++i) {
        const LaurentBlock h_over_alpha = LaurentBlock::term(plain(-1, 0, m), -CohClass::hyperplane(shape, i));
        hg_arg += series_from(mm.g[i], h_over_alpha, m, order);
    }

    QSeries n = series_from(mm.normalization, one, m, order);
    n += QSeries::constant(one, m, order);

    return {exp_series(f_arg), exp_series(hg_arg), reciprocal_unit_series(n)};
}

/// Exact solve of sum_k c_k columns[k] = rhs over Q. nullopt when inconsistent.
/// Free variables are set to zero; rank deficiency is reported through `unique`.
std::optional<std::vector<Rat>> solve_columns(const std::vector<LaurentBlock>& columns, const LaurentBlock& rhs,
                                              bool& unique)
{
    std::map<std::pair<Monomial, int>, std::size_t> row_of;
    auto index_rows = [&](const LaurentBlock& b) {
        for (const auto& [mono, c] : b.terms())
            for (int i = 0; i < c.shape()->size(); ++i)
                if (c[i] != 0)
                    row_of.try_emplace({mono, i}, row_of.size());
    };
    for (const auto& c : columns)
        index_rows(c);
    index_rows(rhs);

    const std::size_t rows = row_of.size();
    const std::size_t cols = columns.size();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
    auto fill = [&](const LaurentBlock& b, std::size_t col) {
        for (const auto& [mono, c] : b.terms())
            for (int i = 0; i < c.shape()->size(); ++i)
                if (c[i] != 0)
                    a[row_of.at({mono, i})][col] = c[i];
    };
    for (std::size_t k = 0; k < cols; ++k)
        fill(columns[k], k);
    fill(rhs, cols);

    std::vector<int> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        const Rat inv = 1 / a[r][c];
        for (auto& v : a[r])
            v *= inv;
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == r || a[q][c] == 0)
                continue;
            const Rat factor = a[q][c];
            for (std::size_t k = c; k <= cols; ++k)
                a[q][k] -= factor * a[r][k];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++r;
    }
    for (std::size_t q = r; q < rows; ++q)
        if (a[q][cols] != 0)
            return std::nullopt;
    unique = r == cols;
    std::vector<Rat> x(cols);
    for (std::size_t q = 0; q < r; ++q)
        x[pivot_col_of_row[q]] = a[q][cols];
    return x;
}

std::string describe(const Degree& d)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i)
        os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

}  // namespace

QSeries integrand(const EulerData& data, const MirrorMap& mm, std::optional<int> order)
{
    const int D = std::min(order.value_or(data.order), data.order);
    const int m = mm.factors;
    if (m != static_cast<int>(data.spec.spec.factors.size()))
        throw ShapeError("mirror map has wrong number of axes");
    const SeriesParts parts = mirror_series(data, mm, D);

    QSeries b(data.spec.shape, m, m, D);
    for (const auto& [d, block] : data.terms)
        b.add(d, block);

    QSeries left = parts.exp_f * (b * parts.inverse_normalization);
    QSeries right = parts.exp_minus_hg.times(data.omega);
    return (left - right).times(exp_minus_Ht_over_alpha(data.spec.shape));
}

MirrorMap solve_mirror_map(const EulerData& data, SolveOptions options)
{
    const int m = static_cast<int>(data.spec.spec.factors.size());
    const ShapePtr& shape = data.spec.shape;
    MirrorMap mm = zero_mirror_map(m, data.order);

    std::vector<Degree> order = effective_degrees(m, 1, data.order);
    if (options.reverse_ties) {
        std::stable_sort(order.begin(), order.end(), [](const Degree& a, const Degree& b) {
            const int ta = total_degree(a), tb = total_degree(b);
            return ta != tb ? ta < tb : b < a;
        });
    }

    const LaurentBlock& om = data.omega;
    const LaurentBlock x_omega = om * LaurentBlock::term(plain(-1, 1, m), CohClass::one(shape));
    std::vector<LaurentBlock> span{x_omega};
    for (int i = 0; i < m; ++i)
        span.push_back(om * LaurentBlock::term(plain(-1, 0, m), CohClass::hyperplane(shape, i)));

    auto untwisted = [](const LaurentBlock& b, int alpha) {
        return b.filter([&](const Monomial& mono) { return mono.alpha == alpha && mono.t_degree() == 0; });
    };

    for (const auto& d : order) {
        const int level = total_degree(d);
        LaurentBlock r = integrand(data, mm, level).coefficient(d);

        // alpha^0: R0 = N_d Omega
        const LaurentBlock r0 = untwisted(r, 0);
        if (!r0.is_zero()) {
            bool unique = true;
            const auto sol = solve_columns({om}, r0, unique);
            if (!sol)
                throw InconsistencyError("mirror transform inconsistency: alpha^0 coefficient at degree " +
                                         describe(d) + " is not a scalar multiple of Omega");
            set_or_erase(mm.normalization, d, (*sol)[0]);
            r = integrand(data, mm, level).coefficient(d);
        }

        // alpha^-1: R1 = -(f_d x Omega + sum_i g_{i,d} H_i Omega)
        const LaurentBlock r1 = untwisted(r, -1);
        if (!r1.is_zero()) {
            bool unique = true;
            const auto sol = solve_columns(span, -r1, unique);
            if (!sol)
                throw InconsistencyError("mirror transform inconsistency: alpha^-1 coefficient at degree " +
                                         describe(d) + " is not in span{x Omega, H_i Omega}");
            if (!unique)
                throw InconsistencyError("mirror transform inconsistency: f, g not determined at degree " +
                                         describe(d));
            set_or_erase(mm.f, d, (*sol)[0]);
            for (int i = 0; i < m; ++i)
                set_or_erase(mm.g[i], d, (*sol)[1 + i]);
            r = integrand(data, mm, level).coefficient(d);
        }

        if (const auto top = r.max_alpha(); top && *top >= -1)
            throw InconsistencyError("mirror transform inconsistency: integrand at degree " + describe(d) +
                                     " has alpha^" + std::to_string(*top) + " after solving");
    }
    return mm;
}

std::optional<int> max_alpha_exponent(const QSeries& series)
{
    std::optional<int> top;
    for (const auto& [d, b] : series.terms()) {
        if (total_degree(d) == 0)
            continue;
        if (const auto a = b.max_alpha(); a && (!top || *a > *top))
            top = a;
    }
    return top;
}

const Rat& InvariantTable::at(const Degree& d) const
{
    for (const auto& e : entries)
        if (e.degree == d)
            return e.k;
    throw DomainError("no invariant stored for degree " + describe(d));
}

bool InvariantTable::operator==(const InvariantTable& other) const
{
    if (s != other.s || entries.size() != other.entries.size())
        return false;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].degree != other.entries[i].degree || entries[i].k != other.entries[i].k ||
            entries[i].k_raw != other.entries[i].k_raw)
            return false;
    return true;
}

InvariantTable extract_invariants(const EulerData& data, const MirrorMap& mm)
{
    const int m = mm.factors;
    const int D = data.order;
    const int s = data.spec.s;
    const QSeries lhs = integrate(integrand(data, mm));

    if (!lhs.coefficient(Degree(m, 0)).is_zero())
        throw ExtractionError("degree-0 part of the bracket does not vanish");

    // Grading: x^j for j < s must vanish; at x^s only alpha^-3 may appear.
    for (const auto& [d, block] : lhs.terms()) {
        for (const auto& [mono, c] : block.terms()) {
            if (mono.x < s)
                throw ExtractionError("grading error: x^" + std::to_string(mono.x) + " term below x^" +
                                      std::to_string(s) + " at degree " + describe(d));
            if (mono.x == s && mono.alpha != -3)
                throw ExtractionError("grading error: alpha^" + std::to_string(mono.alpha) + " term in the x^" +
                                      std::to_string(s) + " slice at degree " + describe(d));
        }
    }
    auto lhs_coeff = [&](const Degree& d, const std::vector<int>& t) {
        return lhs.coefficient(d).coefficient(Monomial{-3, s, t})[0];
    };

    // Scalar series over the point for the right-hand side.
    const ShapePtr point = point_shape();
    const LaurentBlock one = LaurentBlock::constant(CohClass::one(point), 0);
    const auto degrees = effective_degrees(m, 1, D);

    std::vector<QSeries> g_series;
    for (int i = 0; i < m; ++i)
        g_series.push_back(series_from(mm.g[i], one, m, D));

    // For each d': E_{d'} = q^{d'} exp(d'.g)
    std::map<Degree, QSeries> e_series;
    std::map<Degree, QSeries> dg_series;
    for (const auto& dp : degrees) {
        QSeries dg(point, m, 0, D);
        for (int i = 0; i < m; ++i)
            dg += g_series[i] * Rat(dp[i]);
        QSeries shift(point, m, 0, D);
        shift.add(dp, one);
        e_series.emplace(dp, shift * exp_series(dg));
        dg_series.emplace(dp, dg);
    }

    std::map<Degree, Rat> k;
    const std::vector<int> t0(m, 0);
    for (const auto& d : degrees) {
        Rat acc = lhs_coeff(d, t0);
        for (const auto& dp : degrees) {
            if (dp == d || !degree_leq(dp, d))
                continue;
            // [E_{d'} (2 - d'.g)]_d
            const QSeries t0_series = e_series.at(dp) * Rat(2) - e_series.at(dp) * dg_series.at(dp);
            acc -= k.at(dp) * t0_series.coefficient(d).coefficient(Monomial{0, 0, {}})[0];
        }
        k[d] = acc / 2;
    }

    // Overdetermination: coefficient of t_i is -sum_{d'} K_{d'} d'_i [E_{d'}]_d.
    for (const auto& d : degrees) {
        const LaurentBlock block = lhs.coefficient(d);
        for (const auto& [mono, c] : block.terms())
            if (mono.x == s && mono.t_degree() >= 2)
                throw ExtractionError("overdetermination failure: t-degree " + std::to_string(mono.t_degree()) +
                                      " term at degree " + describe(d));
        for (int i = 0; i < m; ++i) {
            std::vector<int> ti(m, 0);
            ti[i] = 1;
            Rat expected = 0;
            for (const auto& dp : degrees)
                if (degree_leq(dp, d) && dp[i] != 0)
                    expected -= k.at(dp) * dp[i] * e_series.at(dp).coefficient(d).coefficient(Monomial{0, 0, {}})[0];
            if (lhs_coeff(d, ti) != expected)
                throw ExtractionError("overdetermination failure: t_" + std::to_string(i + 1) +
                                      " component mismatch at degree " + describe(d));
        }
    }

    InvariantTable table;
    table.s = s;
    for (const auto& d : degrees) {
        InvariantEntry e{d, {}, k.at(d)};
        if (e.k != 0)
            e.k_raw.emplace(s, e.k);
        table.entries.push_back(std::move(e));
    }
    return table;
}

PipelineResult run_pipeline(const ValidatedSpec& vs, int order, ChernMode mode, SolveOptions options)
{
    if (order < 1)
        throw DomainError("truncation order must be >= 1");
    EulerData data = build_euler_data(vs, order, mode);
    MirrorMap mm = solve_mirror_map(data, options);
    InvariantTable table = extract_invariants(data, mm);
    return {std::move(data), std::move(mm), std::move(table)};
}

bool is_p1_concave_pair(const GeometrySpec& spec)
{
    if (spec.factors != std::vector<int>{1} || spec.bundles.size() != 2)
        return false;
    for (const auto& b : spec.bundles)
        if (b.kind != BundleKind::concave || b.multidegree != std::vector<long>{-1})
            return false;
    return true;
}

Rat one_pointed(const GeometrySpec& spec, const InvariantTable& table, int d)
{
    if (!is_p1_concave_pair(spec))
        throw Unsupported("one-pointed numbers are only available for P^1 with O(-1)+O(-1)");
    return Rat(d) * table.at(Degree{d});
}

Rat two_pointed(const GeometrySpec& spec, const InvariantTable& table, int d)
{
    return Rat(d) * one_pointed(spec, table, d);
}

}  // namespace mirror
