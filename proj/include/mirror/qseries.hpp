#pragma once

#include <map>
#include <vector>

#include "mirror/laurent.hpp"

namespace mirror {

/// Curve class d in H_2(prod P^{n_i}); effective means all d_i >= 0.
using Degree = std::vector<int>;

int total_degree(const Degree& d);
/// All effective degrees with lo <= |d| <= hi, ordered by total degree then lexicographically.
std::vector<Degree> effective_degrees(int factors, int lo, int hi);
/// a - b if componentwise nonnegative.
bool degree_leq(const Degree& a, const Degree& b);

/// Truncated series sum_d c_d q^d over effective degrees with |d| <= order,
/// q_i standing for e^{t_i}. Zero coefficients are never stored.
class QSeries {
public:
    QSeries(ShapePtr shape, int factors, int tvars, int order);

    /// The series whose only coefficient is block at d = 0.
    static QSeries constant(const LaurentBlock& block, int factors, int order);

    const ShapePtr& shape() const { return shape_; }
    int factors() const { return factors_; }
    int tvars() const { return tvars_; }
    int order() const { return order_; }
    const std::map<Degree, LaurentBlock>& terms() const { return terms_; }

    LaurentBlock coefficient(const Degree& d) const;
    /// Accumulates into the degree-d coefficient; silently dropped above the order.
    void add(const Degree& d, const LaurentBlock& block);
    void set(const Degree& d, const LaurentBlock& block);

    bool is_zero() const { return terms_.empty(); }
    bool has_constant_term() const;

    /// Same series cut to a lower order.
    QSeries truncated(int order) const;

    QSeries& operator+=(const QSeries& other);
    QSeries& operator-=(const QSeries& other);
    QSeries& operator*=(const Rat& f);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rat& f) { return a *= f; }
    /// Graded convolution truncated at min(order).
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    /// Coefficientwise product with a degree-0 block.
    QSeries times(const LaurentBlock& block) const;

    bool operator==(const QSeries& other) const;

private:
    void check_compatible(const QSeries& other) const;

    ShapePtr shape_;
    int factors_;
    int tvars_;
    int order_;
    std::map<Degree, LaurentBlock> terms_;
};

/// exp(arg) for arg with no degree-0 term; terminates at the truncation order.
QSeries exp_series(const QSeries& arg);

/// 1/s for s with degree-0 term equal to 1 (a scalar one).
QSeries reciprocal_unit_series(const QSeries& s);

/// Fiberwise integral of every coefficient.
QSeries integrate(const QSeries& s);

}  // namespace mirror
