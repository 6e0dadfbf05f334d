#include "mirror/qseries.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mirror/error.hpp"

namespace mirror {

int total_degree(const Degree& d)
{
    return std::accumulate(d.begin(), d.end(), 0);
}

std::vector<Degree> effective_degrees(int factors, int lo, int hi)
{
    std::vector<Degree> out;
    Degree d(factors, 0);
    // Enumerate the box [0, hi]^m and keep the band.
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == factors) {
            const int tot = hi - remaining;
            if (tot >= lo)
                out.push_back(d);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            d[i] = v;
            rec(i + 1, remaining - v);
        }
        d[i] = 0;
    };
    rec(0, hi);
    std::sort(out.begin(), out.end(), [](const Degree& a, const Degree& b) {
        const int ta = total_degree(a), tb = total_degree(b);
        return ta != tb ? ta < tb : a < b;
    });
    return out;
}

bool degree_leq(const Degree& a, const Degree& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

QSeries::QSeries(ShapePtr shape, int factors, int tvars, int order)
    : shape_(std::move(shape)), factors_(factors), tvars_(tvars), order_(order)
{
    if (order < 0)
        throw DomainError("negative truncation order");
}

QSeries QSeries::constant(const LaurentBlock& block, int factors, int order)
{
    QSeries s(block.shape(), factors, block.tvars(), order);
    s.add(Degree(factors, 0), block);
    return s;
}

LaurentBlock QSeries::coefficient(const Degree& d) const
{
    auto it = terms_.find(d);
    return it == terms_.end() ? LaurentBlock(shape_, tvars_) : it->second;
}

void QSeries::add(const Degree& d, const LaurentBlock& block)
{
    if (static_cast<int>(d.size()) != factors_)
        throw ShapeError("degree has wrong arity");
    for (int v : d)
        if (v < 0)
            throw DomainError("non-effective degree");
    if (total_degree(d) > order_ || block.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(d, block);
    if (!inserted) {
        it->second += block;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void QSeries::set(const Degree& d, const LaurentBlock& block)
{
    terms_.erase(d);
    add(d, block);
}

bool QSeries::has_constant_term() const
{
    return terms_.count(Degree(factors_, 0)) > 0;
}

QSeries QSeries::truncated(int order) const
{
    QSeries out(shape_, factors_, tvars_, std::min(order, order_));
    for (const auto& [d, b] : terms_)
        out.add(d, b);
    return out;
}

void QSeries::check_compatible(const QSeries& other) const
{
    if (factors_ != other.factors_ || tvars_ != other.tvars_ || !same_shape(shape_, other.shape_))
        throw ShapeError("q-series over different rings");
}

QSeries& QSeries::operator+=(const QSeries& other)
{
    check_compatible(other);
    for (const auto& [d, b] : other.terms_)
        add(d, b);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& other)
{
    check_compatible(other);
    for (const auto& [d, b] : other.terms_)
        add(d, -b);
    return *this;
}

QSeries& QSeries::operator*=(const Rat& f)
{
    if (f == 0)
        terms_.clear();
    for (auto& [d, b] : terms_)
        b *= f;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    a.check_compatible(b);
    QSeries out(a.shape_, a.factors_, a.tvars_, std::min(a.order_, b.order_));
    for (const auto& [da, ba] : a.terms_) {
        const int ta = total_degree(da);
        for (const auto& [db, bb] : b.terms_) {
            if (ta + total_degree(db) > out.order_)
                continue;
            Degree d = da;
            for (std::size_t i = 0; i < d.size(); ++i)
                d[i] += db[i];
            auto [it, inserted] =
                out.terms_.try_emplace(d, a.shape_, a.tvars_, std::max(ba.t_cap(), bb.t_cap()));
            it->second.add_product(ba, bb, Rat(1));
            if (it->second.is_zero())
                out.terms_.erase(it);
        }
    }
    return out;
}

QSeries QSeries::times(const LaurentBlock& block) const
{
    QSeries out(shape_, factors_, tvars_, order_);
    for (const auto& [d, b] : terms_)
        out.add(d, b * block);
    return out;
}

bool QSeries::operator==(const QSeries& other) const
{
    return factors_ == other.factors_ && tvars_ == other.tvars_ && order_ == other.order_ &&
           same_shape(shape_, other.shape_) && terms_ == other.terms_;
}

QSeries exp_series(const QSeries& arg)
{
    if (arg.has_constant_term())
        throw DomainError("exp of a series with a constant term");
    const Degree zero(arg.factors(), 0);
    QSeries out = QSeries::constant(
        LaurentBlock::constant(CohClass::one(arg.shape()), arg.tvars()), arg.factors(), arg.order());
    QSeries power = out;
    for (int k = 1; k <= arg.order(); ++k) {
        power = power * arg;
        power *= Rat(1, k);
        if (power.is_zero())
            break;
        out += power;
    }
    return out;
}

QSeries reciprocal_unit_series(const QSeries& s)
{
    const Degree zero(s.factors(), 0);
    const LaurentBlock one = LaurentBlock::constant(CohClass::one(s.shape()), s.tvars());
    if (!(s.coefficient(zero) == one))
        throw DomainError("reciprocal of a series whose constant term is not 1");
    QSeries u = s - QSeries::constant(one, s.factors(), s.order());
    // 1/(1+u) = sum (-u)^k
    QSeries out = QSeries::constant(one, s.factors(), s.order());
    QSeries power = out;
    for (int k = 1; k <= s.order(); ++k) {
        power = power * u;
        power *= Rat(-1);
        if (power.is_zero())
            break;
        out += power;
    }
    return out;
}

QSeries integrate(const QSeries& s)
{
    QSeries out(point_shape(), s.factors(), s.tvars(), s.order());
    for (const auto& [d, b] : s.terms())
        out.add(d, integrate(b));
    return out;
}

}  // namespace mirror
