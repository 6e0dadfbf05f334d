#include "mirror/laurent.hpp"

#include <numeric>
#include <sstream>

#include "mirror/error.hpp"

namespace mirror {

int Monomial::t_degree() const
{
    return std::accumulate(t.begin(), t.end(), 0);
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m{a.alpha + b.alpha, a.x + b.x, a.t};
    for (std::size_t i = 0; i < m.t.size(); ++i)
        m.t[i] += b.t[i];
    return m;
}

LaurentBlock::LaurentBlock(ShapePtr shape, int tvars, std::optional<int> t_cap)
    : shape_(std::move(shape)), tvars_(tvars), t_cap_(t_cap.value_or(shape_->dimension() + 1))
{
}

LaurentBlock LaurentBlock::constant(const CohClass& c, int tvars)
{
    LaurentBlock b(c.shape(), tvars);
    b.add_term(Monomial{0, 0, std::vector<int>(tvars, 0)}, c);
    return b;
}

LaurentBlock LaurentBlock::term(const Monomial& m, const CohClass& c)
{
    LaurentBlock b(c.shape(), static_cast<int>(m.t.size()));
    b.add_term(m, c);
    return b;
}

LaurentBlock LaurentBlock::monomial(ShapePtr shape, int tvars, int alpha, int x, const Rat& coeff)
{
    LaurentBlock b(shape, tvars);
    b.add_term(Monomial{alpha, x, std::vector<int>(tvars, 0)}, CohClass::scalar(shape, coeff));
    return b;
}

LaurentBlock LaurentBlock::linear_factor(const CohClass& c, long k, int tvars, bool with_x)
{
    LaurentBlock b = constant(c, tvars);
    if (with_x)
        b += monomial(c.shape(), tvars, 0, 1, Rat(1));
    if (k != 0)
        b += monomial(c.shape(), tvars, 1, 0, Rat(-k));
    return b;
}

CohClass LaurentBlock::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? CohClass(shape_) : it->second;
}

void LaurentBlock::add_term(const Monomial& m, const CohClass& c)
{
    if (static_cast<int>(m.t.size()) != tvars_)
        throw ShapeError("monomial has wrong number of t variables");
    if (!same_shape(shape_, c.shape()))
        throw ShapeError("coefficient over a different space");
    for (int e : m.t)
        if (e < 0)
            throw DomainError("negative t exponent");
    if (c.is_zero())
        return;
    if (m.t_degree() > t_cap_)
        throw DomainError("t-degree exceeds cap " + std::to_string(t_cap_));
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::optional<int> LaurentBlock::min_alpha() const
{
    std::optional<int> r;
    for (const auto& [m, c] : terms_)
        if (!r || m.alpha < *r)
            r = m.alpha;
    return r;
}

std::optional<int> LaurentBlock::max_alpha() const
{
    std::optional<int> r;
    for (const auto& [m, c] : terms_)
        if (!r || m.alpha > *r)
            r = m.alpha;
    return r;
}

std::optional<int> LaurentBlock::min_x() const
{
    std::optional<int> r;
    for (const auto& [m, c] : terms_)
        if (!r || m.x < *r)
            r = m.x;
    return r;
}

LaurentBlock LaurentBlock::filter(const std::function<bool(const Monomial&)>& keep) const
{
    LaurentBlock out(shape_, tvars_, t_cap_);
    for (const auto& [m, c] : terms_)
        if (keep(m))
            out.terms_.emplace(m, c);
    return out;
}

LaurentBlock LaurentBlock::alpha_slice(int a) const
{
    return filter([a](const Monomial& m) { return m.alpha == a; });
}

LaurentBlock LaurentBlock::evaluate_alpha(const Rat& value) const
{
    LaurentBlock out(shape_, tvars_, t_cap_);
    for (const auto& [m, c] : terms_) {
        if (m.alpha < 0 && value == 0)
            throw DomainError("alpha := 0 in a negative alpha power");
        Rat p = 1;
        for (int i = 0; i < std::abs(m.alpha); ++i)
            p *= value;
        if (m.alpha < 0)
            p = 1 / p;
        out.add_term(Monomial{0, m.x, m.t}, c * p);
    }
    return out;
}

LaurentBlock LaurentBlock::at_x_zero() const
{
    LaurentBlock out(shape_, tvars_, t_cap_);
    for (const auto& [m, c] : terms_) {
        if (m.x < 0)
            throw DomainError("x -> 0 of a block with negative x powers");
        if (m.x == 0)
            out.terms_.emplace(m, c);
    }
    return out;
}

void LaurentBlock::check_compatible(const LaurentBlock& other) const
{
    if (tvars_ != other.tvars_ || !same_shape(shape_, other.shape_))
        throw ShapeError("Laurent blocks over different rings");
}

LaurentBlock& LaurentBlock::operator+=(const LaurentBlock& other)
{
    check_compatible(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

LaurentBlock& LaurentBlock::operator-=(const LaurentBlock& other)
{
    check_compatible(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

LaurentBlock& LaurentBlock::operator*=(const Rat& f)
{
    if (f == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= f;
    return *this;
}

LaurentBlock& LaurentBlock::operator*=(const CohClass& k)
{
    LaurentBlock out(shape_, tvars_, t_cap_);
    for (const auto& [m, c] : terms_)
        out.add_term(m, coh_mul(c, k));
    return *this = std::move(out);
}

void LaurentBlock::add_product(const LaurentBlock& a, const LaurentBlock& b, const Rat& factor)
{
    check_compatible(a);
    check_compatible(b);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma * mb;
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                CohClass c(shape_);
                c.add_product(ca, cb, factor);
                if (!c.is_zero()) {
                    if (m.t_degree() > t_cap_)
                        throw DomainError("t-degree exceeds cap " + std::to_string(t_cap_));
                    terms_.emplace(std::move(m), std::move(c));
                }
            } else {
                it->second.add_product(ca, cb, factor);
                if (it->second.is_zero())
                    terms_.erase(it);
            }
        }
    }
}

LaurentBlock operator*(const LaurentBlock& a, const LaurentBlock& b)
{
    LaurentBlock out(a.shape(), a.tvars(), std::max(a.t_cap(), b.t_cap()));
    out.add_product(a, b, Rat(1));
    return out;
}

LaurentBlock LaurentBlock::operator-() const
{
    LaurentBlock out(*this);
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

bool LaurentBlock::operator==(const LaurentBlock& other) const
{
    return tvars_ == other.tvars_ && same_shape(shape_, other.shape_) && terms_ == other.terms_;
}

std::string LaurentBlock::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (m.alpha != 0)
            os << "*a^" << m.alpha;
        if (m.x != 0)
            os << "*x^" << m.x;
        for (std::size_t i = 0; i < m.t.size(); ++i)
            if (m.t[i] != 0)
                os << "*t" << i + 1 << "^" << m.t[i];
    }
    return os.str();
}

LaurentBlock invert_linear_factor(const CohClass& c, long k, int tvars)
{
    if (k == 0)
        throw DomainError("invert_linear_factor: k = 0 (degree-0 denominator)");
    if (!c.is_nilpotent())
        throw DomainError("invert_linear_factor: class has a nonzero scalar part");
    const ShapePtr& shape = c.shape();
    LaurentBlock out(shape, tvars);
    CohClass power = CohClass::one(shape);
    Rat kk(k);
    Rat scale = -1 / kk;
    for (int j = 0; !power.is_zero(); ++j) {
        out.add_term(Monomial{-1 - j, 0, std::vector<int>(tvars, 0)}, power * scale);
        power = coh_mul(power, c);
        scale /= kk;
    }
    return out;
}

LaurentBlock invert_x_factor(const CohClass& c, int tvars)
{
    if (!c.is_nilpotent())
        throw DomainError("invert_x_factor: class has a nonzero scalar part");
    const ShapePtr& shape = c.shape();
    LaurentBlock out(shape, tvars);
    CohClass power = CohClass::one(shape);
    const CohClass minus_c = -c;
    for (int j = 0; !power.is_zero(); ++j) {
        out.add_term(Monomial{0, -1 - j, std::vector<int>(tvars, 0)}, power);
        power = coh_mul(power, minus_c);
    }
    return out;
}

LaurentBlock exp_nilpotent(const LaurentBlock& arg)
{
    for (const auto& [m, c] : arg.terms())
        if (!c.is_nilpotent())
            throw DomainError("exp of a non-nilpotent argument");
    LaurentBlock out = LaurentBlock::constant(CohClass::one(arg.shape()), arg.tvars());
    // power holds arg^k / k!
    LaurentBlock power = out;
    for (int k = 1;; ++k) {
        power = power * arg;
        power *= Rat(1, k);
        if (power.is_zero())
            break;
        out += power;
    }
    return out;
}

LaurentBlock exp_minus_Ht_over_alpha(const ShapePtr& shape)
{
    const int m = shape->factors();
    LaurentBlock arg(shape, m);
    for (int i = 0; i < m; ++i) {
        Monomial mono{-1, 0, std::vector<int>(m, 0)};
        mono.t[i] = 1;
        arg.add_term(mono, -CohClass::hyperplane(shape, i));
    }
    return exp_nilpotent(arg);
}

ShapePtr point_shape()
{
    static const ShapePtr point = CohShape::make({});
    return point;
}

LaurentBlock integrate(const LaurentBlock& block)
{
    LaurentBlock out(point_shape(), block.tvars(), block.t_cap());
    for (const auto& [m, c] : block.terms())
        out.add_term(m, CohClass::scalar(point_shape(), integrate(c)));
    return out;
}

}  // namespace mirror
