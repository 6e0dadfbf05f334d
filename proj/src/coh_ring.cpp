#include "mirror/coh_ring.hpp"

#include <sstream>

#include "mirror/error.hpp"

namespace mirror {

CohShape::CohShape(std::vector<int> dims) : dims_(std::move(dims))
{
    for (int n : dims_) {
        if (n < 0)
            throw ShapeError("negative projective dimension");
        strides_.push_back(size_);
        size_ *= n + 1;
        dimension_ += n;
    }
    degree_.resize(size_);
    for (int i = 0; i < size_; ++i) {
        int deg = 0;
        for (int e : exponents(i))
            deg += e;
        degree_[i] = deg;
    }
    product_.assign(static_cast<std::size_t>(size_) * size_, -1);
    for (int a = 0; a < size_; ++a) {
        const auto ea = exponents(a);
        for (int b = 0; b < size_; ++b) {
            const auto eb = exponents(b);
            int idx = 0;
            bool alive = true;
            for (std::size_t k = 0; k < dims_.size(); ++k) {
                const int e = ea[k] + eb[k];
                if (e > dims_[k]) {
                    alive = false;
                    break;
                }
                idx += e * strides_[k];
            }
            if (alive)
                product_[static_cast<std::size_t>(a) * size_ + b] = idx;
        }
    }
}

std::shared_ptr<const CohShape> CohShape::make(std::vector<int> dims)
{
    return std::shared_ptr<const CohShape>(new CohShape(std::move(dims)));
}

std::vector<int> CohShape::exponents(int index) const
{
    std::vector<int> e(dims_.size());
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        e[k] = index % (dims_[k] + 1);
        index /= dims_[k] + 1;
    }
    return e;
}

int CohShape::index(std::span<const int> exponents) const
{
    if (exponents.size() != dims_.size())
        throw ShapeError("exponent vector has wrong arity");
    int idx = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (exponents[k] < 0 || exponents[k] > dims_[k])
            throw ShapeError("exponent out of range");
        idx += exponents[k] * strides_[k];
    }
    return idx;
}

bool same_shape(const ShapePtr& a, const ShapePtr& b)
{
    return a == b || *a == *b;
}

CohClass::CohClass(ShapePtr shape) : shape_(std::move(shape)), coeffs_(shape_->size()) {}

CohClass CohClass::scalar(ShapePtr shape, const Rat& value)
{
    CohClass c(std::move(shape));
    c.coeffs_[0] = value;
    return c;
}

CohClass CohClass::hyperplane(ShapePtr shape, int factor)
{
    std::vector<int> e(shape->factors(), 0);
    if (factor < 0 || factor >= shape->factors())
        throw ShapeError("hyperplane index out of range");
    e[factor] = 1;
    return monomial(std::move(shape), e, Rat(1));
}

CohClass CohClass::linear(ShapePtr shape, std::span<const long> coeffs)
{
    if (static_cast<int>(coeffs.size()) != shape->factors())
        throw ShapeError("linear form has wrong arity");
    CohClass c(shape);
    for (int i = 0; i < shape->factors(); ++i)
        if (coeffs[i] != 0 && shape->dims()[i] > 0)
            c += hyperplane(shape, i) * Rat(coeffs[i]);
    return c;
}

CohClass CohClass::monomial(ShapePtr shape, std::span<const int> exponents, const Rat& coeff)
{
    CohClass c(shape);
    c.coeffs_[shape->index(exponents)] = coeff;
    return c;
}

bool CohClass::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

CohClass CohClass::component(int degree) const
{
    CohClass out(shape_);
    for (int i = 0; i < shape_->size(); ++i)
        if (shape_->degree(i) == degree)
            out.coeffs_[i] = coeffs_[i];
    return out;
}

CohClass& CohClass::operator+=(const CohClass& other)
{
    if (!same_shape(shape_, other.shape_))
        throw ShapeError("cohomology classes over different spaces");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (other.coeffs_[i] != 0)
            coeffs_[i] += other.coeffs_[i];
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& other)
{
    if (!same_shape(shape_, other.shape_))
        throw ShapeError("cohomology classes over different spaces");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (other.coeffs_[i] != 0)
            coeffs_[i] -= other.coeffs_[i];
    return *this;
}

CohClass& CohClass::operator*=(const Rat& factor)
{
    for (auto& c : coeffs_)
        if (c != 0)
            c *= factor;
    return *this;
}

void CohClass::add_product(const CohClass& a, const CohClass& b, const Rat& factor)
{
    if (!same_shape(shape_, a.shape_) || !same_shape(shape_, b.shape_))
        throw ShapeError("cohomology classes over different spaces");
    const int n = shape_->size();
    Rat tmp;
    for (int i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (int j = 0; j < n; ++j) {
            if (b.coeffs_[j] == 0)
                continue;
            const int k = shape_->product(i, j);
            if (k < 0)
                continue;
            tmp = a.coeffs_[i] * b.coeffs_[j];
            tmp *= factor;
            coeffs_[k] += tmp;
        }
    }
}

CohClass operator*(const CohClass& a, const CohClass& b)
{
    return coh_mul(a, b);
}

CohClass CohClass::operator-() const
{
    CohClass out(*this);
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

bool CohClass::operator==(const CohClass& other) const
{
    return same_shape(shape_, other.shape_) && coeffs_ == other.coeffs_;
}

std::string CohClass::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < shape_->size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << coeffs_[i].get_str();
        const auto e = shape_->exponents(i);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0)
                os << "*H" << k + 1 << (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
    }
    return first ? "0" : os.str();
}

CohClass coh_mul(const CohClass& a, const CohClass& b)
{
    if (!same_shape(a.shape(), b.shape()))
        throw ShapeError("cup product of classes over different spaces");
    CohClass out(a.shape());
    out.add_product(a, b, Rat(1));
    return out;
}

Rat integrate(const CohClass& a)
{
    return a[a.shape()->top_index()];
}

}  // namespace mirror
