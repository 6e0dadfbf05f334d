#include <doctest.h>

#include "mirror/error.hpp"
#include "mirror/qseries.hpp"
#include "support.hpp"

using namespace mirror;
using testing_support::Gen;

namespace {

ShapePtr P(int n) { return CohShape::make({n}); }

}  // namespace

TEST_CASE("rationals are canonical and print as p/q")
{
    const Rat r = make_rat(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(make_rat(2875)) == "2875/1");
    CHECK(to_string(make_rat(-45, 8)) == "-45/8");
    CHECK(parse_rat("10/4") == make_rat(5, 2));
    CHECK(parse_rat("-7") == make_rat(-7));
    CHECK_THROWS_AS(parse_rat("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rat("abc"), DomainError);
}

TEST_CASE("parse_rat inverts to_string")
{
    Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        const Rat r = gen.rational() * gen.rational() + gen.rational();
        CHECK(parse_rat(to_string(r)) == r);
    }
}

TEST_CASE("coh_mul examples")
{
    const auto p1 = P(1);
    const CohClass h = CohClass::hyperplane(p1, 0);
    CHECK(coh_mul(h, h).is_zero());

    const auto p4 = P(4);
    const CohClass h4 = CohClass::hyperplane(p4, 0);
    const CohClass five_h = h4 * Rat(5);
    const CohClass h_cubed = h4 * h4 * h4;
    const int top[] = {4};
    CHECK(coh_mul(five_h, h_cubed) == CohClass::monomial(p4, top, Rat(5)));

    const auto p1p1 = CohShape::make({1, 1});
    const CohClass s = CohClass::hyperplane(p1p1, 0) + CohClass::hyperplane(p1p1, 1);
    const int mixed[] = {1, 1};
    CHECK(coh_mul(s, s) == CohClass::monomial(p1p1, mixed, Rat(2)));

    CHECK_THROWS_AS(coh_mul(h, h4), ShapeError);
}

TEST_CASE("integrate examples")
{
    CHECK(integrate(CohClass::hyperplane(P(1), 0) * Rat(3)) == 3);
    const int top[] = {4};
    CHECK(integrate(CohClass::monomial(P(4), top, Rat(5))) == 5);
    CHECK(integrate(CohClass::one(P(2))) == 0);
}

TEST_CASE("cohomology ring axioms on random classes")
{
    Gen gen(3);
    for (const auto& dims : {std::vector<int>{1}, {3}, {1, 2}, {2, 1, 1}}) {
        const auto shape = CohShape::make(dims);
        for (int trial = 0; trial < 30; ++trial) {
            const CohClass a = gen.coh(shape), b = gen.coh(shape), c = gen.coh(shape);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * CohClass::one(shape) == a);
            const Rat k = gen.rational();
            CHECK(integrate(a * k + b) == k * integrate(a) + integrate(b));
        }
    }
}

TEST_CASE("integrate vanishes below top degree")
{
    Gen gen(5);
    const auto shape = CohShape::make({2, 2});
    for (int trial = 0; trial < 20; ++trial) {
        const CohClass a = gen.coh(shape);
        for (int deg = 0; deg < shape->dimension(); ++deg)
            CHECK(integrate(a.component(deg)) == 0);
    }
}

TEST_CASE("invert_linear_factor examples")
{
    const auto p1 = P(1);
    const CohClass one = CohClass::one(p1);
    const CohClass h = CohClass::hyperplane(p1, 0);

    LaurentBlock expected(p1, 0);
    expected.add_term(Monomial{-1, 0, {}}, -one);
    expected.add_term(Monomial{-2, 0, {}}, -h);
    CHECK(invert_linear_factor(h, 1, 0) == expected);

    LaurentBlock half(p1, 0);
    half.add_term(Monomial{-1, 0, {}}, one * make_rat(-1, 2));
    half.add_term(Monomial{-2, 0, {}}, h * make_rat(-1, 4));
    CHECK(invert_linear_factor(h, 2, 0) == half);

    CHECK_THROWS_AS(invert_linear_factor(h, 0, 0), DomainError);
    CHECK_THROWS_AS(invert_linear_factor(one, 1, 0), DomainError);
}

TEST_CASE("square of (H - alpha)^-1 against a hand-rolled multiplier")
{
    // Pairs (alpha exponent, H exponent) with H^2 = 0 on P^1.
    using Poly = std::map<std::pair<int, int>, Rat>;
    const Poly inv{{{-1, 0}, Rat(-1)}, {{-2, 1}, Rat(-1)}};
    Poly sq;
    for (const auto& [a, x] : inv)
        for (const auto& [b, y] : inv)
            if (a.second + b.second <= 1)
                sq[{a.first + b.first, a.second + b.second}] += x * y;

    const auto p1 = P(1);
    const LaurentBlock got = invert_linear_factor(CohClass::hyperplane(p1, 0), 1, 0) *
                             invert_linear_factor(CohClass::hyperplane(p1, 0), 1, 0);
    LaurentBlock expected(p1, 0);
    for (const auto& [key, c] : sq) {
        const int e[] = {key.second};
        expected.add_term(Monomial{key.first, 0, {}}, CohClass::monomial(p1, e, c));
    }
    CHECK(got == expected);
    CHECK(got.coefficient(Monomial{-2, 0, {}}) == CohClass::one(p1));
    CHECK(got.coefficient(Monomial{-3, 0, {}}) == CohClass::hyperplane(p1, 0) * Rat(2));
}

TEST_CASE("invert_linear_factor times the factor is one")
{
    Gen gen(7);
    for (const auto& dims : {std::vector<int>{1}, {4}, {1, 3}}) {
        const auto shape = CohShape::make(dims);
        for (int trial = 0; trial < 20; ++trial) {
            const CohClass c = gen.nilpotent(shape);
            long k = gen.integer(-4, 4);
            if (k == 0)
                k = 3;
            const LaurentBlock factor = LaurentBlock::linear_factor(c, k, 0, false);
            CHECK(factor * invert_linear_factor(c, k, 0) == LaurentBlock::constant(CohClass::one(shape), 0));
        }
    }
}

TEST_CASE("invert_x_factor times (x + c) is one")
{
    Gen gen(9);
    const auto shape = CohShape::make({2, 1});
    for (int trial = 0; trial < 20; ++trial) {
        const CohClass c = gen.nilpotent(shape);
        CHECK(LaurentBlock::linear_factor(c, 0, 2) * invert_x_factor(c, 2) ==
              LaurentBlock::constant(CohClass::one(shape), 2));
    }
}

TEST_CASE("exp(-Ht/alpha) examples")
{
    const auto p1 = P(1);
    const CohClass h1 = CohClass::hyperplane(p1, 0);
    LaurentBlock e1(p1, 1);
    e1.add_term(Monomial{0, 0, {0}}, CohClass::one(p1));
    e1.add_term(Monomial{-1, 0, {1}}, -h1);
    CHECK(exp_minus_Ht_over_alpha(p1) == e1);

    const auto p2 = P(2);
    const CohClass h2 = CohClass::hyperplane(p2, 0);
    LaurentBlock e2(p2, 1);
    e2.add_term(Monomial{0, 0, {0}}, CohClass::one(p2));
    e2.add_term(Monomial{-1, 0, {1}}, -h2);
    e2.add_term(Monomial{-2, 0, {2}}, h2 * h2 * make_rat(1, 2));
    CHECK(exp_minus_Ht_over_alpha(p2) == e2);

    CHECK_THROWS_AS(exp_nilpotent(LaurentBlock::constant(CohClass::one(p2), 1)), DomainError);
}

TEST_CASE("exp of the zero series is one")
{
    const auto p4 = P(4);
    const QSeries zero(p4, 1, 1, 3);
    const QSeries e = exp_series(zero);
    CHECK(e == QSeries::constant(LaurentBlock::constant(CohClass::one(p4), 1), 1, 3));
}

TEST_CASE("Laurent blocks form a commutative ring")
{
    Gen gen(13);
    const auto shape = CohShape::make({1, 1});
    for (int trial = 0; trial < 25; ++trial) {
        const LaurentBlock a = gen.block(shape, 2), b = gen.block(shape, 2), c = gen.block(shape, 2);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exp of a sum is the product of exps")
{
    Gen gen(17);
    const auto shape = CohShape::make({3});
    for (int trial = 0; trial < 10; ++trial) {
        LaurentBlock a(shape, 0), b(shape, 0);
        a.add_term(Monomial{gen.integer(-2, 1), 0, {}}, gen.nilpotent(shape));
        b.add_term(Monomial{gen.integer(-2, 1), gen.integer(0, 1), {}}, gen.nilpotent(shape));
        CHECK(exp_nilpotent(a + b) == exp_nilpotent(a) * exp_nilpotent(b));
    }
}

TEST_CASE("QSeries convolution is stable under truncation")
{
    Gen gen(19);
    const auto shape = CohShape::make({1});
    for (int trial = 0; trial < 10; ++trial) {
        QSeries a(shape, 2, 0, 5), b(shape, 2, 0, 5);
        for (const auto& d : effective_degrees(2, 0, 5)) {
            if (gen.integer(0, 1))
                a.add(d, gen.block(shape, 0));
            if (gen.integer(0, 1))
                b.add(d, gen.block(shape, 0));
        }
        for (int D = 1; D < 5; ++D)
            CHECK((a * b).truncated(D) == a.truncated(D) * b.truncated(D));
    }
}

TEST_CASE("reciprocal of a unit series")
{
    const auto pt = point_shape();
    const LaurentBlock one = LaurentBlock::constant(CohClass::one(pt), 0);
    QSeries s = QSeries::constant(one, 1, 6);
    s.add({1}, one * Rat(3));
    s.add({4}, one * make_rat(-2, 7));
    CHECK(s * reciprocal_unit_series(s) == QSeries::constant(one, 1, 6));
}

TEST_CASE("effective degrees are ordered by total degree then lexicographically")
{
    const auto ds = effective_degrees(2, 1, 2);
    const std::vector<Degree> expected{{0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
    CHECK(ds == expected);
    CHECK(degree_leq({1, 0}, {1, 1}));
    CHECK_FALSE(degree_leq({2, 0}, {1, 1}));
}

TEST_CASE("LaurentBlock rejects t-degrees beyond the cap")
{
    const auto p1 = P(1);
    LaurentBlock b(p1, 1);
    CHECK_THROWS_AS(b.add_term(Monomial{0, 0, {3}}, CohClass::one(p1)), DomainError);
    CHECK_THROWS_AS(b.add_term(Monomial{0, 0, {1, 0}}, CohClass::one(p1)), ShapeError);
}
