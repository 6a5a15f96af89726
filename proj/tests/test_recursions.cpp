#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimers/recursions.hpp"

using namespace dimers;

static const std::map<Label, Rational> kOnes{
    {Label::A, 1}, {Label::B, 1}, {Label::C, 1}, {Label::D, 1}};

TEST_CASE("level-2 type vector") {
    auto v = hanoi_system(2);
    CHECK(v.I.str() == "2*a^2*b^2*c^2");
    CHECK(v.II.str() == "a^2*b^2*c + c^5");
    CHECK(v.III.str() == "a^2*b*c^2 + b^5");
    CHECK(v.IV.str() == "a^5 + a*b^2*c^2");
}

TEST_CASE("numeric iteration matches the symbolic system") {
    std::map<Label, Rational> w{{Label::A, Rational(2)}, {Label::B, Rational(1, 3)},
                                {Label::C, Rational(5, 2)}};
    for (int n = 1; n <= 4; ++n) {
        auto sym = hanoi_system(n);
        auto num = hanoi_system_eval(n, w.at(Label::A), w.at(Label::B), w.at(Label::C));
        CHECK(evaluate(sym.I, w) == num[0]);
        CHECK(evaluate(sym.II, w) == num[1]);
        CHECK(evaluate(sym.III, w) == num[2]);
        CHECK(evaluate(sym.IV, w) == num[3]);
    }
}

TEST_CASE("uniform closed form and type ratio") {
    MultiPoly x = MultiPoly::variable(Label::A);
    for (int n = 1; n <= 5; ++n) {
        auto v = hanoi_system(n, x, x, x);
        CHECK(v.total() == hanoi_uniform_closed(n));
        CHECK(v.I == x * v.II);  // type-I / type-II ratio is the edge weight
        CHECK(v.II == v.III);
        CHECK(v.III == v.IV);
    }
}

TEST_CASE("gasket systems match their closed totals") {
    for (int n = 1; n <= 6; ++n)
        CHECK(gasket_system(n, GasketLabeling::Schreier).total() ==
              gasket_closed_total(n, GasketLabeling::Schreier));
    for (int n = 2; n <= 6; ++n)
        CHECK(gasket_system(n, GasketLabeling::Rotation).total() ==
              gasket_closed_total(n, GasketLabeling::Rotation));
    CHECK_THROWS_AS(gasket_system(1, GasketLabeling::Rotation), UnsupportedLevelError);
    CHECK_THROWS_AS(gasket_system(2, GasketLabeling::Directional), UnsupportedContextError);
}

TEST_CASE("all-ones counts coincide across hanoi and gasket") {
    for (int n = 1; n <= 6; ++n) {
        auto v = hanoi_system_eval(n, 1, 1, 1);
        Rational hanoi = v[0] + v[1] + v[2] + v[3];
        BigInt p3 = pow_big(3, static_cast<unsigned long>(n - 1));
        CHECK(hanoi == pow_rat(Rational(2), (p3 + 3) / 2));
        CHECK(v[0] == pow_rat(Rational(2), (p3 - 1) / 2));
        CHECK(evaluate(gasket_closed_total(n, GasketLabeling::Schreier), kOnes) == hanoi);
    }
}

TEST_CASE("partition_value shortcuts agree with the polynomials") {
    std::map<Label, Rational> w{{Label::A, Rational(3, 2)}, {Label::B, Rational(2)},
                                {Label::C, Rational(1, 2)}, {Label::D, Rational(1)}};
    for (int n = 1; n <= 4; ++n) {
        CHECK(partition_value(Family::Grigorchuk, GasketLabeling::Schreier, n, w) ==
              evaluate(grig_closed(n), w));
        CHECK(partition_value(Family::Basilica, GasketLabeling::Schreier, n, w) ==
              evaluate(basilica_closed(n), w));
        CHECK(partition_value(Family::Gasket, GasketLabeling::Schreier, n, w) ==
              evaluate(gasket_system(n, GasketLabeling::Schreier).total(), w));
    }
    for (int n = 2; n <= 4; ++n)
        CHECK(partition_value(Family::Gasket, GasketLabeling::Rotation, n, w) ==
              evaluate(gasket_system(n, GasketLabeling::Rotation).total(), w));
}

TEST_CASE("closed-form limits") {
    auto close_to = [](const mpf_class& x, double y) { return abs(x - y) < 1e-12; };
    CHECK(close_to(thermo_limit(Family::Grigorchuk, GasketLabeling::Schreier, kOnes).numeric,
                   0.0));
    CHECK(close_to(thermo_limit(Family::Basilica, GasketLabeling::Schreier, kOnes).numeric,
                   0.23104906018664842));  // log(2)/3
    CHECK(close_to(thermo_limit(Family::Hanoi, GasketLabeling::Schreier, kOnes).numeric,
                   0.11552453009332421));  // log(2)/6
    CHECK(close_to(thermo_limit(Family::Gasket, GasketLabeling::Schreier, kOnes).numeric,
                   0.23104906018664842));  // log(4)/6
    CHECK(close_to(thermo_limit(Family::Gasket, GasketLabeling::Rotation, kOnes).numeric,
                   0.23104906018664842));  // log(2)/9 + log(2)/18 + log(2)/6
    std::map<Label, Rational> skew{{Label::A, 2}, {Label::B, 1}, {Label::C, 1}, {Label::D, 1}};
    CHECK_THROWS_AS(thermo_limit(Family::Hanoi, GasketLabeling::Schreier, skew),
                    UnsupportedWeightsError);
}

TEST_CASE("normalized log-partition decreases toward the limit") {
    for (auto [f, l] : {std::pair{Family::Basilica, GasketLabeling::Schreier},
                        {Family::Hanoi, GasketLabeling::Schreier},
                        {Family::Gasket, GasketLabeling::Schreier},
                        {Family::Gasket, GasketLabeling::Rotation}}) {
        auto seq = limit_sequence(f, l, kOnes, 8);
        CHECK(seq.decreasing);
        mpf_class gap = seq.eps.back() - thermo_limit(f, l, kOnes).numeric;
        CHECK(gap >= 0);
        CHECK(gap < 2e-2);
    }
}
