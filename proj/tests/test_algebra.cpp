#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimers/bigfloat.hpp"
#include "dimers/multipoly.hpp"

using namespace dimers;

static MultiPoly var(Label l) { return MultiPoly::variable(l); }

TEST_CASE("canonical string is graded-lex descending") {
    MultiPoly p = var(Label::C).pow(5) + var(Label::A).pow(5) +
                  MultiPoly(2) * var(Label::A).pow(2) * var(Label::B).pow(2) * var(Label::C).pow(2);
    CHECK(p.str() == "2*a^2*b^2*c^2 + a^5 + c^5");
}

TEST_CASE("ring operations") {
    MultiPoly a = var(Label::A), b = var(Label::B);
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK((a + b).pow(3) == a.pow(3) + MultiPoly(3) * a * a * b + MultiPoly(3) * a * b * b + b.pow(3));
    CHECK((a - a).is_zero());
    CHECK(MultiPoly(0).str() == "0");
}

TEST_CASE("exact division") {
    MultiPoly a = var(Label::A), b = var(Label::B);
    MultiPoly p = (a + b).pow(4);
    CHECK(exact_divide(p, (a + b).pow(2)) == (a + b).pow(2));
    CHECK_THROWS_AS(exact_divide(a * a + b, a + b), InexactDivisionError);
}

TEST_CASE("polynomial square root") {
    MultiPoly a = var(Label::A), b = var(Label::B);
    MultiPoly s = MultiPoly(2) * a.pow(3) + a * b + MultiPoly(7) * b.pow(2);
    CHECK(poly_sqrt(s * s) == s);
    // result is normalized to a positive leading coefficient
    CHECK(poly_sqrt((MultiPoly(0) - s) * (MultiPoly(0) - s)) == s);
    CHECK_THROWS_AS(poly_sqrt(a + b), NotASquareError);
    CHECK(poly_sqrt(MultiPoly(0)).is_zero());
}

TEST_CASE("evaluate and derivative") {
    MultiPoly a = var(Label::A), c = var(Label::C);
    MultiPoly p = a.pow(3) * c + MultiPoly(5) * c.pow(2);
    std::map<Label, Rational> w{{Label::A, Rational(1, 2)}, {Label::C, 3}};
    CHECK(evaluate(p, w) == Rational(3, 8) + 45);
    CHECK(derivative(p, Label::C) == a.pow(3) + MultiPoly(10) * c);
    CHECK_THROWS_AS(evaluate(p, {{Label::A, 1}}), MissingVariableError);
}

TEST_CASE("substitution and renaming") {
    MultiPoly a = var(Label::A), b = var(Label::B);
    CHECK(substitute(a * a * b + b, {{Label::A, 1}}) == MultiPoly(2) * b);
    CHECK(rename_vars(a + MultiPoly(2) * b, {{Label::A, Label::B}, {Label::B, Label::A}}) ==
          b + MultiPoly(2) * a);
}

TEST_CASE("rational helpers") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(Rational(-5, 10)) == "-1/2");
    CHECK(pow_rat(Rational(2, 3), BigInt(-2)) == Rational(9, 4));
    CHECK(sqrt_exact(Rational(9, 4)) == Rational(3, 2));
    CHECK_THROWS_AS(sqrt_exact(Rational(2)), NotASquareError);
}

TEST_CASE("high-precision log and exp") {
    mpf_class l2 = log_float(make_float(2.0));
    CHECK(abs(exp_float(l2) - 2) < 1e-60);
    mpf_class x = make_float(1.375);
    CHECK(abs(exp_float(log_float(x)) - x) < 1e-60);
    CHECK(abs(sqrt_float(make_float(2.0)) * sqrt_float(make_float(2.0)) - 2) < 1e-60);
    CHECK(abs(log_rational(Rational(1, 8)) + 3 * l2) < 1e-60);
}
