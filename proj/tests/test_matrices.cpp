#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimers/families.hpp"
#include "dimers/json_io.hpp"
#include "dimers/pfaffian.hpp"
#include "dimers/skew_matrix.hpp"

using namespace dimers;

static LabeledGraph build(Family f, int n) {
    switch (f) {
        case Family::Grigorchuk: return build_grigorchuk(n);
        case Family::Basilica: return build_basilica(n);
        default: return build_hanoi(n);
    }
}

// flip the sign of one label's coefficient in the (i,j)/(j,i) entries
static SkewWeightMatrix flip_sign(SkewWeightMatrix m, int i, int j, Label l) {
    MultiPoly delta = MultiPoly(2) * MultiPoly::term(linear_coefficient(m.entry(i, j), l),
                                                     Monomial{}) *
                      MultiPoly::variable(l);
    m.add(i, j, MultiPoly(0) - delta);
    m.add(j, i, delta);
    return m;
}

TEST_CASE("orientation verification passes") {
    for (auto f : {Family::Grigorchuk, Family::Basilica, Family::Hanoi}) {
        for (int n = 1; n <= (f == Family::Hanoi ? 4 : 6); ++n) {
            auto g = build(f, n);
            auto rep = verify_good_orientation(oriented_matrix(f, n), g);
            INFO(family_name(f), " n=", n, ": ", rep.message);
            CHECK(rep.pass());
            CHECK(rep.face_clockwise_counts.size() == g.faces.size());
            for (int c : rep.face_clockwise_counts) CHECK(c % 2 == 1);
        }
    }
}

TEST_CASE("sign-flip mutants break the face parity") {
    for (auto f : {Family::Grigorchuk, Family::Basilica, Family::Hanoi}) {
        int n = 3;
        auto g = build(f, n);
        auto m = oriented_matrix(f, n);
        const Edge& e = g.edges[g.faces.back().front().edge_id];
        auto rep = verify_good_orientation(flip_sign(m, e.u, e.v, e.label), g);
        INFO(family_name(f), ": ", rep.message);
        CHECK_FALSE(rep.faces_ok);
    }
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(verify_good_orientation(oriented_matrix(Family::Hanoi, 2),
                                            build_hanoi(1)),
                    DimensionMismatchError);
}

TEST_CASE("pfaffian basics") {
    // size 0 -> empty product convention, odd size rejected
    CHECK(pfaffian_exact(SkewWeightMatrix(0)) == MultiPoly(1));
    CHECK_THROWS_AS(pfaffian_exact(SkewWeightMatrix(3)), OddSizeError);
    CHECK_THROWS_AS(pfaffian_exact(oriented_matrix(Family::Grigorchuk, 4), 8),
                    CapExceededError);
    auto m = oriented_matrix(Family::Grigorchuk, 3);
    auto pf = pfaffian_exact(m);
    CHECK(pf * pf == det_bareiss(to_dense(m)));
}

TEST_CASE("corner reductions drop the loop vertices") {
    for (int n = 1; n <= 3; ++n) {
        auto m = oriented_matrix(Family::Hanoi, n);
        auto red = hanoi_reductions(m, n);
        CHECK(red.gamma_a.size == m.size - 1);
        CHECK(red.gamma_b.size == m.size - 1);
        CHECK(red.gamma_c.size == m.size - 1);
        CHECK(red.lambda.size == m.size - 3);
    }
}

TEST_CASE("numeric pfaffian agrees with the symbolic one") {
    std::map<Label, Rational> w{{Label::A, Rational(2, 3)},
                                {Label::B, Rational(5)},
                                {Label::C, Rational(1, 7)},
                                {Label::D, Rational(3, 2)}};
    for (int n = 1; n <= 4; ++n) {
        auto m = oriented_matrix(Family::Basilica, n);
        CHECK(pfaffian_numeric(m, w) == evaluate(pfaffian_exact(m), w));
    }
}

TEST_CASE("matrix json dump") {
    auto j = matrix_to_json(oriented_matrix(Family::Grigorchuk, 2));
    CHECK(j["size"] == 4);
    CHECK(j["order"] == "lex");
    CHECK(j["entries"].size() > 0);
    CHECK(j.dump() == matrix_to_json(oriented_matrix(Family::Grigorchuk, 2)).dump());
}
