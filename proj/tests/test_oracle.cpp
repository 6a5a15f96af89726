#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dimers/families.hpp"
#include "dimers/json_io.hpp"
#include "dimers/oracle.hpp"
#include "dimers/recursions.hpp"

using namespace dimers;

TEST_CASE("cover counts on the smallest graphs") {
    CHECK(enumerate_covers(build_hanoi(1)).covers.size() == 4);
    CHECK(enumerate_covers(build_sierpinski(2, GasketLabeling::Schreier)).covers.size() == 8);
    // a 2-gon contributes two distinct covers
    auto res = enumerate_covers(build_grigorchuk(2));
    CHECK(res.partition == MultiPoly::variable(Label::A, 2));
}

TEST_CASE("linear families match their closed forms") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(oracle_partition(build_grigorchuk(n)) == grig_closed(n));
        CHECK(oracle_partition(build_basilica(n)) == basilica_closed(n));
    }
}

TEST_CASE("per-class sums match the type systems") {
    for (int n = 1; n <= 3; ++n) {
        auto res = enumerate_covers(build_hanoi(n));
        auto sys = hanoi_system(n);
        CHECK(res.by_class.at("I") == sys.I);
        CHECK(res.by_class.at("II") == sys.II);
        CHECK(res.by_class.at("III") == sys.III);
        CHECK(res.by_class.at("IV") == sys.IV);
    }
    for (int n = 1; n <= 3; ++n) {
        auto res = enumerate_covers(build_sierpinski(n, GasketLabeling::Schreier));
        auto sys = gasket_system(n, GasketLabeling::Schreier);
        bool odd = n % 2 == 1;
        CHECK(res.by_class.at(odd ? "f" : "t") == sys.no_corner);
        CHECK(res.by_class.at(odd ? "h_ab" : "g_ab") == sys.ab);
        CHECK(res.by_class.at(odd ? "h_ac" : "g_ac") == sys.ac);
        CHECK(res.by_class.at(odd ? "h_bc" : "g_bc") == sys.bc);
    }
    for (int n = 2; n <= 3; ++n) {
        auto res = enumerate_covers(build_sierpinski(n, GasketLabeling::Rotation));
        auto sys = gasket_system(n, GasketLabeling::Rotation);
        bool odd = n % 2 == 1;
        CHECK(res.by_class.at(odd ? "f" : "t") == sys.no_corner);
        CHECK(res.by_class.at(odd ? "h" : "g") == sys.ab);
    }
}

TEST_CASE("boltzmann probabilities sum to one") {
    std::map<Label, Rational> w{{Label::A, Rational(1, 2)}, {Label::B, 3},
                                {Label::C, Rational(7, 5)}, {Label::D, 1}};
    auto res = enumerate_covers(build_hanoi(2));
    Rational total = 0;
    for (const auto& c : res.covers) total += boltzmann_probability(c, res.partition, w);
    CHECK(total == 1);
    // uniform weights: every cover equally likely
    std::map<Label, Rational> ones{{Label::A, 1}, {Label::B, 1}, {Label::C, 1}, {Label::D, 1}};
    for (const auto& c : res.covers)
        CHECK(boltzmann_probability(c, res.partition, ones) ==
              Rational(1, res.covers.size()));
}

TEST_CASE("budget enforcement and determinism") {
    CHECK_THROWS_AS(enumerate_covers(build_hanoi(3), 5ULL), BudgetExceededError);
    auto a = enumerate_covers(build_hanoi(2));
    auto b = enumerate_covers(build_hanoi(2));
    REQUIRE(a.covers.size() == b.covers.size());
    for (std::size_t i = 0; i < a.covers.size(); ++i) {
        CHECK(a.covers[i].dimers == b.covers[i].dimers);
        CHECK(a.covers[i].cls == b.covers[i].cls);
    }
}

TEST_CASE("cover dump format") {
    auto g = build_hanoi(1);
    auto res = enumerate_covers(g);
    std::ostringstream out;
    covers_to_jsonl(g, res, out);
    std::istringstream in(out.str());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        auto j = json::parse(line);
        CHECK(j.contains("dimers"));
        CHECK(j.contains("closures"));
        CHECK(j.contains("weight"));
        CHECK(j.contains("class"));
        ++lines;
    }
    CHECK(lines == res.covers.size());
}
