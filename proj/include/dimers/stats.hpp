#pragma once

#include <map>
#include <string>

#include "dimers/bigfloat.hpp"
#include "dimers/graph.hpp"
#include "dimers/multipoly.hpp"
#include "dimers/recursions.hpp"

namespace dimers {

struct MeanVariance {
    Rational mean, variance;
};

namespace detail {

inline Rational ones_value(const MultiPoly& p) {
    std::map<Label, Rational> ones{
        {Label::A, 1}, {Label::B, 1}, {Label::C, 1}, {Label::D, 1}};
    return evaluate(p, ones);
}

}  // namespace detail

// factorial-moment ratio p^(k)(1) / p(1) for the label-count variable
inline Rational factorial_moment(const MultiPoly& p, Label v, int k) {
    Rational z = detail::ones_value(p);
    if (z == 0) throw ZeroPartitionError("polynomial vanishes at all-ones");
    MultiPoly d = p;
    for (int i = 0; i < k; ++i) d = derivative(d, v);
    return detail::ones_value(d) / z;
}

inline MeanVariance mean_variance(const MultiPoly& p, Label v) {
    Rational f1 = factorial_moment(p, v, 1);
    Rational f2 = factorial_moment(p, v, 2);
    return {f1, f2 + f1 - f1 * f1};
}

// third standardized moment (skewness), in high-precision float
inline mpf_class skewness(const MultiPoly& p, Label v) {
    Rational f1 = factorial_moment(p, v, 1);
    Rational f2 = factorial_moment(p, v, 2);
    Rational f3 = factorial_moment(p, v, 3);
    Rational ex2 = f2 + f1;
    Rational ex3 = f3 + 3 * f2 + f1;
    Rational var = ex2 - f1 * f1;
    if (var == 0) throw DegenerateVarianceError("variance vanishes; skewness undefined");
    Rational m3 = ex3 - 3 * f1 * ex2 + 2 * f1 * f1 * f1;
    mpf_class sigma = sqrt_float(to_float(var));
    return to_float(m3) / (sigma * sigma * sigma);
}

// ---- label-count polynomials (one label kept, the others set to 1) ------

inline MultiPoly keep_only(const MultiPoly& p, Label v) {
    std::map<Label, BigInt> ones;
    for (int i = 0; i < kNumVars; ++i) {
        Label u = static_cast<Label>(i);
        if (u != v) ones[u] = 1;
    }
    return substitute(p, ones);
}

// per-type label-count polynomials for the Hanoi graphs; the returned
// vector is univariate in `v`
inline HanoiTypeVector hanoi_label_polys(int n, Label v) {
    MultiPoly one(1), x = MultiPoly::variable(v);
    return hanoi_system(n, v == Label::A ? x : one, v == Label::B ? x : one,
                        v == Label::C ? x : one);
}

inline MultiPoly gasket_label_poly(int n, GasketLabeling labeling, Label v) {
    return keep_only(gasket_system(n, labeling).total(), v);
}

// ---- closed statistics --------------------------------------------------

enum class HanoiType { I, II, III, IV };

inline const char* hanoi_type_name(HanoiType t) {
    switch (t) {
        case HanoiType::I: return "I";
        case HanoiType::II: return "II";
        case HanoiType::III: return "III";
        case HanoiType::IV: return "IV";
    }
    return "?";
}

// label-c count per covering type (types III and IV coincide)
inline MeanVariance hanoi_label_c_closed_stats(int n, HanoiType t) {
    BigInt p3 = pow_big(3, static_cast<unsigned long>(n - 1));
    switch (t) {
        case HanoiType::I:
            return {Rational(p3 + 1) / 2, Rational(3 * p3 - 6 * n + 3) / 4};
        case HanoiType::II:
            return {Rational(p3 + 3) / 2, Rational(3 * p3 + 10 * n - 13) / 4};
        case HanoiType::III:
        case HanoiType::IV:
            return {Rational(p3 - 1) / 2, Rational(3 * p3 - 2 * n - 1) / 4};
    }
    throw Error("bad type");
}

inline MeanVariance gasket_schreier_closed_stats_c(int n) {
    BigInt p3 = pow_big(3, static_cast<unsigned long>(n - 1));
    return {Rational(p3) / 4, Rational(3, 16)};
}

inline MeanVariance gasket_rotation_closed_stats_c(int n) {
    return gasket_schreier_closed_stats_c(n);
}

// Published value for the a/b count under the rotation labeling. The level-2
// polynomial a^3 + 3a + 4 has variance 15/16, not (4*3 + 3)/4; see
// docs/discrepancies.md. Kept verbatim for reference, not asserted against.
inline MeanVariance gasket_rotation_published_stats_ab(int n) {
    BigInt p3 = pow_big(3, static_cast<unsigned long>(n - 1));
    return {Rational(p3) / 4, Rational(4 * p3 + 3) / 4};
}

// Reference values for the directional labeling (external result, n even);
// reported for comparison only.
inline MeanVariance gasket_directional_reference_stats_c(int n) {
    if (n % 2 != 0) throw UnsupportedContextError("directional labeling needs n even");
    BigInt p3 = pow_big(3, static_cast<unsigned long>(n - 1));
    return {Rational(p3 + 1) / 4, Rational(p3 - 3) / 4};
}

// ---- quotient ratios for the reduced Hanoi system -----------------------

// q = Phi^II / Phi^I and r = Phi^III / Phi^I as functions of c (a = b = 1):
// values and first two derivatives at c = 1
struct QuotientReport {
    Rational q, r, dq, dr, ddq, ddr;
};

inline QuotientReport quotient_report(int n) {
    HanoiTypeVector v = hanoi_label_polys(n, Label::C);
    auto at1 = [&](const MultiPoly& p, int k) {
        MultiPoly d = p;
        for (int i = 0; i < k; ++i) d = derivative(d, Label::C);
        return detail::ones_value(d);
    };
    Rational I0 = at1(v.I, 0), I1 = at1(v.I, 1), I2 = at1(v.I, 2);
    if (I0 == 0) throw ZeroPartitionError("type-I polynomial vanishes at c=1");
    QuotientReport rep;
    auto fill = [&](const MultiPoly& num, Rational& f, Rational& df, Rational& ddf) {
        Rational N0 = at1(num, 0), N1 = at1(num, 1), N2 = at1(num, 2);
        f = N0 / I0;
        df = (N1 - f * I1) / I0;
        ddf = (N2 - 2 * df * I1 - f * I2) / I0;
    };
    fill(v.II, rep.q, rep.dq, rep.ddq);
    fill(v.III, rep.r, rep.dr, rep.ddr);
    return rep;
}

// ---- two-point law for the gasket label-c count -------------------------

// The normalized count takes one of two values; each is coef * sqrt(3).
// Returns class-name -> coef.
inline std::map<std::string, Rational> type_value_table(GasketLabeling labeling, int n) {
    bool odd = n % 2 == 1;
    if (labeling == GasketLabeling::Schreier) {
        if (odd)
            return {{"h_ab", 1}, {"f", {-1, 3}}, {"h_ac", {-1, 3}}, {"h_bc", {-1, 3}}};
        return {{"g_ab", -1}, {"t", {1, 3}}, {"g_ac", {1, 3}}, {"g_bc", {1, 3}}};
    }
    if (labeling == GasketLabeling::Rotation) {
        if (odd) return {{"f", 1}, {"h", {-1, 3}}};
        return {{"t", -1}, {"g", {1, 3}}};
    }
    throw UnsupportedContextError("no two-point law for the directional labeling");
}

// convert an observed count k into its sqrt(3)-coefficient:
// (k - mu) / sigma with mu = 3^{n-1}/4, sigma = sqrt(3)/4
inline Rational normalized_sqrt3_coefficient(const BigInt& k, int n) {
    BigInt p3 = pow_big(3, static_cast<unsigned long>(n - 1));
    return Rational(4 * k - p3) / 3;
}

// ---- moment generating functions ----------------------------------------

// E[exp(s * (X - mu)/sigma)] for the label-count X of a univariate p
inline mpf_class mgf_normalized(const MultiPoly& p, Label v, const mpf_class& s) {
    MeanVariance mv = mean_variance(p, v);
    if (mv.variance == 0) throw DegenerateVarianceError("variance vanishes; cannot normalize");
    mpf_class sigma = sqrt_float(to_float(mv.variance));
    mpf_class mu = to_float(mv.mean);
    mpf_class acc = make_float(0.0), z = make_float(0.0);
    int iv = static_cast<int>(v);
    for (const auto& [m, c] : p.terms()) {
        mpf_class k = to_float(Rational(m.exp[iv]));
        acc += to_float(Rational(c)) * exp_float((k - mu) / sigma * s);
        z += to_float(Rational(c));
    }
    return acc / z;
}

// mixture MGF implied by a two-point law: weights per class, value per class
inline mpf_class mixture_mgf(const std::map<std::string, Rational>& class_weights,
                             const std::map<std::string, Rational>& sqrt3_coef,
                             const mpf_class& s) {
    mpf_class sqrt3 = sqrt_float(make_float(3.0));
    mpf_class acc = make_float(0.0), z = make_float(0.0);
    for (const auto& [cls, w] : class_weights) {
        mpf_class value = to_float(sqrt3_coef.at(cls)) * sqrt3;
        acc += to_float(w) * exp_float(value * s);
        z += to_float(w);
    }
    return acc / z;
}

}  // namespace dimers
