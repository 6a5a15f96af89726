#pragma once

#include <array>
#include <sstream>
#include <vector>

#include "dimers/bigfloat.hpp"
#include "dimers/graph.hpp"
#include "dimers/multipoly.hpp"

namespace dimers {

// ---- closed forms, linear families --------------------------------------

inline MultiPoly grig_closed(int n) {
    if (n < 1) throw ValidationError("level must be >= 1");
    return MultiPoly::variable(Label::A, BigInt(1) << (n - 1));
}

inline MultiPoly basilica_closed(int n) {
    if (n < 1) throw ValidationError("level must be >= 1");
    BigInt two_n = BigInt(1) << n;
    BigInt log2coeff = (two_n + (n % 2 == 1 ? 1 : 2)) / 3;
    MultiPoly p = MultiPoly::term(pow_big(2, to_ulong_exp(log2coeff)), Monomial{});
    return p * MultiPoly::variable(Label::B, BigInt(1) << (n - 1));
}

// ---- Hanoi type system --------------------------------------------------

struct HanoiTypeVector {
    MultiPoly I, II, III, IV;

    MultiPoly total() const { return I + II + III + IV; }
};

// One pass of the Hanoi transfer system; the divisors are the loop weights
// consumed when three sub-level coverings merge. Weights are parameters so
// the same iteration serves full symbolic, specialized, and uniform runs.
inline HanoiTypeVector hanoi_system(int n, const MultiPoly& A, const MultiPoly& B,
                                    const MultiPoly& C) {
    if (n < 1) throw ValidationError("level must be >= 1");
    HanoiTypeVector v{A * B * C, C * C, B * B, A * A};
    for (int k = 1; k < n; ++k) {
        HanoiTypeVector w;
        w.I = exact_divide(v.I * v.I * v.I, A * B * C) + v.II * v.III * v.IV;
        w.II = exact_divide(v.II * v.II * v.II, C) + exact_divide(v.I * v.III * v.IV, A * B);
        w.III = exact_divide(v.III * v.III * v.III, B) + exact_divide(v.I * v.II * v.IV, A * C);
        w.IV = exact_divide(v.IV * v.IV * v.IV, A) + exact_divide(v.I * v.II * v.III, B * C);
        v = std::move(w);
    }
    return v;
}

inline HanoiTypeVector hanoi_system(int n) {
    return hanoi_system(n, MultiPoly::variable(Label::A), MultiPoly::variable(Label::B),
                        MultiPoly::variable(Label::C));
}

// numeric iteration of the same system (exact rationals, arbitrary n)
inline std::array<Rational, 4> hanoi_system_eval(int n, const Rational& a, const Rational& b,
                                                 const Rational& c) {
    if (n < 1) throw ValidationError("level must be >= 1");
    std::array<Rational, 4> v{a * b * c, c * c, b * b, a * a};
    for (int k = 1; k < n; ++k) {
        std::array<Rational, 4> w;
        w[0] = v[0] * v[0] * v[0] / (a * b * c) + v[1] * v[2] * v[3];
        w[1] = v[1] * v[1] * v[1] / c + v[0] * v[2] * v[3] / (a * b);
        w[2] = v[2] * v[2] * v[2] / b + v[0] * v[1] * v[3] / (a * c);
        w[3] = v[3] * v[3] * v[3] / a + v[0] * v[1] * v[2] / (b * c);
        v = std::move(w);
    }
    return v;
}

// uniform-weight closed form: 2^((3^{n-1}-1)/2) * x^((3^n+1)/2) * (x+3),
// expressed in the single variable a
inline MultiPoly hanoi_uniform_closed(int n) {
    if (n < 1) throw ValidationError("level must be >= 1");
    BigInt p3 = pow_big(3, static_cast<unsigned long>(n - 1));
    BigInt coeff = pow_big(2, to_ulong_exp((p3 - 1) / 2));
    BigInt e = (3 * p3 + 1) / 2;
    MultiPoly x = MultiPoly::variable(Label::A);
    return MultiPoly::term(coeff, Monomial{}) * MultiPoly::variable(Label::A, e) *
           (x + MultiPoly(3));
}

// ---- gasket type systems ------------------------------------------------

// For the corner-labeled (reflection) scheme at odd n the four slots hold
// (f, h_ab, h_ac, h_bc); at even n (t, g_ab, g_ac, g_bc). The rotation
// scheme collapses to two slots: no_corner (f or t) and corner (h or g).
struct GasketTypeVector {
    GasketLabeling labeling;
    int n;
    MultiPoly no_corner;  // f (n odd) or t (n even)
    MultiPoly ab, ac, bc;  // per-corner types; rotation: ab holds h or g

    MultiPoly total() const {
        return labeling == GasketLabeling::Rotation ? no_corner + ab
                                                    : no_corner + ab + ac + bc;
    }
};

inline GasketTypeVector gasket_system(int n, GasketLabeling labeling) {
    if (n < 1) throw ValidationError("level must be >= 1");
    const MultiPoly A = MultiPoly::variable(Label::A), B = MultiPoly::variable(Label::B),
                    C = MultiPoly::variable(Label::C);
    if (labeling == GasketLabeling::Schreier) {
        GasketTypeVector v{labeling, 1, MultiPoly(1), C, B, A};  // f1=1, h1=(c,b,a)
        for (int k = 2; k <= n; ++k) {
            GasketTypeVector w{labeling, k, {}, {}, {}, {}};
            // same shape both directions: (f,h_*) <-> (t,g_*)
            const MultiPoly two(2);
            w.no_corner = two * v.ab * v.ac * v.bc;
            w.ab = two * v.no_corner * v.ac * v.bc;
            w.ac = two * v.no_corner * v.ab * v.bc;
            w.bc = two * v.no_corner * v.ab * v.ac;
            v = std::move(w);
        }
        return v;
    }
    if (labeling == GasketLabeling::Rotation) {
        if (n < 2) throw UnsupportedLevelError("rotation labeling starts at level 2");
        // t2 = a^3 + b^3, g2 = 3c(a+b)
        GasketTypeVector v{labeling, 2, A.pow(3) + B.pow(3), MultiPoly(3) * C * (A + B), {}, {}};
        for (int k = 3; k <= n; ++k) {
            GasketTypeVector w{labeling, k, {}, {}, {}, {}};
            // x_n = 2(y_{n-1}/3)^3, y_n = 6 z_{n-1} (y_{n-1}/3)^2
            w.no_corner = exact_divide(MultiPoly(2) * v.ab.pow(3), MultiPoly(27));
            w.ab = exact_divide(MultiPoly(2) * v.no_corner * v.ab * v.ab, MultiPoly(3));
            v = std::move(w);
        }
        return v;
    }
    throw UnsupportedContextError("no partition recursion for the directional labeling");
}

inline MultiPoly gasket_closed_total(int n, GasketLabeling labeling) {
    const MultiPoly A = MultiPoly::variable(Label::A), B = MultiPoly::variable(Label::B),
                    C = MultiPoly::variable(Label::C);
    auto upow = [](const MultiPoly& p, BigInt e) {
        MultiPoly r(1), base = p;
        for (BigInt k = e; k > 0; --k) r *= base;  // exponents here are tiny
        return r;
    };
    if (labeling == GasketLabeling::Schreier) {
        if (n < 1) throw ValidationError("level must be >= 1");
        BigInt p3 = pow_big(3, static_cast<unsigned long>(n - 1));
        MultiPoly fourabc = MultiPoly(4) * A * B * C;
        if (n % 2 == 0)
            return MultiPoly(2) * upow(fourabc, (p3 - 3) / 4) *
                   (A * B * C + A * B + A * C + B * C);
        return upow(fourabc, (p3 - 1) / 4) * (MultiPoly(1) + A + B + C);
    }
    if (labeling == GasketLabeling::Rotation) {
        if (n < 2) throw UnsupportedLevelError("rotation labeling starts at level 2");
        BigInt q = pow_big(3, static_cast<unsigned long>(n - 2));
        BigInt p = 3 * q;
        MultiPoly cubes = A.pow(3) + B.pow(3);
        MultiPoly acbc = A * C + B * C;
        MultiPoly two_pow = MultiPoly::term(pow_big(2, to_ulong_exp((q - 1) / 2)), Monomial{});
        if (n % 2 == 0)
            return two_pow * upow(cubes, (q - 1) / 4) * upow(acbc, (p - 3) / 4) *
                   (cubes + MultiPoly(3) * C * (A + B));
        return two_pow * upow(cubes, (q - 3) / 4) * upow(acbc, (p - 1) / 4) *
               (MultiPoly(3) * cubes + C * (A + B));
    }
    throw UnsupportedContextError("no closed form for the directional labeling");
}

// ---- thermodynamic limits -----------------------------------------------

struct LimitValue {
    // sum of coeff * log(argument evaluated at the weights)
    std::vector<std::pair<Rational, MultiPoly>> terms;
    mpf_class numeric;

    std::string str() const {
        std::ostringstream out;
        bool first = true;
        for (const auto& [q, p] : terms) {
            if (!first) out << " + ";
            first = false;
            out << to_string(q) << "*log(" << p.str() << ")";
        }
        return first ? "0" : out.str();
    }
};

inline LimitValue thermo_limit(Family family, GasketLabeling labeling,
                               const std::map<Label, Rational>& w) {
    const MultiPoly A = MultiPoly::variable(Label::A), B = MultiPoly::variable(Label::B),
                    C = MultiPoly::variable(Label::C);
    LimitValue lv;
    switch (family) {
        case Family::Grigorchuk:
            lv.terms = {{Rational(1, 2), A}};
            break;
        case Family::Basilica:
            lv.terms = {{Rational(1, 3), MultiPoly(2)}, {Rational(1, 2), B}};
            break;
        case Family::Hanoi: {
            // only the uniform diagonal has a closed-form limit
            if (!(w.at(Label::A) == w.at(Label::B) && w.at(Label::B) == w.at(Label::C)))
                throw UnsupportedWeightsError(
                    "closed-form limit known only for equal weights; use the empirical "
                    "sequence instead");
            lv.terms = {{Rational(1, 6), MultiPoly(2)}, {Rational(1, 2), A}};
            break;
        }
        case Family::Gasket:
            if (labeling == GasketLabeling::Schreier) {
                lv.terms = {{Rational(1, 6), MultiPoly(4) * A * B * C}};
            } else if (labeling == GasketLabeling::Rotation) {
                lv.terms = {{Rational(1, 9), MultiPoly(2)},
                            {Rational(1, 18), A.pow(3) + B.pow(3)},
                            {Rational(1, 6), C * (A + B)}};
            } else {
                throw UnsupportedContextError("no limit for the directional labeling");
            }
            break;
    }
    lv.numeric = make_float(0.0);
    for (const auto& [q, p] : lv.terms) {
        Rational v = evaluate(p, w);
        if (!(v > 0)) throw ValidationError("limit argument must be positive");
        lv.numeric += to_float(q) * log_rational(v);
    }
    return lv;
}

inline BigInt vertex_count(Family family, GasketLabeling labeling, int n) {
    (void)labeling;
    switch (family) {
        case Family::Grigorchuk:
        case Family::Basilica:
            return BigInt(1) << n;
        case Family::Hanoi:
            return pow_big(3, static_cast<unsigned long>(n));
        case Family::Gasket:
            return (pow_big(3, static_cast<unsigned long>(n)) + 3) / 2;
    }
    throw Error("bad family");
}

// exact rational partition value at one level, by whichever recursion applies
inline Rational partition_value(Family family, GasketLabeling labeling, int n,
                                const std::map<Label, Rational>& w) {
    switch (family) {
        case Family::Grigorchuk:
            return pow_rat(w.at(Label::A), BigInt(1) << (n - 1));
        case Family::Basilica: {
            BigInt two_n = BigInt(1) << n;
            return pow_rat(Rational(2), (two_n + (n % 2 == 1 ? 1 : 2)) / 3) *
                   pow_rat(w.at(Label::B), BigInt(1) << (n - 1));
        }
        case Family::Hanoi: {
            auto v = hanoi_system_eval(n, w.at(Label::A), w.at(Label::B), w.at(Label::C));
            return v[0] + v[1] + v[2] + v[3];
        }
        case Family::Gasket: {
            Rational a = w.at(Label::A), b = w.at(Label::B), c = w.at(Label::C);
            BigInt q3 = n >= 2 ? pow_big(3, static_cast<unsigned long>(n - 2)) : BigInt(0);
            BigInt p3 = pow_big(3, static_cast<unsigned long>(n - 1));
            if (labeling == GasketLabeling::Schreier) {
                Rational fourabc = Rational(4) * a * b * c;
                if (n % 2 == 0)
                    return Rational(2) * pow_rat(fourabc, (p3 - 3) / 4) *
                           (a * b * c + a * b + a * c + b * c);
                return pow_rat(fourabc, (p3 - 1) / 4) * (1 + a + b + c);
            }
            if (labeling == GasketLabeling::Rotation) {
                if (n < 2) throw UnsupportedLevelError("rotation labeling starts at level 2");
                Rational cubes = a * a * a + b * b * b;
                Rational acbc = a * c + b * c;
                Rational tp = pow_rat(Rational(2), (q3 - 1) / 2);
                if (n % 2 == 0)
                    return tp * pow_rat(cubes, (q3 - 1) / 4) * pow_rat(acbc, (p3 - 3) / 4) *
                           (cubes + 3 * c * (a + b));
                return tp * pow_rat(cubes, (q3 - 3) / 4) * pow_rat(acbc, (p3 - 1) / 4) *
                       (3 * cubes + c * (a + b));
            }
            throw UnsupportedContextError("no partition value for the directional labeling");
        }
    }
    throw Error("bad family");
}

struct LimitSequence {
    std::vector<mpf_class> eps;  // log(Phi_n) / |V_n|, n = 1..n_max
    bool decreasing = true;
};

inline LimitSequence limit_sequence(Family family, GasketLabeling labeling,
                                    const std::map<Label, Rational>& w, int n_max) {
    LimitSequence out;
    int n0 = (family == Family::Gasket && labeling == GasketLabeling::Rotation) ? 2 : 1;
    for (int n = n0; n <= n_max; ++n) {
        Rational phi = partition_value(family, labeling, n, w);
        mpf_class e = log_rational(phi) / to_float(Rational(vertex_count(family, labeling, n)));
        if (!out.eps.empty() && e > out.eps.back()) out.decreasing = false;
        out.eps.push_back(e);
    }
    return out;
}

}  // namespace dimers
