#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dimers/skew_matrix.hpp"

namespace dimers {

inline constexpr int kDefaultExactCap = 64;

// Fraction-free (Bareiss) determinant over the polynomial ring. Full
// pivoting, choosing the nonzero candidate with the fewest terms; every
// division is exact by the Sylvester identity.
inline MultiPoly det_bareiss(std::vector<std::vector<MultiPoly>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return MultiPoly(1);
    int sign = 1;
    MultiPoly prev(1);
    for (int k = 0; k < n; ++k) {
        int pr = -1, pc = -1;
        std::size_t best = 0;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                if (m[i][j].is_zero()) continue;
                std::size_t t = m[i][j].terms().size();
                if (pr < 0 || t < best) {
                    pr = i;
                    pc = j;
                    best = t;
                }
            }
        if (pr < 0) return MultiPoly();  // singular
        if (pr != k) {
            std::swap(m[pr], m[k]);
            sign = -sign;
        }
        if (pc != k) {
            for (int i = 0; i < n; ++i) std::swap(m[i][pc], m[i][k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

inline std::vector<std::vector<MultiPoly>> to_dense(const SkewWeightMatrix& m) {
    std::vector<std::vector<MultiPoly>> d(m.size, std::vector<MultiPoly>(m.size));
    for (int i = 0; i < m.size; ++i)
        for (const auto& [j, p] : m.rows[i]) d[i][j] = p;
    return d;
}

// |Pf(m)| as a polynomial, via poly_sqrt of the exact determinant.
inline MultiPoly pfaffian_exact(const SkewWeightMatrix& m, int exact_cap = kDefaultExactCap) {
    if (m.size % 2 != 0) throw OddSizeError("Pfaffian requires even size, got " +
                                            std::to_string(m.size));
    if (m.size > exact_cap)
        throw CapExceededError("size " + std::to_string(m.size) + " exceeds exact cap " +
                               std::to_string(exact_cap) + "; use the numeric path");
    if (m.size == 0) return MultiPoly(1);  // empty Pfaffian = 1
    return poly_sqrt(det_bareiss(to_dense(m)));
}

inline Rational det_rational(std::vector<std::vector<Rational>> m) {
    int n = static_cast<int>(m.size());
    Rational det(1);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rational(0);
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (int i = k + 1; i < n; ++i) {
            Rational f = m[i][k] / m[k][k];
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

inline Rational det_evaluated(const SkewWeightMatrix& m,
                              const std::map<Label, Rational>& assignment) {
    std::vector<std::vector<Rational>> d(m.size, std::vector<Rational>(m.size, Rational(0)));
    for (int i = 0; i < m.size; ++i)
        for (const auto& [j, p] : m.rows[i]) d[i][j] = evaluate(p, assignment);
    return det_rational(std::move(d));
}

// |Pf| of the evaluated matrix; exact because det of a rational
// skew-symmetric matrix is a perfect square.
inline Rational pfaffian_numeric(const SkewWeightMatrix& m,
                                 const std::map<Label, Rational>& assignment) {
    if (m.size % 2 != 0) throw OddSizeError("Pfaffian requires even size, got " +
                                            std::to_string(m.size));
    if (m.size == 0) return Rational(1);
    return sqrt_exact(det_evaluated(m, assignment));
}

// Partition function via Pfaffians; Hanoi uses the four-term reduction with
// loop-weight prefactors, the others |Pf| of the oriented matrix directly.
inline MultiPoly partition_kasteleyn(Family family, int n, int exact_cap = kDefaultExactCap) {
    if (family == Family::Hanoi) {
        auto delta = oriented_matrix(Family::Hanoi, n);
        auto r = hanoi_reductions(delta, n);
        const MultiPoly A = MultiPoly::variable(Label::A), B = MultiPoly::variable(Label::B),
                        C = MultiPoly::variable(Label::C);
        auto sqrt_det = [&](const SkewWeightMatrix& m) {
            if (m.size > exact_cap)
                throw CapExceededError("size " + std::to_string(m.size) +
                                       " exceeds exact cap; use the numeric path");
            return m.size == 0 ? MultiPoly(1) : poly_sqrt(det_bareiss(to_dense(m)));
        };
        return C * sqrt_det(r.gamma_c) + B * sqrt_det(r.gamma_b) + A * sqrt_det(r.gamma_a) +
               A * B * C * sqrt_det(r.lambda);
    }
    return pfaffian_exact(oriented_matrix(family, n), exact_cap);
}

inline Rational partition_kasteleyn_numeric(Family family, int n,
                                            const std::map<Label, Rational>& assignment) {
    if (family == Family::Hanoi) {
        auto delta = oriented_matrix(Family::Hanoi, n);
        auto r = hanoi_reductions(delta, n);
        Rational a = assignment.at(Label::A), b = assignment.at(Label::B),
                 c = assignment.at(Label::C);
        auto sq = [&](const SkewWeightMatrix& m) {
            return m.size == 0 ? Rational(1) : sqrt_exact(det_evaluated(m, assignment));
        };
        return c * sq(r.gamma_c) + b * sq(r.gamma_b) + a * sq(r.gamma_a) +
               a * b * c * sq(r.lambda);
    }
    return pfaffian_numeric(oriented_matrix(family, n), assignment);
}

// ---- the 6-variable rational map driving the Schur-complement recursion --

struct MapState {
    std::array<Rational, 6> x;
};

inline MapState rational_map_step(const MapState& s) {
    const auto& x = s.x;
    Rational denom = x[0] * x[1] * x[2] + x[3] * x[4] * x[5];
    if (denom == 0) throw SingularDenominatorError("x1*x2*x3 + x4*x5*x6 vanishes");
    MapState out = s;
    out.x[3] = (x[0] * x[3] * x[3] * x[3] + x[1] * x[2] * x[4] * x[5]) / denom;
    out.x[4] = (x[1] * x[4] * x[4] * x[4] + x[0] * x[2] * x[3] * x[5]) / denom;
    out.x[5] = (x[2] * x[5] * x[5] * x[5] + x[0] * x[1] * x[3] * x[4]) / denom;
    return out;
}

// Product formula for the Hanoi partition function driven by iterates of the
// rational map. The bracket groups all four boundary types under the common
// prefactor; the published display misplaces the three pure-corner terms
// outside the product, which fails the n=3 all-ones count (43 instead of
// 64) — the grouping below follows the determinant recursion itself.
inline Rational theorem37_eval(int n, const Rational& a, const Rational& b, const Rational& c) {
    if (n < 3) throw ValidationError("the product formula starts at level 3");
    if (!(a > 0 && b > 0 && c > 0)) throw ValidationError("weights must be positive");
    MapState s{{a, b, c, a, b, c}};
    Rational abc = a * b * c;
    Rational prefactor(1);
    for (int k = 0; k <= n - 3; ++k) {
        // iterate k: s holds (a, b, c, a^(k), b^(k), c^(k))
        Rational term = abc + s.x[3] * s.x[4] * s.x[5];
        BigInt e = pow_big(3, static_cast<unsigned long>(n - k - 2));
        prefactor *= pow_rat(term, e);
        s = rational_map_step(s);
    }
    const Rational &ab = s.x[3], &bb = s.x[4], &cb = s.x[5];  // iterate n-2
    Rational bracket = abc * abc + abc * ab * bb * cb + abc * (ab * bb + ab * cb + bb * cb) +
                       a * a * ab * ab * ab + b * b * bb * bb * bb + c * c * cb * cb * cb;
    return prefactor * bracket;
}

}  // namespace dimers
