#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dimers/errors.hpp"
#include "dimers/numeric.hpp"

namespace dimers {

// Edge labels double as polynomial variables.
enum class Label : int { A = 0, B = 1, C = 2, D = 3 };

constexpr int kNumVars = 4;

inline char label_char(Label l) { return "abcd"[static_cast<int>(l)]; }

inline Label label_from_char(char c) {
    switch (c) {
        case 'a': return Label::A;
        case 'b': return Label::B;
        case 'c': return Label::C;
        case 'd': return Label::D;
    }
    throw ValidationError(std::string("unknown label: ") + c);
}

// Exponent vector over (a, b, c, d) with cached total degree.
struct Monomial {
    std::array<BigInt, kNumVars> exp{};

    BigInt degree() const {
        BigInt d = 0;
        for (const auto& e : exp) d += e;
        return d;
    }

    bool operator==(const Monomial& o) const { return exp == o.exp; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] + o.exp[i];
        return r;
    }

    // Exact quotient; nullopt if any exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) {
            r.exp[i] = exp[i] - o.exp[i];
            if (r.exp[i] < 0) return std::nullopt;
        }
        return r;
    }
};

// Graded lexicographic order with a > b > c > d, largest monomial first.
struct MonomialGreater {
    bool operator()(const Monomial& x, const Monomial& y) const {
        BigInt dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx > dy;
        for (int i = 0; i < kNumVars; ++i)
            if (x.exp[i] != y.exp[i]) return x.exp[i] > y.exp[i];
        return false;
    }
};

// Sparse multivariate polynomial over arbitrary-precision integers.
// Stored terms never have zero coefficient, so the representation is canonical.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, BigInt, MonomialGreater>;

    MultiPoly() = default;
    MultiPoly(const BigInt& c) {  // NOLINT: implicit by design
        if (c != 0) terms_[Monomial{}] = c;
    }
    MultiPoly(long c) : MultiPoly(BigInt(c)) {}
    MultiPoly(int c) : MultiPoly(BigInt(c)) {}

    static MultiPoly variable(Label v, const BigInt& e = 1) {
        Monomial m;
        m.exp[static_cast<int>(v)] = e;
        return term(1, m);
    }

    static MultiPoly term(const BigInt& coeff, const Monomial& m) {
        MultiPoly p;
        if (coeff != 0) p.terms_[m] = coeff;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1; }

    // Leading (graded-lex greatest) term; polynomial must be nonzero.
    const std::pair<const Monomial, BigInt>& leading() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return *terms_.begin();
    }

    BigInt total_degree() const {
        if (terms_.empty()) return 0;
        return terms_.begin()->first.degree();
    }

    bool uses_variable(Label v) const {
        int i = static_cast<int>(v);
        for (const auto& [m, c] : terms_)
            if (m.exp[i] != 0) return true;
        return false;
    }

    void add_term(const Monomial& m, const BigInt& coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
    friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }

    friend MultiPoly operator-(const MultiPoly& x) {
        MultiPoly r;
        for (const auto& [m, c] : x.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
        MultiPoly r;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) r.add_term(mx * my, cx * cy);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned long e) const {
        MultiPoly r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    std::string str() const;

  private:
    TermMap terms_;
};

// ---- exact-algebra operations ------------------------------------------

inline Rational evaluate(const MultiPoly& p, const std::map<Label, Rational>& assignment) {
    for (int i = 0; i < kNumVars; ++i) {
        Label v = static_cast<Label>(i);
        if (p.uses_variable(v) && !assignment.count(v))
            throw MissingVariableError(std::string("no value assigned to variable ") +
                                       label_char(v));
    }
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational t(c);
        for (int i = 0; i < kNumVars; ++i) {
            if (m.exp[i] == 0) continue;
            t *= pow_rat(assignment.at(static_cast<Label>(i)), m.exp[i]);
        }
        total += t;
    }
    return total;
}

inline MultiPoly derivative(const MultiPoly& p, Label v) {
    int i = static_cast<int>(v);
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (m.exp[i] == 0) continue;
        Monomial d = m;
        BigInt e = d.exp[i];
        d.exp[i] = e - 1;
        r.add_term(d, c * e);
    }
    return r;
}

// Monomial-ordered long division with exactness check: returns r with r*q == p.
inline MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw InexactDivisionError("division by zero polynomial");
    MultiPoly quotient, rem = p;
    const auto& [qm, qc] = q.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        auto m = rm.divide(qm);
        if (!m || rc % qc != 0)
            throw InexactDivisionError("inexact polynomial division");
        MultiPoly t = MultiPoly::term(rc / qc, *m);
        quotient += t;
        rem -= t * q;
    }
    return quotient;
}

// Square root in the polynomial ring, normalized so the coefficient of the
// graded-lex greatest monomial is positive.
inline MultiPoly poly_sqrt(const MultiPoly& p) {
    if (p.is_zero()) return MultiPoly();
    auto [lm, lc] = p.leading();
    Monomial sm;
    for (int i = 0; i < kNumVars; ++i) {
        if (lm.exp[i] % 2 != 0) throw NotASquareError("leading monomial has odd exponent");
        sm.exp[i] = lm.exp[i] / 2;
    }
    BigInt sc = sqrt_exact(lc);
    MultiPoly s = MultiPoly::term(sc, sm);
    MultiPoly rem = p - s * s;
    BigInt two_sc = 2 * sc;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        auto m = rm.divide(sm);
        if (!m || rc % two_sc != 0) throw NotASquareError("polynomial is not a perfect square");
        MultiPoly t = MultiPoly::term(rc / two_sc, *m);
        // maintain rem = p - s^2 across s += t
        rem -= MultiPoly(2) * s * t + t * t;
        s += t;
    }
    return s;
}

// Renames variables (used by the J-matrix bar substitution).
inline MultiPoly rename_vars(const MultiPoly& p, const std::map<Label, Label>& perm) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial nm;
        for (int i = 0; i < kNumVars; ++i) {
            Label v = static_cast<Label>(i);
            auto it = perm.find(v);
            int j = static_cast<int>(it == perm.end() ? v : it->second);
            nm.exp[j] += m.exp[i];
        }
        r.add_term(nm, c);
    }
    return r;
}

// Coefficient of the degree-1 monomial in variable v (e.g. the b-coefficient
// of "b + c" or "-2*b"); zero if absent.
inline BigInt linear_coefficient(const MultiPoly& p, Label v) {
    Monomial m;
    m.exp[static_cast<int>(v)] = 1;
    auto it = p.terms().find(m);
    return it == p.terms().end() ? BigInt(0) : it->second;
}

// Substitutes integer values for a subset of the variables.
inline MultiPoly substitute(const MultiPoly& p, const std::map<Label, BigInt>& values) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial nm = m;
        BigInt coeff = c;
        for (const auto& [v, val] : values) {
            int i = static_cast<int>(v);
            if (nm.exp[i] != 0) {
                coeff *= pow_big(val, to_ulong_exp(nm.exp[i]));
                nm.exp[i] = 0;
            }
        }
        r.add_term(nm, coeff);
    }
    return r;
}

inline std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt coeff = c;
        if (first) {
            if (coeff < 0) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool has_vars = m.degree() != 0;
        bool printed = false;
        if (coeff != 1 || !has_vars) {
            out << coeff.get_str();
            printed = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            if (m.exp[i] == 0) continue;
            if (printed) out << "*";
            printed = true;
            out << label_char(static_cast<Label>(i));
            if (m.exp[i] != 1) out << "^" << m.exp[i].get_str();
        }
    }
    return out.str();
}

}  // namespace dimers
