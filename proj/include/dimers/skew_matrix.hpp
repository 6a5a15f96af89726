#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dimers/graph.hpp"
#include "dimers/multipoly.hpp"

namespace dimers {

// Sparse skew-symmetric weight matrix with rows/columns indexed by words in
// lexicographic order. Diagonal loop entries (Hanoi) live in `loops`, not in
// the sparse rows, so the off-diagonal part is always skew.
struct SkewWeightMatrix {
    int size = 0;
    std::vector<std::map<int, MultiPoly>> rows;
    std::vector<Loop> loops;

    explicit SkewWeightMatrix(int n = 0) : size(n), rows(n) {}

    const MultiPoly& entry(int i, int j) const {
        static const MultiPoly zero;
        auto it = rows[i].find(j);
        return it == rows[i].end() ? zero : it->second;
    }

    void add(int i, int j, const MultiPoly& p) {
        if (p.is_zero()) return;
        MultiPoly& e = rows[i][j];
        e += p;
        if (e.is_zero()) rows[i].erase(j);
    }
};

namespace detail {

// entries +-1 (and +1 diagonal cells for the Hanoi generator chains)
using SignMat = std::vector<std::map<int, int>>;

inline SignMat sign_identity(int n, int s = 1) {
    SignMat m(n);
    for (int i = 0; i < n; ++i) m[i][i] = s;
    return m;
}

// writes sgn * src into the (bi, bj) block of dst, block size = src size
inline void sign_place(SignMat& dst, const SignMat& src, int bi, int bj, int sgn = 1) {
    int m = static_cast<int>(src.size());
    for (int i = 0; i < m; ++i)
        for (const auto& [j, v] : src[i]) dst[bi * m + i][bj * m + j] += sgn * v;
}

struct GrigorchukSigns {
    SignMat a, b, c, d;
};

inline GrigorchukSigns grigorchuk_signs(int n) {
    if (n == 1) {
        GrigorchukSigns s;
        s.a = SignMat(2);
        s.a[0][1] = 1;
        s.a[1][0] = -1;
        s.b = s.c = s.d = sign_identity(2);
        return s;
    }
    GrigorchukSigns p = grigorchuk_signs(n - 1);
    int m = 1 << (n - 1);
    GrigorchukSigns s{SignMat(2 * m), SignMat(2 * m), SignMat(2 * m), SignMat(2 * m)};
    sign_place(s.a, sign_identity(m), 0, 1);
    sign_place(s.a, sign_identity(m), 1, 0, -1);
    sign_place(s.b, p.a, 0, 0);
    sign_place(s.b, p.c, 1, 1);
    sign_place(s.c, p.a, 0, 0);
    sign_place(s.c, p.d, 1, 1);
    sign_place(s.d, sign_identity(m), 0, 0);
    sign_place(s.d, p.b, 1, 1);
    return s;
}

// diagonal correction subtracted from the Grigorchuk matrix to kill loops
inline std::vector<MultiPoly> grigorchuk_J(int n) {
    const MultiPoly B = MultiPoly::variable(Label::B), C = MultiPoly::variable(Label::C),
                    D = MultiPoly::variable(Label::D);
    if (n == 1) return {B + C + D, B + C + D};
    std::vector<MultiPoly> tail = grigorchuk_J(n - 1);
    static const std::map<Label, Label> cycle = {
        {Label::B, Label::D}, {Label::C, Label::B}, {Label::D, Label::C}};
    std::vector<MultiPoly> out(1 << (n - 1), D);
    for (auto& p : tail) out.push_back(rename_vars(p, cycle));
    return out;
}

struct BasilicaSigns {
    SignMat a, ai, b, bi;  // a', a'^{-1}, b', b'^{-1}
};

inline BasilicaSigns basilica_signs(int n) {
    if (n == 1) {
        BasilicaSigns s;
        s.a = sign_identity(2);
        s.ai = sign_identity(2, -1);
        s.b = SignMat(2);
        s.b[0][1] = 1;
        s.b[1][0] = -1;
        s.bi = s.b;
        return s;
    }
    BasilicaSigns p = basilica_signs(n - 1);
    int m = 1 << (n - 1);
    BasilicaSigns s{SignMat(2 * m), SignMat(2 * m), SignMat(2 * m), SignMat(2 * m)};
    sign_place(s.a, p.b, 0, 0);
    sign_place(s.a, sign_identity(m), 1, 1);
    sign_place(s.ai, p.bi, 0, 0);
    sign_place(s.ai, sign_identity(m, -1), 1, 1);
    sign_place(s.b, p.a, 0, 1);
    sign_place(s.b, sign_identity(m, -1), 1, 0);
    sign_place(s.bi, sign_identity(m), 0, 1);
    sign_place(s.bi, p.ai, 1, 0);
    return s;
}

struct HanoiSigns {
    SignMat a, b, c;
};

inline HanoiSigns hanoi_signs(int n) {
    if (n == 1) {
        HanoiSigns s{SignMat(3), SignMat(3), SignMat(3)};
        s.a[0][1] = 1;
        s.a[1][0] = -1;
        s.a[2][2] = 1;
        s.b[0][2] = -1;
        s.b[2][0] = 1;
        s.b[1][1] = 1;
        s.c[1][2] = 1;
        s.c[2][1] = -1;
        s.c[0][0] = 1;
        return s;
    }
    HanoiSigns p = hanoi_signs(n - 1);
    int m = 1;
    for (int i = 1; i < n; ++i) m *= 3;
    int sgn = (n % 2 == 1) ? 1 : -1;  // connector signs alternate with parity
    HanoiSigns s{SignMat(3 * m), SignMat(3 * m), SignMat(3 * m)};
    sign_place(s.a, sign_identity(m), 0, 1, sgn);
    sign_place(s.a, sign_identity(m), 1, 0, -sgn);
    sign_place(s.a, p.a, 2, 2);
    sign_place(s.b, sign_identity(m), 0, 2, -sgn);
    sign_place(s.b, sign_identity(m), 2, 0, sgn);
    sign_place(s.b, p.b, 1, 1);
    sign_place(s.c, sign_identity(m), 1, 2, sgn);
    sign_place(s.c, sign_identity(m), 2, 1, -sgn);
    sign_place(s.c, p.c, 0, 0);
    return s;
}

inline void add_signs(SkewWeightMatrix& m, const SignMat& s, Label l, bool diagonal_as_loops) {
    MultiPoly w = MultiPoly::variable(l);
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        for (const auto& [j, v] : s[i]) {
            if (i == j && diagonal_as_loops) {
                m.loops.push_back({i, l});  // Hanoi diagonal cells are +1
            } else {
                m.add(i, j, MultiPoly(v) * w);
            }
        }
}

}  // namespace detail

inline SkewWeightMatrix oriented_matrix(Family family, int n) {
    if (n < 1) throw ValidationError("level must be >= 1");
    switch (family) {
        case Family::Grigorchuk: {
            auto s = detail::grigorchuk_signs(n);
            SkewWeightMatrix m(1 << n);
            detail::add_signs(m, s.a, Label::A, false);
            detail::add_signs(m, s.b, Label::B, false);
            detail::add_signs(m, s.c, Label::C, false);
            detail::add_signs(m, s.d, Label::D, false);
            // J cancels every diagonal term exactly
            auto J = detail::grigorchuk_J(n);
            for (int i = 0; i < m.size; ++i) m.add(i, i, -J[i]);
            for (int i = 0; i < m.size; ++i)
                if (!m.entry(i, i).is_zero()) throw Error("diagonal not cancelled");
            return m;
        }
        case Family::Basilica: {
            auto s = detail::basilica_signs(n);
            SkewWeightMatrix m(1 << n);
            // a' and a'^{-1} contribute opposite diagonal identities
            detail::add_signs(m, s.a, Label::A, false);
            detail::add_signs(m, s.ai, Label::A, false);
            detail::add_signs(m, s.b, Label::B, false);
            detail::add_signs(m, s.bi, Label::B, false);
            for (int i = 0; i < m.size; ++i)
                if (!m.entry(i, i).is_zero()) throw Error("diagonal not cancelled");
            return m;
        }
        case Family::Hanoi: {
            auto s = detail::hanoi_signs(n);
            int sz = 1;
            for (int i = 0; i < n; ++i) sz *= 3;
            SkewWeightMatrix m(sz);
            detail::add_signs(m, s.a, Label::A, true);
            detail::add_signs(m, s.b, Label::B, true);
            detail::add_signs(m, s.c, Label::C, true);
            return m;
        }
        default:
            throw UnsupportedContextError("no oriented matrix for this family");
    }
}

// keeps the rows/columns whose indices are not listed in `drop` (sorted)
inline SkewWeightMatrix delete_rows_cols(const SkewWeightMatrix& m, const std::vector<int>& drop) {
    std::vector<int> remap(m.size, -1);
    int k = 0;
    std::size_t d = 0;
    for (int i = 0; i < m.size; ++i) {
        if (d < drop.size() && drop[d] == i) {
            ++d;
            continue;
        }
        remap[i] = k++;
    }
    SkewWeightMatrix out(k);
    for (int i = 0; i < m.size; ++i) {
        if (remap[i] < 0) continue;
        for (const auto& [j, p] : m.rows[i])
            if (remap[j] >= 0) out.add(remap[i], remap[j], p);
    }
    return out;
}

struct ReducedMatrices {
    SkewWeightMatrix gamma_a, gamma_b, gamma_c, lambda;
};

// removes the corner row/column carrying each loop; remaining diagonal
// entries are dropped (they live in the loop list, which is cleared)
inline ReducedMatrices hanoi_reductions(const SkewWeightMatrix& delta, int n) {
    if (delta.loops.size() != 3) throw MalformedInputError("expected the three Hanoi loops");
    int sz = delta.size;
    int v0 = 0, v1 = (sz - 1) / 2, v2 = sz - 1;  // 0^n, 1^n, 2^n
    ReducedMatrices r{delete_rows_cols(delta, {v2}), delete_rows_cols(delta, {v1}),
                      delete_rows_cols(delta, {v0}), delete_rows_cols(delta, {v0, v1, v2})};
    (void)n;
    return r;
}

struct OrientationReport {
    bool skew_ok = true;
    bool adjacency_ok = true;
    bool loops_ok = true;
    std::vector<int> face_clockwise_counts;
    bool faces_ok = true;
    std::string message;

    bool pass() const { return skew_ok && adjacency_ok && loops_ok && faces_ok; }
};

inline OrientationReport verify_good_orientation(const SkewWeightMatrix& m,
                                                 const LabeledGraph& g) {
    if (m.size != static_cast<int>(g.vertices.size()))
        throw DimensionMismatchError("matrix size " + std::to_string(m.size) + " vs " +
                                     std::to_string(g.vertices.size()) + " vertices");
    OrientationReport rep;
    std::ostringstream msg;
    for (int i = 0; i < m.size && rep.skew_ok; ++i) {
        for (const auto& [j, p] : m.rows[i]) {
            if (i == j || !(m.entry(j, i) == -p)) {
                rep.skew_ok = false;
                msg << "not skew at (" << i << "," << j << "); ";
                break;
            }
        }
    }
    // |entries| must reproduce the loopless adjacency weights exactly
    std::map<std::pair<int, int>, MultiPoly> adj;
    for (const auto& e : g.edges) adj[{e.u, e.v}] += MultiPoly::variable(e.label);
    for (const auto& [uv, w] : adj) {
        MultiPoly abs_entry;
        for (const auto& [mono, c] : m.entry(uv.first, uv.second).terms())
            abs_entry.add_term(mono, c < 0 ? -c : c);
        if (!(abs_entry == w)) {
            rep.adjacency_ok = false;
            msg << "entry/adjacency mismatch at (" << uv.first << "," << uv.second << "); ";
        }
    }
    for (int i = 0; i < m.size; ++i)
        for (const auto& [j, p] : m.rows[i]) {
            if (i < j && !adj.count({i, j})) {
                rep.adjacency_ok = false;
                msg << "spurious entry at (" << i << "," << j << "); ";
            }
        }
    // loop lists must agree (both sides sorted by vertex then label)
    auto key = [](const Loop& l) { return std::pair<int, int>(l.v, static_cast<int>(l.label)); };
    std::vector<std::pair<int, int>> ml, gl;
    for (const auto& l : m.loops) ml.push_back(key(l));
    for (const auto& l : g.loops) gl.push_back(key(l));
    std::sort(ml.begin(), ml.end());
    std::sort(gl.begin(), gl.end());
    if (ml != gl) {
        rep.loops_ok = false;
        msg << "loop lists differ; ";
    }
    // Kasteleyn parity: walking each clockwise face boundary, an edge counts
    // as clockwise when its sign in the traversal direction is positive
    for (const auto& face : g.faces) {
        int cw = 0;
        for (const auto& step : face) {
            const Edge& e = g.edges[step.edge_id];
            int tail = step.forward ? e.u : e.v;
            int head = step.forward ? e.v : e.u;
            if (linear_coefficient(m.entry(tail, head), e.label) > 0) ++cw;
        }
        rep.face_clockwise_counts.push_back(cw);
        if (cw % 2 == 0) rep.faces_ok = false;
    }
    if (!rep.faces_ok) msg << "even clockwise count on some face; ";
    rep.message = msg.str();
    return rep;
}

}  // namespace dimers
