#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dimers/graph.hpp"

namespace dimers {

// ---- generator actions (wreath recursion, acting on the first letter) ---

inline std::string grigorchuk_act(Label g, const std::string& w) {
    if (w.empty()) return w;
    char x = w[0];
    std::string rest = w.substr(1);
    switch (g) {
        case Label::A: return std::string(1, x == '0' ? '1' : '0') + rest;
        case Label::B: return x + (x == '0' ? grigorchuk_act(Label::A, rest)
                                            : grigorchuk_act(Label::C, rest));
        case Label::C: return x + (x == '0' ? grigorchuk_act(Label::A, rest)
                                            : grigorchuk_act(Label::D, rest));
        case Label::D: return x + (x == '0' ? rest : grigorchuk_act(Label::B, rest));
    }
    throw Error("bad generator");
}

inline std::string basilica_act(Label g, const std::string& w) {
    if (w.empty()) return w;
    char x = w[0];
    std::string rest = w.substr(1);
    switch (g) {
        case Label::A:  // a = e(b, id)
            return x + (x == '0' ? basilica_act(Label::B, rest) : rest);
        case Label::B:  // b = eps(a, id)
            if (x == '0') return "1" + basilica_act(Label::A, rest);
            return "0" + rest;
        default: throw Error("basilica uses generators a, b only");
    }
}

inline std::string hanoi_act(Label g, const std::string& w) {
    if (w.empty()) return w;
    char x = w[0];
    std::string rest = w.substr(1);
    switch (g) {
        case Label::A:  // (01)(id, id, a)
            if (x == '0') return "1" + rest;
            if (x == '1') return "0" + rest;
            return "2" + hanoi_act(Label::A, rest);
        case Label::B:  // (02)(id, b, id)
            if (x == '0') return "2" + rest;
            if (x == '2') return "0" + rest;
            return "1" + hanoi_act(Label::B, rest);
        case Label::C:  // (12)(c, id, id)
            if (x == '1') return "2" + rest;
            if (x == '2') return "1" + rest;
            return "0" + hanoi_act(Label::C, rest);
        default: throw Error("hanoi uses generators a, b, c only");
    }
}

namespace detail {

inline std::vector<std::string> all_words(int n, int alphabet) {
    std::vector<std::string> words{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        next.reserve(words.size() * alphabet);
        for (const auto& w : words)
            for (int x = 0; x < alphabet; ++x) next.push_back(w + static_cast<char>('0' + x));
        words = std::move(next);
    }
    return words;  // lexicographic by construction
}

inline void assign_edge_ids(LabeledGraph& g) {
    std::stable_sort(g.edges.begin(), g.edges.end(), [&](const Edge& x, const Edge& y) {
        return std::tie(x.u, x.v, x.label) < std::tie(y.u, y.v, y.label);
    });
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) g.edges[i].id = i;
}

inline Point affine_apply(const std::array<Point, 3>& src, const std::array<Point, 3>& dst,
                          const Point& p) {
    // maps the triangle src onto dst
    Point u = {src[1][0] - src[0][0], src[1][1] - src[0][1]};
    Point v = {src[2][0] - src[0][0], src[2][1] - src[0][1]};
    Rational det = u[0] * v[1] - u[1] * v[0];
    Point d = {p[0] - src[0][0], p[1] - src[0][1]};
    // barycentric-style coordinates of p in (src)
    Rational s = (d[0] * v[1] - d[1] * v[0]) / det;
    Rational t = (u[0] * d[1] - u[1] * d[0]) / det;
    Point du = {dst[1][0] - dst[0][0], dst[1][1] - dst[0][1]};
    Point dv = {dst[2][0] - dst[0][0], dst[2][1] - dst[0][1]};
    return {dst[0][0] + s * du[0] + t * dv[0], dst[0][1] + s * du[1] + t * dv[1]};
}

inline const std::array<Point, 3>& base_triangle() {
    static const std::array<Point, 3> tri = {Point{0, 0}, Point{1, 2}, Point{2, 0}};
    return tri;  // corners: 0 = left, 1 = top, 2 = right
}

}  // namespace detail

// ---- Grigorchuk ---------------------------------------------------------

inline LabeledGraph build_grigorchuk(int n) {
    if (n < 1) throw ValidationError("level must be >= 1");
    LabeledGraph g;
    g.family = Family::Grigorchuk;
    g.level = n;
    g.vertices = detail::all_words(n, 2);
    g.finalize_index();
    for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u) {
        for (Label s : {Label::A, Label::B, Label::C, Label::D}) {
            std::string w = grigorchuk_act(s, g.vertices[u]);
            int v = g.vertex(w);
            if (v == u) continue;  // loopless convention
            if (u < v) g.edges.push_back({u, v, s, -1});
        }
    }
    detail::assign_edge_ids(g);

    // linear layout: walk the path from a degree-1 endpoint
    std::map<int, std::set<int>> nbr;
    for (const auto& e : g.edges) {
        nbr[e.u].insert(e.v);
        nbr[e.v].insert(e.u);
    }
    int start = g.vertex(std::string(n - 1, '1') + "0");
    g.coords.assign(g.vertices.size(), Point{0, 0});
    std::set<int> seen{start};
    int cur = start, x = 0;
    g.coords[start] = {0, 0};
    while (true) {
        int next = -1;
        for (int w : nbr[cur])
            if (!seen.count(w)) next = w;
        if (next < 0) break;
        g.coords[next] = {++x, 0};
        seen.insert(next);
        cur = next;
    }

    // faces: one 2-gon per parallel pair
    std::map<std::pair<int, int>, std::vector<int>> pairs;
    for (const auto& e : g.edges) pairs[{e.u, e.v}].push_back(e.id);
    for (const auto& [uv, ids] : pairs) {
        if (ids.size() < 2) continue;
        for (std::size_t i = 1; i < ids.size(); ++i)
            g.faces.push_back({{ids[0], true}, {ids[i], false}});
    }
    return g;
}

// ---- Basilica -----------------------------------------------------------

namespace detail {

// In a cactus every block is a cycle or a single edge; returns the cycle
// blocks as boundary walks (a parallel pair is a 2-cycle).
inline std::vector<Face> cactus_cycles(const LabeledGraph& g) {
    std::vector<Face> cycles;
    std::vector<bool> used(g.edges.size(), false);
    std::vector<std::vector<int>> inc(g.vertices.size());
    for (const auto& e : g.edges) {
        inc[e.u].push_back(e.id);
        inc[e.v].push_back(e.id);
    }
    // DFS; each back edge closes exactly one cycle in a cactus
    std::vector<int> parent_edge(g.vertices.size(), -1);
    std::vector<int> depth(g.vertices.size(), -1);
    std::function<void(int)> dfs = [&](int u) {
        for (int eid : inc[u]) {
            if (used[eid]) continue;
            const Edge& e = g.edges[eid];
            int v = g.other_end(e, u);
            if (depth[v] < 0) {
                used[eid] = true;
                depth[v] = depth[u] + 1;
                parent_edge[v] = eid;
                dfs(v);
            } else if (depth[v] <= depth[u]) {
                used[eid] = true;
                Face cyc;
                cyc.push_back({eid, e.u == u});
                int w = u;
                while (w != v) {
                    const Edge& pe = g.edges[parent_edge[w]];
                    int prev = g.other_end(pe, w);
                    cyc.push_back({pe.id, pe.u == prev ? false : true});
                    w = prev;
                }
                // cyc currently walks u -> v (closing edge) then v's tree
                // path back up; reorder to a consistent closed walk
                std::reverse(cyc.begin() + 1, cyc.end());
                for (std::size_t i = 1; i < cyc.size(); ++i) cyc[i].forward = !cyc[i].forward;
                cycles.push_back(std::move(cyc));
            }
        }
    };
    for (int r = 0; r < static_cast<int>(g.vertices.size()); ++r) {
        if (depth[r] >= 0) continue;
        depth[r] = 0;
        dfs(r);
    }
    return cycles;
}

}  // namespace detail

inline LabeledGraph build_basilica(int n) {
    if (n < 1) throw ValidationError("level must be >= 1");
    LabeledGraph g;
    g.family = Family::Basilica;
    g.level = n;
    g.vertices = detail::all_words(n, 2);
    g.finalize_index();
    // a, b are not involutions: one edge per (vertex, generator) action
    for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u) {
        for (Label s : {Label::A, Label::B}) {
            int v = g.vertex(basilica_act(s, g.vertices[u]));
            if (v == u) continue;  // loopless convention
            g.edges.push_back({std::min(u, v), std::max(u, v), s, -1});
        }
    }
    detail::assign_edge_ids(g);
    g.faces = detail::cactus_cycles(g);

    // recursive cactus layout: each cycle drawn as a regular polygon,
    // subtrees hung off its vertices with geometrically shrinking radius
    std::vector<std::vector<int>> vertex_cycles(g.vertices.size());
    for (int c = 0; c < static_cast<int>(g.faces.size()); ++c)
        for (const auto& s : g.faces[c]) {
            const Edge& e = g.edges[s.edge_id];
            for (int v : {e.u, e.v})
                if (vertex_cycles[v].empty() || vertex_cycles[v].back() != c)
                    vertex_cycles[v].push_back(c);
        }
    std::vector<std::array<double, 2>> pos(g.vertices.size(), {0.0, 0.0});
    std::vector<bool> placed(g.vertices.size(), false);
    std::vector<bool> cycle_drawn(g.faces.size(), false);
    std::function<void(int, double, double)> place = [&](int v, double dir, double radius) {
        std::vector<int> todo;
        for (int c : vertex_cycles[v])
            if (!cycle_drawn[c]) todo.push_back(c);
        double step = todo.size() > 1 ? 1.6 / static_cast<double>(todo.size() - 1) : 0.0;
        for (std::size_t k = 0; k < todo.size(); ++k) {
            int c = todo[k];
            cycle_drawn[c] = true;
            double phi = dir + (static_cast<double>(k) - (todo.size() - 1) / 2.0) * step;
            // order the cycle's vertices starting from v
            std::vector<FaceStep> walk = g.faces[c];
            auto tail_of = [&](const FaceStep& s) {
                const Edge& e = g.edges[s.edge_id];
                return s.forward ? e.u : e.v;
            };
            std::size_t off = 0;
            while (tail_of(walk[off]) != v) ++off;
            std::rotate(walk.begin(), walk.begin() + off, walk.end());
            std::vector<int> ring;
            for (const auto& s : walk) ring.push_back(tail_of(s));
            std::size_t len = ring.size();
            double cr = radius / (2.0 * std::sin(M_PI / static_cast<double>(len)));
            double cx = pos[v][0] + cr * std::cos(phi), cy = pos[v][1] + cr * std::sin(phi);
            for (std::size_t t = 1; t < len; ++t) {
                double ang = phi + M_PI + 2.0 * M_PI * static_cast<double>(t) / len;
                int w = ring[t];
                pos[w] = {cx + cr * std::cos(ang), cy + cr * std::sin(ang)};
                placed[w] = true;
            }
            for (std::size_t t = 1; t < len; ++t) {
                double ang =
                    std::atan2(pos[ring[t]][1] - cy, pos[ring[t]][0] - cx);
                place(ring[t], ang, radius * 0.32);
            }
        }
    };
    placed[0] = true;
    place(0, 0.0, 1.0);
    g.coords.assign(g.vertices.size(), Point{0, 0});
    const long denom = 1 << 20;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        g.coords[v] = {Rational(static_cast<long>(std::lround(pos[v][0] * denom)), denom),
                       Rational(static_cast<long>(std::lround(pos[v][1] * denom)), denom)};
        g.coords[v][0].canonicalize();
        g.coords[v][1].canonicalize();
    }
    return g;
}

inline std::map<std::pair<Label, int>, int> basilica_cycle_census(const LabeledGraph& g) {
    if (g.family != Family::Basilica) throw MalformedInputError("census requires a Basilica graph");
    std::map<std::pair<Label, int>, int> census;
    for (const auto& f : g.faces) {
        Label l = g.edges[f.front().edge_id].label;
        census[{l, static_cast<int>(f.size())}] += 1;
    }
    return census;
}

// ---- Hanoi --------------------------------------------------------------

namespace detail {

// copy j of level n-1 occupies a sub-triangle near corner j, scaled by 2/5
// so the connector edges keep positive length; each copy is reflected, so
// corner assignment swaps the two non-outer corners.
inline std::array<std::array<int, 3>, 3> hanoi_corner_assignment() {
    // assignment[j][k] = which global anchor the copy-j corner k maps to:
    // 0..2 = outer corner P_j itself encoded via pairs below
    return {{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
}

inline std::vector<Point> hanoi_coords(int n) {
    const auto& tri = base_triangle();
    if (n == 1) return {tri[0], tri[1], tri[2]};
    std::vector<Point> prev = hanoi_coords(n - 1);
    auto shrink = [&](int j, int k) -> Point {  // 2/5 of the way from P_j to P_k
        return {tri[j][0] + Rational(2, 5) * (tri[k][0] - tri[j][0]),
                tri[j][1] + Rational(2, 5) * (tri[k][1] - tri[j][1])};
    };
    // copy j: its corner j stays at P_j; reflection swaps the other two:
    // copy 0: corner1 -> toward P2, corner2 -> toward P1, etc.
    std::array<std::array<Point, 3>, 3> dst;
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            if (k == j) {
                dst[j][k] = tri[j];
            } else {
                int other = 3 - j - k;
                dst[j][k] = shrink(j, other == j ? k : other);
            }
        }
    }
    std::vector<Point> out;
    out.reserve(prev.size() * 3);
    // vertex order is lexicographic: word = first letters + suffix j; the
    // suffix is the copy index, so iterate words in lex order directly
    int prev_count = static_cast<int>(prev.size());
    out.assign(prev_count * 3, Point{0, 0});
    std::vector<std::string> words = all_words(n, 3);
    std::vector<std::string> prev_words = all_words(n - 1, 3);
    std::map<std::string, int> prev_index;
    for (int i = 0; i < prev_count; ++i) prev_index[prev_words[i]] = i;
    for (int i = 0; i < static_cast<int>(words.size()); ++i) {
        const std::string& w = words[i];
        int j = w.back() - '0';
        int pi = prev_index[w.substr(0, n - 1)];
        out[i] = affine_apply(tri, dst[j], prev[pi]);
    }
    return out;
}

}  // namespace detail

inline LabeledGraph build_hanoi(int n) {
    if (n < 1) throw ValidationError("level must be >= 1");
    LabeledGraph g;
    g.family = Family::Hanoi;
    g.level = n;
    g.vertices = detail::all_words(n, 3);
    g.finalize_index();
    for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u) {
        for (Label s : {Label::A, Label::B, Label::C}) {
            int v = g.vertex(hanoi_act(s, g.vertices[u]));
            if (v == u) {
                g.loops.push_back({u, s});  // loops retained
            } else if (u < v) {
                g.edges.push_back({u, v, s, -1});
            }
        }
    }
    detail::assign_edge_ids(g);
    g.coords = detail::hanoi_coords(n);
    g.faces = trace_planar_faces(g);
    return g;
}

// ---- Sierpinski gasket --------------------------------------------------

namespace detail {

struct GasketRec {
    std::vector<std::string> verts;
    std::vector<std::tuple<std::string, std::string, Label>> edges;
    std::array<std::string, 3> corners;  // 0 = left, 1 = top, 2 = right
    std::map<std::string, Point> coords;
};

inline GasketRec gasket_schreier_base() {
    GasketRec r;
    const auto& tri = base_triangle();
    r.verts = {"0", "1", "2"};
    r.edges = {{"0", "1", Label::A}, {"0", "2", Label::B}, {"1", "2", Label::C}};
    r.corners = {"0", "1", "2"};
    r.coords = {{"0", tri[0]}, {"1", tri[1]}, {"2", tri[2]}};
    return r;
}

inline GasketRec gasket_rotation_base() {
    GasketRec r;
    const auto& tri = base_triangle();
    auto mid = [&](int i, int j) -> Point {
        return {(tri[i][0] + tri[j][0]) / 2, (tri[i][1] + tri[j][1]) / 2};
    };
    // corners 00,11,22; midpoints named by the lex-least contracted word
    r.verts = {"00", "11", "22", "20", "10", "01"};
    std::string C0 = "00", C1 = "11", C2 = "22", M01 = "20", M12 = "01", M02 = "10";
    r.edges = {{C0, M01, Label::A}, {C1, M12, Label::A}, {C2, M02, Label::A},
               {C0, M02, Label::B}, {C1, M01, Label::B}, {C2, M12, Label::B},
               {M01, M02, Label::C}, {M01, M12, Label::C}, {M12, M02, Label::C}};
    r.corners = {C0, C1, C2};
    r.coords = {{C0, tri[0]}, {C1, tri[1]}, {C2, tri[2]},
                {M01, mid(0, 1)}, {M12, mid(1, 2)}, {M02, mid(0, 2)}};
    return r;
}

// copy placement: placement[j][k] = anchor slot of copy j's corner k.
// Slots: 0,1,2 = outer corners; 3 = mid(0,1); 4 = mid(1,2); 5 = mid(0,2).
inline GasketRec gasket_step(const GasketRec& prev,
                             const std::array<std::array<int, 3>, 3>& placement) {
    const auto& tri = base_triangle();
    std::array<Point, 6> slot;
    slot[0] = tri[0];
    slot[1] = tri[1];
    slot[2] = tri[2];
    slot[3] = {(tri[0][0] + tri[1][0]) / 2, (tri[0][1] + tri[1][1]) / 2};
    slot[4] = {(tri[1][0] + tri[2][0]) / 2, (tri[1][1] + tri[2][1]) / 2};
    slot[5] = {(tri[0][0] + tri[2][0]) / 2, (tri[0][1] + tri[2][1]) / 2};

    // vertices occupying the same slot merge; the lex-least name wins
    std::map<int, std::vector<std::string>> slot_names;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            slot_names[placement[j][k]].push_back(prev.corners[k] + static_cast<char>('0' + j));
    std::map<std::string, std::string> rep;
    for (auto& [s, names] : slot_names) {
        std::string least = *std::min_element(names.begin(), names.end());
        for (const auto& nm : names) rep[nm] = least;
    }
    auto canon = [&](const std::string& nm) {
        auto it = rep.find(nm);
        return it == rep.end() ? nm : it->second;
    };

    GasketRec out;
    std::set<std::string> vs;
    for (int j = 0; j < 3; ++j) {
        char sj = static_cast<char>('0' + j);
        std::array<Point, 3> dst;
        for (int k = 0; k < 3; ++k) dst[k] = slot[placement[j][k]];
        std::array<Point, 3> src;
        for (int k = 0; k < 3; ++k) src[k] = prev.coords.at(prev.corners[k]);
        for (const auto& v : prev.verts) {
            std::string nm = canon(v + sj);
            if (vs.insert(nm).second) out.verts.push_back(nm);
            out.coords[nm] = affine_apply(src, dst, prev.coords.at(v));
        }
        for (const auto& [u, v, l] : prev.edges)
            out.edges.emplace_back(canon(u + sj), canon(v + sj), l);
    }
    for (int slot_id = 0; slot_id < 3; ++slot_id) {
        // new corner at outer slot `slot_id` comes from the unique copy corner there
        out.corners[slot_id] = canon(slot_names.at(slot_id).front());
    }
    std::sort(out.verts.begin(), out.verts.end());
    return out;
}

inline LabeledGraph gasket_to_graph(const GasketRec& r, int n, GasketLabeling labeling) {
    LabeledGraph g;
    g.family = Family::Gasket;
    g.level = n;
    g.labeling = labeling_name(labeling);
    g.vertices = r.verts;
    std::sort(g.vertices.begin(), g.vertices.end());
    g.finalize_index();
    for (const auto& [u, v, l] : r.edges) {
        int ui = g.vertex(u), vi = g.vertex(v);
        g.edges.push_back({std::min(ui, vi), std::max(ui, vi), l, -1});
    }
    assign_edge_ids(g);
    g.coords.assign(g.vertices.size(), Point{0, 0});
    for (const auto& [nm, p] : r.coords) g.coords[g.vertex(nm)] = p;
    for (const auto& c : r.corners) g.corners.push_back(g.vertex(c));
    g.faces = trace_planar_faces(g);
    return g;
}

}  // namespace detail

inline LabeledGraph build_sierpinski(int n, GasketLabeling labeling) {
    if (n < 1) throw ValidationError("level must be >= 1");
    if (labeling == GasketLabeling::Rotation && n < 2)
        throw UnsupportedLevelError("rotation labeling is defined for n >= 2");
    detail::GasketRec rec;
    int start;
    std::array<std::array<int, 3>, 3> placement;
    if (labeling == GasketLabeling::Rotation) {
        rec = detail::gasket_rotation_base();
        start = 2;
        // cyclic: copy j's corner 0 at outer slot j; corners 1,2 at mids
        placement = {{{0, 3, 5}, {1, 4, 3}, {2, 5, 4}}};
    } else {
        rec = detail::gasket_schreier_base();
        start = 1;
        // reflected: copy 0 keeps corner 0 outside, swaps 1 <-> 2, etc.
        placement = {{{0, 5, 3}, {4, 1, 3}, {4, 5, 2}}};
    }
    for (int k = start; k < n; ++k) rec = detail::gasket_step(rec, placement);
    LabeledGraph g = detail::gasket_to_graph(rec, n, labeling);
    if (labeling == GasketLabeling::Directional) {
        // label each edge by its drawn direction: horizontal = a,
        // rising = b, falling = c
        for (auto& e : g.edges) {
            Rational dx = g.coords[e.v][0] - g.coords[e.u][0];
            Rational dy = g.coords[e.v][1] - g.coords[e.u][1];
            if (dy == 0)
                e.label = Label::A;
            else if ((dx > 0) == (dy > 0))
                e.label = Label::B;
            else
                e.label = Label::C;
        }
        detail::assign_edge_ids(g);
        g.faces = trace_planar_faces(g);
    }
    return g;
}

inline LabeledGraph contract_to_gasket(const LabeledGraph& h) {
    if (h.family != Family::Hanoi || h.loops.size() != 3)
        throw MalformedInputError("contract_to_gasket expects a Hanoi Schreier graph");
    int n = h.level;
    // inter-triangle edges join words with different suffixes
    auto suffix = [&](int v) { return h.vertices[v].substr(1); };
    std::map<std::string, std::string> rep;
    for (const auto& v : h.vertices) rep[v] = v;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        return rep[x] == x ? x : rep[x] = find(rep[x]);
    };
    int contracted = 0;
    for (const auto& e : h.edges) {
        if (suffix(e.u) == suffix(e.v)) continue;
        std::string ru = find(h.vertices[e.u]), rv = find(h.vertices[e.v]);
        if (ru != rv) {
            rep[std::max(ru, rv)] = std::min(ru, rv);
            ++contracted;
        }
    }
    if (n > 1 && contracted == 0)
        throw MalformedInputError("no inter-triangle edges found; not a Hanoi graph");

    LabeledGraph g;
    g.family = Family::Gasket;
    g.level = n;
    g.labeling = labeling_name(GasketLabeling::Schreier);
    std::set<std::string> reps;
    for (const auto& v : h.vertices) reps.insert(find(v));
    g.vertices.assign(reps.begin(), reps.end());
    g.finalize_index();
    for (const auto& e : h.edges) {
        if (suffix(e.u) != suffix(e.v)) continue;
        int u = g.vertex(find(h.vertices[e.u]));
        int v = g.vertex(find(h.vertices[e.v]));
        g.edges.push_back({std::min(u, v), std::max(u, v), e.label, -1});
    }
    detail::assign_edge_ids(g);
    // coordinates: merged pairs land on the midpoint of their two endpoints
    g.coords.assign(g.vertices.size(), Point{0, 0});
    std::map<int, std::vector<int>> members;
    for (int v = 0; v < static_cast<int>(h.vertices.size()); ++v)
        members[g.vertex(find(h.vertices[v]))].push_back(v);
    for (const auto& [gv, hs] : members) {
        Point p{0, 0};
        for (int hv : hs) {
            p[0] += h.coords[hv][0];
            p[1] += h.coords[hv][1];
        }
        p[0] /= static_cast<int>(hs.size());
        p[1] /= static_cast<int>(hs.size());
        g.coords[gv] = p;
    }
    for (char c : {'0', '1', '2'}) g.corners.push_back(g.vertex(std::string(n, c)));
    g.faces = trace_planar_faces(g);
    return g;
}

}  // namespace dimers
