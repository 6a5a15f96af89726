#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dimers/multipoly.hpp"
#include "dimers/numeric.hpp"

namespace dimers {

using Point = std::array<Rational, 2>;

struct Edge {
    int u, v;  // vertex indices, u < v for involutive families
    Label label;
    int id;
};

struct Loop {
    int v;
    Label label;
};

// One step of a face boundary walk: edge `edge_id`, traversed from u to v
// when `forward` is true.
struct FaceStep {
    int edge_id;
    bool forward;
};

using Face = std::vector<FaceStep>;

enum class Family { Grigorchuk, Basilica, Hanoi, Gasket };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Grigorchuk: return "grigorchuk";
        case Family::Basilica: return "basilica";
        case Family::Hanoi: return "hanoi";
        case Family::Gasket: return "gasket";
    }
    return "?";
}

enum class GasketLabeling { Schreier, Rotation, Directional };

inline std::string labeling_name(GasketLabeling l) {
    switch (l) {
        case GasketLabeling::Schreier: return "schreier";
        case GasketLabeling::Rotation: return "rotation";
        case GasketLabeling::Directional: return "directional";
    }
    return "?";
}

struct LabeledGraph {
    Family family;
    int level = 0;
    std::string labeling;  // gasket only, empty otherwise

    std::vector<std::string> vertices;  // lexicographically sorted words
    std::vector<Edge> edges;
    std::vector<Loop> loops;
    std::vector<Point> coords;
    std::vector<Face> faces;
    std::vector<int> corners;  // gasket: the three distinguished vertices

    std::map<std::string, int> index;

    void finalize_index() {
        index.clear();
        for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
    }

    int vertex(const std::string& w) const {
        auto it = index.find(w);
        if (it == index.end()) throw Error("unknown vertex: " + w);
        return it->second;
    }

    int other_end(const Edge& e, int v) const { return e.u == v ? e.v : e.u; }

    // Sum of label weights over edges between u and v (loopless adjacency).
    MultiPoly adjacency(int u, int v) const {
        MultiPoly p;
        for (const auto& e : edges)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u))
                p += MultiPoly::variable(e.label);
        return p;
    }

    int degree(int v) const {  // loops counted once
        int d = 0;
        for (const auto& e : edges) d += (e.u == v) + (e.v == v);
        for (const auto& l : loops) d += (l.v == v);
        return d;
    }
};

// ---- planar face tracing ------------------------------------------------
//
// Requires a simple drawing: exact coordinates, no parallel edges, loops
// ignored. Returns the bounded faces, each as a clockwise boundary walk.

namespace detail {

struct Dart {
    int edge_id;
    int from, to;
};

inline int half_plane(const Rational& dx, const Rational& dy) {
    // 0 for angle in [0, pi), 1 for [pi, 2pi)
    if (dy > 0) return 0;
    if (dy < 0) return 1;
    return dx > 0 ? 0 : 1;
}

inline Rational cross(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace detail

inline std::vector<Face> trace_planar_faces(const LabeledGraph& g) {
    using detail::Dart;
    std::vector<Dart> darts;
    for (const auto& e : g.edges) {
        darts.push_back({e.id, e.u, e.v});
        darts.push_back({e.id, e.v, e.u});
    }
    // rotation system: counterclockwise dart order around each vertex
    std::vector<std::vector<int>> around(g.vertices.size());
    for (int d = 0; d < static_cast<int>(darts.size()); ++d) around[darts[d].from].push_back(d);
    auto dir = [&](int d) -> Point {
        const auto& p = g.coords[darts[d].from];
        const auto& q = g.coords[darts[d].to];
        return {q[0] - p[0], q[1] - p[1]};
    };
    for (auto& ring : around) {
        std::sort(ring.begin(), ring.end(), [&](int x, int y) {
            Point dx = dir(x), dy = dir(y);
            int hx = detail::half_plane(dx[0], dx[1]);
            int hy = detail::half_plane(dy[0], dy[1]);
            if (hx != hy) return hx < hy;
            return detail::cross(dx, dy) > 0;
        });
    }
    // position of each dart in its ring
    std::vector<int> pos(darts.size());
    for (const auto& ring : around)
        for (int i = 0; i < static_cast<int>(ring.size()); ++i) pos[ring[i]] = i;
    auto reverse_of = [&](int d) { return d ^ 1; };
    // next dart of the face: counterclockwise successor of the reversed dart
    auto next_dart = [&](int d) {
        int r = reverse_of(d);
        const auto& ring = around[darts[r].from];
        return ring[(pos[r] + 1) % ring.size()];
    };

    std::vector<bool> used(darts.size(), false);
    std::vector<Face> bounded;
    int outer_count = 0;
    for (int d0 = 0; d0 < static_cast<int>(darts.size()); ++d0) {
        if (used[d0]) continue;
        Face walk;
        Rational area = 0;
        int d = d0;
        do {
            used[d] = true;
            const auto& e = g.edges[darts[d].edge_id];
            walk.push_back({darts[d].edge_id, darts[d].from == e.u});
            const auto& p = g.coords[darts[d].from];
            const auto& q = g.coords[darts[d].to];
            area += detail::cross(p, q);
            d = next_dart(d);
        } while (d != d0);
        if (area < 0) {
            // bounded faces come out clockwise (negative signed area);
            // the single outer walk is counterclockwise
            bounded.push_back(std::move(walk));
        } else {
            ++outer_count;
        }
    }
    if (outer_count != 1)
        throw MalformedInputError("face tracing found " + std::to_string(outer_count) +
                                  " outer faces; drawing is not a connected planar embedding");
    return bounded;
}

}  // namespace dimers
