#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dimers/graph.hpp"
#include "dimers/multipoly.hpp"

namespace dimers {

// How a cover may treat vertices that no dimer reaches.
//  PerfectMatching - every vertex must be covered by a dimer
//  LoopClosure     - a vertex carrying a loop may be closed by it (the loop
//                    weight enters the monomial)
//  CornerExempt    - a designated corner vertex may stay uncovered for free
enum class BoundaryPolicy { PerfectMatching, LoopClosure, CornerExempt };

constexpr unsigned long long kDefaultOracleBudget = 10'000'000ULL;

struct Cover {
    std::vector<int> dimers;      // edge ids, ascending
    std::vector<Loop> closures;   // loops used (LoopClosure) -- sorted by vertex
    std::vector<int> exempt;      // uncovered corners (CornerExempt), ascending
    Monomial weight;
    std::string cls;              // classification key, empty if not classified
};

struct OracleResult {
    std::vector<Cover> covers;
    MultiPoly partition;
    std::map<std::string, MultiPoly> by_class;
    unsigned long long nodes = 0;
};

namespace detail {

// name a gasket corner by the labels of its incident edges ("ab", "ac", "bc")
inline std::string corner_key(const LabeledGraph& g, int corner) {
    std::set<char> labels;
    for (const Edge& e : g.edges)
        if (e.u == corner || e.v == corner) labels.insert(label_char(e.label));
    std::string key;
    for (char ch : labels) key += ch;
    return key;
}

inline std::string classify(const LabeledGraph& g, const Cover& cov) {
    if (g.family == Family::Hanoi) {
        // all three loops closed -> I; otherwise the single closed loop decides
        if (cov.closures.size() == 3) return "I";
        if (cov.closures.size() == 1) {
            switch (cov.closures[0].label) {
                case Label::C: return "II";
                case Label::B: return "III";
                case Label::A: return "IV";
                default: break;
            }
        }
        throw InvalidCoverError("unexpected loop closure pattern");
    }
    if (g.family == Family::Gasket) {
        std::size_t k = cov.exempt.size();
        if (g.labeling == "rotation") {
            if (k == 0) return "t";
            if (k == 2) return "g";
            if (k == 1) return "h";
            if (k == 3) return "f";
            throw InvalidCoverError("unexpected exempt-corner count");
        }
        if (k == 0) return "t";
        if (k == 3) return "f";
        if (k == 1) return "h_" + corner_key(g, cov.exempt[0]);
        if (k == 2) {
            // name by the one corner that is covered
            for (int c : g.corners)
                if (std::find(cov.exempt.begin(), cov.exempt.end(), c) == cov.exempt.end())
                    return "g_" + corner_key(g, c);
        }
        throw InvalidCoverError("unexpected exempt-corner count");
    }
    return "";
}

struct OracleSearch {
    const LabeledGraph& g;
    BoundaryPolicy policy;
    unsigned long long budget;
    OracleResult& out;
    std::vector<bool> covered;
    std::vector<std::vector<int>> incident;  // non-loop edge ids per vertex
    Cover current;

    void build_incidence() {
        incident.assign(g.vertices.size(), {});
        for (const Edge& e : g.edges) {
            incident[e.u].push_back(e.id);
            incident[e.v].push_back(e.id);
        }
    }

    void tick() {
        if (++out.nodes > budget)
            throw BudgetExceededError("oracle node budget exceeded; raise --oracle-budget");
    }

    void emit() {
        Cover c = current;
        std::sort(c.dimers.begin(), c.dimers.end());
        std::sort(c.closures.begin(), c.closures.end(),
                  [](const Loop& x, const Loop& y) { return x.v < y.v; });
        std::sort(c.exempt.begin(), c.exempt.end());
        c.cls = classify(g, c);
        MultiPoly w = MultiPoly::term(1, c.weight);
        out.partition += w;
        out.by_class[c.cls] += w;
        out.covers.push_back(std::move(c));
    }

    void recurse(int from) {
        tick();
        int v = from;
        while (v < static_cast<int>(covered.size()) && covered[v]) ++v;
        if (v == static_cast<int>(covered.size())) {
            emit();
            return;
        }
        covered[v] = true;
        for (int eid : incident[v]) {
            const Edge& e = g.edges[eid];
            int u = g.other_end(e, v);
            if (covered[u]) continue;
            covered[u] = true;
            current.dimers.push_back(eid);
            ++current.weight.exp[static_cast<int>(e.label)];
            recurse(v + 1);
            --current.weight.exp[static_cast<int>(e.label)];
            current.dimers.pop_back();
            covered[u] = false;
        }
        if (policy == BoundaryPolicy::LoopClosure) {
            for (const Loop& lp : g.loops) {
                if (lp.v != v) continue;
                current.closures.push_back(lp);
                ++current.weight.exp[static_cast<int>(lp.label)];
                recurse(v + 1);
                --current.weight.exp[static_cast<int>(lp.label)];
                current.closures.pop_back();
            }
        } else if (policy == BoundaryPolicy::CornerExempt) {
            if (std::find(g.corners.begin(), g.corners.end(), v) != g.corners.end()) {
                current.exempt.push_back(v);
                recurse(v + 1);
                current.exempt.pop_back();
            }
        }
        covered[v] = false;
    }
};

}  // namespace detail

inline BoundaryPolicy default_policy(Family family) {
    switch (family) {
        case Family::Hanoi: return BoundaryPolicy::LoopClosure;
        case Family::Gasket: return BoundaryPolicy::CornerExempt;
        default: return BoundaryPolicy::PerfectMatching;
    }
}

inline OracleResult enumerate_covers(const LabeledGraph& g, BoundaryPolicy policy,
                                     unsigned long long budget = kDefaultOracleBudget) {
    OracleResult out;
    detail::OracleSearch search{g,   policy, budget,
                                out, std::vector<bool>(g.vertices.size(), false),
                                {},  Cover{}};
    search.build_incidence();
    search.recurse(0);
    return out;
}

inline OracleResult enumerate_covers(const LabeledGraph& g,
                                     unsigned long long budget = kDefaultOracleBudget) {
    return enumerate_covers(g, default_policy(g.family), budget);
}

inline MultiPoly oracle_partition(const LabeledGraph& g,
                                  unsigned long long budget = kDefaultOracleBudget) {
    return enumerate_covers(g, budget).partition;
}

// probability of one cover under the Boltzmann measure at the given weights
inline Rational boltzmann_probability(const Cover& cov, const MultiPoly& partition,
                                      const std::map<Label, Rational>& w) {
    Rational z = evaluate(partition, w);
    if (z == 0) throw ZeroPartitionError("partition function vanishes at these weights");
    return evaluate(MultiPoly::term(1, cov.weight), w) / z;
}

}  // namespace dimers
