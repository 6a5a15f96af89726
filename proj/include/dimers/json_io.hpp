#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "dimers/graph.hpp"
#include "dimers/oracle.hpp"
#include "dimers/skew_matrix.hpp"
#include "dimers/stats.hpp"

namespace dimers {

using nlohmann::json;
using nlohmann::ordered_json;

inline std::string point_str(const Rational& q) { return to_string(q); }

inline ordered_json graph_to_json(const LabeledGraph& g) {
    ordered_json j;
    j["level"] = g.level;
    j["family"] = family_name(g.family);
    if (!g.labeling.empty()) j["labeling"] = g.labeling;
    j["vertices"] = g.vertices;
    auto edges = ordered_json::array();
    for (const Edge& e : g.edges)
        edges.push_back({g.vertices[e.u], g.vertices[e.v], std::string(1, label_char(e.label)),
                         e.id});
    j["edges"] = std::move(edges);
    auto loops = ordered_json::array();
    for (const Loop& l : g.loops)
        loops.push_back({g.vertices[l.v], std::string(1, label_char(l.label))});
    j["loops"] = std::move(loops);
    auto coords = ordered_json::object();
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        coords[g.vertices[i]] = {point_str(g.coords[i][0]), point_str(g.coords[i][1])};
    j["coords"] = std::move(coords);
    auto faces = ordered_json::array();
    for (const Face& f : g.faces) {
        auto walk = ordered_json::array();
        for (const FaceStep& s : f) walk.push_back(s.edge_id);
        faces.push_back(std::move(walk));
    }
    j["faces"] = std::move(faces);
    return j;
}

inline ordered_json matrix_to_json(const SkewWeightMatrix& m) {
    ordered_json j;
    j["size"] = m.size;
    j["order"] = "lex";
    auto entries = ordered_json::array();
    for (int i = 0; i < m.size; ++i) {
        for (const auto& [k, p] : m.rows[i]) {
            // each entry is a signed sum of labels; emit one row per term
            for (const auto& [mono, coeff] : p.terms()) {
                std::string label;
                for (int v = 0; v < kNumVars; ++v)
                    for (BigInt e = mono.exp[v]; e > 0; --e)
                        label += label_char(static_cast<Label>(v));
                BigInt c = coeff < 0 ? BigInt(-coeff) : coeff;
                entries.push_back(
                    {i, k, coeff < 0 ? "-" : "+", label, c.get_str()});
            }
        }
    }
    j["entries"] = std::move(entries);
    return j;
}

inline std::string monomial_str(const Monomial& m) {
    return MultiPoly::term(1, m).str();
}

// one cover per line (JSON lines)
inline void covers_to_jsonl(const LabeledGraph& g, const OracleResult& res, std::ostream& out) {
    for (const Cover& c : res.covers) {
        ordered_json j;
        j["dimers"] = c.dimers;
        auto closures = ordered_json::array();
        for (const Loop& l : c.closures)
            closures.push_back({g.vertices[l.v], std::string(1, label_char(l.label))});
        j["closures"] = std::move(closures);
        j["weight"] = monomial_str(c.weight);
        j["class"] = c.cls;
        out << j.dump() << "\n";
    }
}

inline const char* kStatsCsvHeader = "family,labeling,n,label,type,mean,variance,source";

inline void stats_csv_row(std::ostream& out, Family family, const std::string& labeling, int n,
                          Label label, const std::string& type, const MeanVariance& mv,
                          const std::string& source) {
    out << family_name(family) << "," << labeling << "," << n << "," << label_char(label) << ","
        << type << "," << to_string(mv.mean) << "," << to_string(mv.variance) << "," << source
        << "\n";
}

}  // namespace dimers
