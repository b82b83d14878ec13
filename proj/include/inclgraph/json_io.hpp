#pragma once

#include <nlohmann/json.hpp>

#include "inclgraph/graph.hpp"
#include "inclgraph/group.hpp"
#include "inclgraph/invariants.hpp"
#include "inclgraph/lattice.hpp"
#include "inclgraph/planarity.hpp"

namespace inclgraph {

using json = nlohmann::json;

inline json group_to_json(const GroupTable& g) {
    json j;
    j["order"] = g.order;
    j["op"] = g.op;
    j["labels"] = g.labels;
    j["spec"] = g.spec ? render_spec(*g.spec) : g.name;
    return j;
}

inline json lattice_to_json(const SubgroupLattice& lat) {
    json subs = json::array();
    for (auto& sg : lat.subgroups) {
        json s;
        s["order"] = sg.order;
        s["members"] = sg.members.to_indices();
        s["generators"] = sg.generators;
        subs.push_back(std::move(s));
    }
    json hasse = json::array();
    for (auto& [i, k] : lat.hasse_edges) hasse.push_back(json::array({i, k}));
    json j;
    j["subgroups"] = std::move(subs);
    j["hasse"] = std::move(hasse);
    j["height"] = lat.height;
    j["levels"] = lat.levels;
    return j;
}

inline json graph_to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
    json j;
    j["n"] = g.n_vertices;
    j["edges"] = std::move(edges);
    j["labels"] = g.vertex_labels;
    j["provenance"] = provenance_name(g.provenance);
    return j;
}

inline json witness_to_json(const KuratowskiWitness& w) {
    json j;
    j["kind"] = w.is_k5 ? "K5" : "K33";
    j["branch_vertices"] = w.branch_vertices;
    j["paths"] = w.paths;
    return j;
}

inline json report_to_json(const PropertyReport& r) {
    json j;
    j["n_vertices"] = r.n_vertices;
    j["n_edges"] = r.n_edges;
    j["connected"] = r.connected;
    j["n_components"] = r.n_components;
    j["diameter"] = r.diameter ? json(*r.diameter) : json(nullptr);
    j["diameter_finite"] = r.diameter.has_value();
    j["girth"] = r.girth ? json(*r.girth) : json(nullptr);
    j["girth_finite"] = r.girth.has_value();
    j["bipartite"] = r.bipartite;
    j["max_degree"] = r.max_degree;
    j["clique_number"] = r.clique_number;
    j["chromatic_number"] = r.chromatic_number;
    j["shape"] = shape_name(r.shape.kind);
    j["shape_param"] = r.shape.param;
    j["claw_free"] = r.claw_free;
    j["planar"] = r.planar;
    j["planarity_witness"] =
        r.planarity_witness ? witness_to_json(*r.planarity_witness) : json(nullptr);
    return j;
}

} // namespace inclgraph
