#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "inclgraph/group.hpp"
#include "inclgraph/lattice.hpp"

namespace inclgraph {

enum class GraphProvenance { Inclusion, Intersection, Synthetic };

inline const char* provenance_name(GraphProvenance p) {
    switch (p) {
        case GraphProvenance::Inclusion: return "inclusion";
        case GraphProvenance::Intersection: return "intersection";
        case GraphProvenance::Synthetic: return "synthetic";
    }
    return "?";
}

// Undirected simple graph; edges kept sorted with i < j.
struct SimpleGraph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> vertex_labels;
    GraphProvenance provenance = GraphProvenance::Synthetic;

    void add_edge(int a, int b) {
        if (a == b) throw Error(Errc::Internal, "loop edge");
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }

    void normalize() {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    int n_edges() const { return static_cast<int>(edges.size()); }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n_vertices);
        for (auto& [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        return adj;
    }

    std::vector<Bitset> adjacency_bitsets() const {
        std::vector<Bitset> adj(n_vertices, Bitset(n_vertices));
        for (auto& [a, b] : edges) {
            adj[a].set(b);
            adj[b].set(a);
        }
        return adj;
    }
};

namespace detail {

inline std::string subgroup_label(const GroupTable& g, const Subgroup& sg) {
    std::string word = "<";
    for (std::size_t i = 0; i < sg.generators.size(); ++i) {
        if (i) word += ",";
        word += g.labels[sg.generators[i]];
    }
    word += "> (" + std::to_string(sg.order) + ")";
    return word;
}

} // namespace detail

// Vertices are the proper nontrivial subgroups in lattice order; the trivial
// subgroup and G itself are excluded.
inline SimpleGraph inclusion_graph(const GroupTable& g, const SubgroupLattice& lat) {
    SimpleGraph out;
    const int s = static_cast<int>(lat.subgroups.size());
    out.n_vertices = std::max(0, s - 2);
    out.provenance = GraphProvenance::Inclusion;
    for (int i = 1; i + 1 < s; ++i)
        out.vertex_labels.push_back(detail::subgroup_label(g, lat.subgroups[i]));
    for (int i = 1; i + 1 < s; ++i)
        for (int j : lat.above[i].to_indices())
            if (j != s - 1) out.add_edge(i - 1, j - 1);
    out.normalize();
    return out;
}

// Same vertex set; edge when the two subgroups meet in more than the identity.
inline SimpleGraph intersection_graph(const GroupTable& g, const SubgroupLattice& lat) {
    SimpleGraph out;
    const int s = static_cast<int>(lat.subgroups.size());
    out.n_vertices = std::max(0, s - 2);
    out.provenance = GraphProvenance::Intersection;
    for (int i = 1; i + 1 < s; ++i)
        out.vertex_labels.push_back(detail::subgroup_label(g, lat.subgroups[i]));
    for (int i = 1; i + 1 < s; ++i)
        for (int j = i + 1; j + 1 < s; ++j)
            if (lat.subgroups[i].members.intersection_count(lat.subgroups[j].members) > 1)
                out.add_edge(i - 1, j - 1);
    out.normalize();
    return out;
}

// --- synthetic shapes (test fixtures and golden comparisons) --------------

inline SimpleGraph make_complete(int n) {
    SimpleGraph g;
    g.n_vertices = n;
    g.vertex_labels.assign(n, "");
    for (int i = 0; i < n; ++i) g.vertex_labels[i] = "v" + std::to_string(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    g.normalize();
    return g;
}

inline SimpleGraph make_edgeless(int n) {
    SimpleGraph g;
    g.n_vertices = n;
    for (int i = 0; i < n; ++i) g.vertex_labels.push_back("v" + std::to_string(i));
    return g;
}

inline SimpleGraph make_path(int edges) {
    SimpleGraph g = make_edgeless(edges + 1);
    for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
    g.normalize();
    return g;
}

inline SimpleGraph make_cycle(int n) {
    SimpleGraph g = make_edgeless(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.normalize();
    return g;
}

inline SimpleGraph make_star(int leaves) {
    SimpleGraph g = make_edgeless(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    g.normalize();
    return g;
}

inline SimpleGraph make_complete_bipartite(int a, int b) {
    SimpleGraph g = make_edgeless(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    g.normalize();
    return g;
}

inline SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph g;
    g.n_vertices = a.n_vertices + b.n_vertices;
    g.vertex_labels = a.vertex_labels;
    g.vertex_labels.insert(g.vertex_labels.end(), b.vertex_labels.begin(),
                           b.vertex_labels.end());
    g.edges = a.edges;
    for (auto& [x, y] : b.edges) g.add_edge(x + a.n_vertices, y + a.n_vertices);
    g.normalize();
    return g;
}

inline SimpleGraph permuted(const SimpleGraph& g, const std::vector<int>& perm) {
    SimpleGraph out;
    out.n_vertices = g.n_vertices;
    out.provenance = g.provenance;
    out.vertex_labels.assign(g.n_vertices, "");
    for (int v = 0; v < g.n_vertices; ++v) out.vertex_labels[perm[v]] = g.vertex_labels[v];
    for (auto& [a, b] : g.edges) out.add_edge(perm[a], perm[b]);
    out.normalize();
    return out;
}

// Deterministic DOT rendering: vertices and edges in sorted order.
inline std::string to_dot(const SimpleGraph& g, const std::string& name = "G") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.n_vertices; ++v) {
        os << "  " << v;
        if (v < static_cast<int>(g.vertex_labels.size()) && !g.vertex_labels[v].empty())
            os << " [label=\"" << g.vertex_labels[v] << "\"]";
        os << ";\n";
    }
    for (auto& [a, b] : g.edges) os << "  " << a << " -- " << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace inclgraph
