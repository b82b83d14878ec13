#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "inclgraph/graph.hpp"
#include "inclgraph/planarity.hpp"

namespace inclgraph {

enum class ShapeKind { Empty, Edgeless, Complete, Path, Cycle, Star, Tree, DisjointUnion, Other };

struct Shape {
    ShapeKind kind = ShapeKind::Empty;
    int param = 0; // Path/Cycle: edge count; Star: leaves; DisjointUnion: components

    bool operator==(const Shape& o) const { return kind == o.kind && param == o.param; }
};

inline const char* shape_name(ShapeKind k) {
    switch (k) {
        case ShapeKind::Empty: return "Empty";
        case ShapeKind::Edgeless: return "Edgeless";
        case ShapeKind::Complete: return "Complete";
        case ShapeKind::Path: return "Path";
        case ShapeKind::Cycle: return "Cycle";
        case ShapeKind::Star: return "Star";
        case ShapeKind::Tree: return "Tree";
        case ShapeKind::DisjointUnion: return "DisjointUnion";
        case ShapeKind::Other: return "Other";
    }
    return "?";
}

struct ConnectivityMetrics {
    int n_components = 0;
    std::optional<int> diameter; // nullopt = infinite (disconnected or empty)
    std::optional<int> girth;    // nullopt = acyclic
};

inline int n_components_of(const SimpleGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> comp(g.n_vertices, -1);
    int nc = 0;
    for (int v = 0; v < g.n_vertices; ++v) {
        if (comp[v] != -1) continue;
        std::vector<int> q{v};
        comp[v] = nc;
        for (std::size_t h = 0; h < q.size(); ++h)
            for (int w : adj[q[h]])
                if (comp[w] == -1) {
                    comp[w] = nc;
                    q.push_back(w);
                }
        ++nc;
    }
    return nc;
}

inline ConnectivityMetrics connectivity_metrics(const SimpleGraph& g) {
    ConnectivityMetrics cm;
    const int n = g.n_vertices;
    if (n == 0) return cm; // 0 components, diameter/girth infinite
    auto adj = g.adjacency();
    cm.n_components = n_components_of(g);

    if (cm.n_components == 1) {
        int best = 0;
        std::vector<int> dist(n);
        for (int s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            std::vector<int> q{s};
            dist[s] = 0;
            for (std::size_t h = 0; h < q.size(); ++h) {
                int v = q[h];
                for (int w : adj[v])
                    if (dist[w] == -1) {
                        dist[w] = dist[v] + 1;
                        q.push_back(w);
                    }
            }
            best = std::max(best, *std::max_element(dist.begin(), dist.end()));
        }
        cm.diameter = best;
    }

    // girth: BFS from every start; min over detected non-tree edges
    int girth = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<int> q{s};
        dist[s] = 0;
        for (std::size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            for (int w : adj[v]) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push_back(w);
                } else if (w != parent[v]) {
                    int c = dist[v] + dist[w] + 1;
                    if (girth == -1 || c < girth) girth = c;
                }
            }
        }
    }
    if (girth != -1) cm.girth = girth;
    return cm;
}

inline int max_degree(const SimpleGraph& g) {
    std::vector<int> deg(g.n_vertices, 0);
    for (auto& [a, b] : g.edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

inline std::vector<int> degree_sequence(const SimpleGraph& g) {
    std::vector<int> deg(g.n_vertices, 0);
    for (auto& [a, b] : g.edges) {
        ++deg[a];
        ++deg[b];
    }
    std::sort(deg.rbegin(), deg.rend());
    return deg;
}

// BFS 2-coloring with an explicit re-check of every edge.
inline bool is_bipartite(const SimpleGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> color(g.n_vertices, -1);
    for (int s = 0; s < g.n_vertices; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> q{s};
        for (std::size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            for (int w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    for (auto& [a, b] : g.edges)
        if (color[a] == color[b]) return false;
    return true;
}

// Explicit K_{1,3} subgraph search over vertex 4-tuples; test oracle for the
// degree shortcut.
inline bool contains_claw_bruteforce(const SimpleGraph& g) {
    const int n = g.n_vertices;
    std::vector<Bitset> adj = g.adjacency_bitsets();
    for (int v = 0; v < n; ++v)
        for (int x = 0; x < n; ++x) {
            if (x == v || !adj[v].test(x)) continue;
            for (int y = x + 1; y < n; ++y) {
                if (y == v || !adj[v].test(y)) continue;
                for (int z = y + 1; z < n; ++z) {
                    if (z == v || !adj[v].test(z)) continue;
                    return true;
                }
            }
        }
    return false;
}

// A K_{1,3} subgraph exists exactly when some vertex has three neighbors; the
// brute-force search runs alongside on small graphs and must agree.
inline bool is_claw_free(const SimpleGraph& g) {
    bool by_degree = max_degree(g) <= 2;
    if (g.n_vertices <= 40) {
        bool by_search = !contains_claw_bruteforce(g);
        if (by_degree != by_search)
            throw Error(Errc::Internal, "claw-freeness checks disagree");
    }
    return by_degree;
}

// --- predicate-level shape tests ------------------------------------------

inline bool is_connected_graph(const SimpleGraph& g) {
    return g.n_vertices >= 1 && n_components_of(g) == 1;
}

inline bool is_acyclic_graph(const SimpleGraph& g) {
    return g.n_edges() == g.n_vertices - n_components_of(g);
}

inline bool is_complete_graph(const SimpleGraph& g) {
    return g.n_vertices >= 1 &&
           g.n_edges() == g.n_vertices * (g.n_vertices - 1) / 2;
}

inline bool is_tree_graph(const SimpleGraph& g) {
    return is_connected_graph(g) && is_acyclic_graph(g);
}

inline bool is_path_graph(const SimpleGraph& g) {
    return g.n_vertices >= 2 && is_tree_graph(g) && max_degree(g) <= 2;
}

inline bool is_cycle_graph(const SimpleGraph& g) {
    if (g.n_vertices < 3 || !is_connected_graph(g)) return false;
    auto deg = degree_sequence(g);
    return deg.front() == 2 && deg.back() == 2;
}

inline bool is_star_graph(const SimpleGraph& g) {
    if (g.n_vertices < 2 || !is_tree_graph(g)) return false;
    auto deg = degree_sequence(g);
    int big = 0;
    for (int d : deg)
        if (d >= 2) ++big;
    return big <= 1;
}

inline Shape shape_classify(const SimpleGraph& g) {
    if (g.n_vertices == 0) return {ShapeKind::Empty, 0};
    if (g.n_edges() == 0) return {ShapeKind::Edgeless, g.n_vertices};
    int nc = n_components_of(g);
    if (nc > 1) return {ShapeKind::DisjointUnion, nc};
    if (g.n_vertices >= 3 && is_complete_graph(g)) return {ShapeKind::Complete, g.n_vertices};
    if (is_path_graph(g)) return {ShapeKind::Path, g.n_edges()};
    if (is_cycle_graph(g)) return {ShapeKind::Cycle, g.n_vertices};
    if (is_star_graph(g)) return {ShapeKind::Star, g.n_vertices - 1};
    if (is_tree_graph(g)) return {ShapeKind::Tree, 0};
    return {ShapeKind::Other, 0};
}

// --- clique and chromatic numbers ------------------------------------------

// Bron-Kerbosch with pivoting; returns the clique number.
inline int clique_number(const SimpleGraph& g) {
    const int n = g.n_vertices;
    if (n == 0) return 0;
    auto adj = g.adjacency_bitsets();
    int best = 0;

    struct Ctx {
        const std::vector<Bitset>& adj;
        int n;
        int best = 0;
        void run(int rsize, Bitset p, Bitset x) {
            if (!p.any() && !x.any()) {
                best = std::max(best, rsize);
                return;
            }
            if (rsize + static_cast<int>(p.count()) <= best) return;
            // pivot: vertex of P|X with most neighbors in P
            Bitset px = p | x;
            int pivot = -1;
            std::size_t most = 0;
            for (int u : px.to_indices()) {
                std::size_t cnt = p.intersection_count(adj[u]);
                if (pivot == -1 || cnt > most) {
                    pivot = u;
                    most = cnt;
                }
            }
            Bitset cand = p;
            if (pivot != -1)
                for (int v : adj[pivot].to_indices()) if (cand.test(v)) cand.reset(v);
            for (int v : cand.to_indices()) {
                run(rsize + 1, p & adj[v], x & adj[v]);
                p.reset(v);
                x.set(v);
            }
        }
    } ctx{adj, n};

    Bitset p(n), x(n);
    for (int v = 0; v < n; ++v) p.set(v);
    ctx.run(0, p, x);
    best = ctx.best;
    return best;
}

namespace detail {

inline int greedy_coloring_in_order(const SimpleGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> color(g.n_vertices, -1);
    int used = 0;
    for (int v = 0; v < g.n_vertices; ++v) {
        std::vector<bool> taken(used + 1, false);
        for (int w : adj[v])
            if (w < v && color[w] >= 0 && color[w] <= used) taken[color[w]] = true;
        int c = 0;
        while (c < used && taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

inline bool k_colorable(const std::vector<Bitset>& adj, const std::vector<int>& order, int k,
                        std::vector<int>& color, std::size_t pos, long long& budget) {
    if (pos == order.size()) return true;
    if (--budget <= 0) throw Error(Errc::Internal, "chromatic search budget exceeded");
    int v = order[pos];
    int maxc = 0;
    for (std::size_t i = 0; i < pos; ++i) maxc = std::max(maxc, color[order[i]] + 1);
    int limit = std::min(k, maxc + 1); // new colors introduced in order
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int w : adj[v].to_indices())
            if (color[w] == c) { ok = false; break; }
        if (ok) {
            color[v] = c;
            if (k_colorable(adj, order, k, color, pos + 1, budget)) return true;
            color[v] = -1;
        }
    }
    return false;
}

} // namespace detail

// Exact (omega, chi). For more than 64 vertices chi falls back to the greedy
// coloring along the stored vertex order; for inclusion graphs that order is a
// linear extension of the subgroup poset, so the greedy count is optimal, and
// any disagreement with omega is a hard error rather than an approximation.
inline std::pair<int, int> clique_and_chromatic(const SimpleGraph& g) {
    const int n = g.n_vertices;
    if (n == 0) return {0, 0};
    if (g.n_edges() == 0) return {1, 1};
    int omega = clique_number(g);
    int greedy = detail::greedy_coloring_in_order(g);
    if (greedy == omega) return {omega, omega};
    if (n > 64)
        throw Error(Errc::ChromaticMismatch,
                    "greedy coloring (" + std::to_string(greedy) +
                        ") does not meet the clique bound (" + std::to_string(omega) +
                        ") on a graph too large for exact search");
    auto adj = g.adjacency_bitsets();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto da = adj[a].count(), db = adj[b].count();
        if (da != db) return da > db;
        return a < b;
    });
    for (int k = omega; k <= greedy; ++k) {
        std::vector<int> color(n, -1);
        long long budget = 20'000'000;
        if (detail::k_colorable(adj, order, k, color, 0, budget)) return {omega, k};
    }
    return {omega, greedy};
}

// --- full report ------------------------------------------------------------

struct PropertyReport {
    int n_vertices = 0;
    int n_edges = 0;
    bool connected = false;
    int n_components = 0;
    std::optional<int> diameter;
    std::optional<int> girth;
    bool bipartite = true;
    int max_degree = 0;
    int clique_number = 0;
    int chromatic_number = 0;
    Shape shape;
    bool claw_free = true;
    bool planar = true;
    std::optional<KuratowskiWitness> planarity_witness;
    std::optional<PlanarEmbedding> embedding;
};

struct AnalyzeOptions {
    bool planarity_witness = false; // certificates on demand; the boolean is always exact
    int planarity_vertex_limit = 512;
};

inline PropertyReport analyze_graph(const SimpleGraph& g, const AnalyzeOptions& opts = {}) {
    PropertyReport r;
    r.n_vertices = g.n_vertices;
    r.n_edges = g.n_edges();
    auto cm = connectivity_metrics(g);
    r.n_components = cm.n_components;
    r.diameter = cm.diameter;
    r.girth = cm.girth;
    r.connected = g.n_vertices >= 1 && cm.n_components == 1;
    r.bipartite = is_bipartite(g);
    r.max_degree = max_degree(g);
    auto [w, chi] = clique_and_chromatic(g);
    r.clique_number = w;
    r.chromatic_number = chi;
    r.shape = shape_classify(g);
    r.claw_free = is_claw_free(g);
    if (opts.planarity_witness) {
        auto pr = is_planar(g, opts.planarity_vertex_limit, true);
        r.planar = pr.planar;
        r.planarity_witness = pr.witness;
        r.embedding = pr.embedding;
    } else {
        r.planar = planar_bool(g);
    }

    if (r.chromatic_number < r.clique_number)
        throw Error(Errc::Internal, "chromatic number below clique number");
    if (r.diameter.has_value() != r.connected)
        throw Error(Errc::Internal, "diameter finiteness disagrees with connectivity");
    return r;
}

} // namespace inclgraph
