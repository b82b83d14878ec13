#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "inclgraph/graph.hpp"

namespace inclgraph {

struct CanonicalForm {
    std::string certificate;                      // relabeling-invariant hex string
    std::vector<int> canonical_position;          // vertex -> position in canonical order
    std::vector<std::pair<int, int>> canonical_edges;
};

namespace iso_detail {

using Partition = std::vector<std::vector<int>>; // ordered cells, each ascending

struct Ctx {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::string best;                  // smallest certificate body found so far
    std::vector<int> best_order;       // canonical order achieving it (position -> vertex)
    long long budget = 5'000'000;
    std::unordered_set<std::size_t> seen;
};

inline std::vector<std::uint64_t> adjacency_words(const SimpleGraph& g) {
    std::vector<std::uint64_t> adj(g.n_vertices, 0);
    for (auto& [a, b] : g.edges) {
        adj[a] |= std::uint64_t{1} << b;
        adj[b] |= std::uint64_t{1} << a;
    }
    return adj;
}

// (degree, sorted neighbor degrees, sorted distance profile) per vertex
inline std::vector<std::vector<int>> initial_invariants(const SimpleGraph& g) {
    const int n = g.n_vertices;
    auto lists = g.adjacency();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(lists[v].size());
    std::vector<std::vector<int>> inv(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> sig{deg[v]};
        std::vector<int> nd;
        for (int w : lists[v]) nd.push_back(deg[w]);
        std::sort(nd.begin(), nd.end());
        sig.push_back(-1);
        sig.insert(sig.end(), nd.begin(), nd.end());
        std::vector<int> dist(n, n); // unreachable encoded as n
        dist[v] = 0;
        std::vector<int> q{v};
        for (std::size_t h = 0; h < q.size(); ++h)
            for (int w : lists[q[h]])
                if (dist[w] == n) {
                    dist[w] = dist[q[h]] + 1;
                    q.push_back(w);
                }
        std::vector<int> dp = dist;
        std::sort(dp.begin(), dp.end());
        sig.push_back(-2);
        sig.insert(sig.end(), dp.begin(), dp.end());
        inv[v] = std::move(sig);
    }
    return inv;
}

inline void refine(const Ctx& c, Partition& part) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cell_of(c.n, 0);
        for (std::size_t i = 0; i < part.size(); ++i)
            for (int v : part[i]) cell_of[v] = static_cast<int>(i);
        Partition next;
        for (auto& cell : part) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            // signature: multiset of neighbor cells
            std::vector<std::pair<std::vector<int>, int>> tagged;
            for (int v : cell) {
                std::vector<int> sig;
                std::uint64_t a = c.adj[v];
                while (a) {
                    int w = __builtin_ctzll(a);
                    a &= a - 1;
                    sig.push_back(cell_of[w]);
                }
                std::sort(sig.begin(), sig.end());
                tagged.emplace_back(std::move(sig), v);
            }
            std::sort(tagged.begin(), tagged.end());
            std::vector<int> cur{tagged[0].second};
            for (std::size_t i = 1; i < tagged.size(); ++i) {
                if (tagged[i].first != tagged[i - 1].first) {
                    std::sort(cur.begin(), cur.end());
                    next.push_back(std::move(cur));
                    cur.clear();
                }
                cur.push_back(tagged[i].second);
            }
            std::sort(cur.begin(), cur.end());
            next.push_back(std::move(cur));
        }
        if (next.size() != part.size()) changed = true;
        part = std::move(next);
    }
}

inline bool homogeneous(const Ctx& c, const Partition& part) {
    std::vector<std::uint64_t> mask(part.size(), 0);
    for (std::size_t i = 0; i < part.size(); ++i)
        for (int v : part[i]) mask[i] |= std::uint64_t{1} << v;
    for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i; j < part.size(); ++j) {
            long long cnt = 0;
            for (int v : part[i]) cnt += __builtin_popcountll(c.adj[v] & mask[j]);
            long long full = (i == j)
                                 ? static_cast<long long>(part[i].size()) *
                                       (static_cast<long long>(part[i].size()) - 1)
                                 : static_cast<long long>(part[i].size()) * part[j].size();
            if (cnt != 0 && cnt != full) return false;
        }
    return true;
}

inline std::string cert_body(const Ctx& c, const std::vector<int>& order) {
    // order: position -> vertex; upper-triangle bits, hex packed
    const int n = c.n;
    std::string bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            bits.push_back((c.adj[order[i]] >> order[j]) & 1 ? '1' : '0');
    std::string hex;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int v = 0;
        for (std::size_t k = i; k < std::min(bits.size(), i + 4); ++k)
            v = v * 2 + (bits[k] - '0');
        hex.push_back("0123456789abcdef"[v]);
    }
    return hex;
}

inline std::size_t partition_hash(const Partition& p) {
    std::size_t h = 1469598103934665603ull;
    for (auto& cell : p) {
        h = (h * 1099511628211ull) ^ 0x9e3779b97f4a7c15ull;
        for (int v : cell) h = (h * 1099511628211ull) ^ static_cast<std::size_t>(v + 1);
    }
    return h;
}

inline void consider(Ctx& c, const std::vector<int>& order) {
    std::string body = cert_body(c, order);
    if (c.best.empty() || body < c.best) {
        c.best = body;
        c.best_order = order;
    }
}

inline void search(Ctx& c, Partition part) {
    if (--c.budget <= 0)
        throw Error(Errc::Internal, "canonical labeling search budget exceeded");
    refine(c, part);
    if (!c.seen.insert(partition_hash(part)).second) return;

    bool discrete = true;
    for (auto& cell : part)
        if (cell.size() > 1) { discrete = false; break; }
    if (discrete || homogeneous(c, part)) {
        std::vector<int> order;
        for (auto& cell : part)
            for (int v : cell) order.push_back(v);
        consider(c, order);
        return;
    }
    std::size_t target = 0;
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < part.size(); ++i)
        if (part[i].size() > 1 && part[i].size() > best_size) {
            best_size = part[i].size();
            target = i;
        }
    for (int v : part[target]) {
        Partition child;
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (i == target) {
                child.push_back({v});
                std::vector<int> rest;
                for (int u : part[i])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            } else {
                child.push_back(part[i]);
            }
        }
        search(c, std::move(child));
    }
}

// canonical order of one connected graph (positions local)
inline std::vector<int> canonical_order_connected(const SimpleGraph& g) {
    Ctx c;
    c.n = g.n_vertices;
    c.adj = adjacency_words(g);
    auto inv = initial_invariants(g);
    std::vector<int> idx(c.n);
    for (int i = 0; i < c.n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (inv[a] != inv[b]) return inv[a] < inv[b];
        return a < b;
    });
    Partition part;
    for (int i = 0; i < c.n; ++i) {
        if (i == 0 || inv[idx[i]] != inv[idx[i - 1]]) part.push_back({});
        part.back().push_back(idx[i]);
    }
    for (auto& cell : part) std::sort(cell.begin(), cell.end());
    search(c, part);
    return c.best_order;
}

} // namespace iso_detail

// Certificate invariant under relabeling; equal certificates on graphs within
// the size limit mean isomorphic graphs. Components are canonicalized
// independently and concatenated in sorted order.
inline CanonicalForm canonical_form(const SimpleGraph& g, int vertex_limit = 64) {
    const int n = g.n_vertices;
    if (n > vertex_limit)
        throw Error(Errc::VertexLimitExceeded,
                    std::to_string(n) + " vertices exceeds canonical-form limit " +
                        std::to_string(vertex_limit));
    // split into components
    auto lists = g.adjacency();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[v] != -1) continue;
        std::vector<int> q{v};
        comp[v] = nc;
        for (std::size_t h = 0; h < q.size(); ++h)
            for (int w : lists[q[h]])
                if (comp[w] == -1) {
                    comp[w] = nc;
                    q.push_back(w);
                }
        ++nc;
    }
    struct Piece {
        std::vector<int> verts;       // global ids, ascending
        std::vector<int> order;       // position -> local id
        std::string cert;
    };
    std::vector<Piece> pieces(nc);
    for (int v = 0; v < n; ++v) pieces[comp[v]].verts.push_back(v);
    for (auto& pc : pieces) {
        SimpleGraph sub;
        sub.n_vertices = static_cast<int>(pc.verts.size());
        std::vector<int> local(n, -1);
        for (std::size_t i = 0; i < pc.verts.size(); ++i) local[pc.verts[i]] = static_cast<int>(i);
        for (auto& [a, b] : g.edges)
            if (comp[a] == comp[pc.verts[0]] && local[a] != -1 && local[b] != -1)
                sub.add_edge(local[a], local[b]);
        sub.normalize();
        pc.order = iso_detail::canonical_order_connected(sub);
        iso_detail::Ctx tmp;
        tmp.n = sub.n_vertices;
        tmp.adj = iso_detail::adjacency_words(sub);
        pc.cert = std::to_string(sub.n_vertices) + ":" + iso_detail::cert_body(tmp, pc.order);
    }
    std::vector<int> piece_idx(nc);
    for (int i = 0; i < nc; ++i) piece_idx[i] = i;
    std::sort(piece_idx.begin(), piece_idx.end(), [&](int a, int b) {
        if (pieces[a].verts.size() != pieces[b].verts.size())
            return pieces[a].verts.size() < pieces[b].verts.size();
        if (pieces[a].cert != pieces[b].cert) return pieces[a].cert < pieces[b].cert;
        return pieces[a].verts < pieces[b].verts;
    });

    CanonicalForm cf;
    cf.canonical_position.assign(n, -1);
    int pos = 0;
    std::string cert = "g" + std::to_string(n) + ";";
    for (int pi : piece_idx) {
        auto& pc = pieces[pi];
        for (std::size_t local_pos = 0; local_pos < pc.order.size(); ++local_pos)
            cf.canonical_position[pc.verts[pc.order[local_pos]]] = pos + static_cast<int>(local_pos);
        pos += static_cast<int>(pc.order.size());
        cert += pc.cert + ";";
    }
    cf.certificate = cert;
    for (auto& [a, b] : g.edges) {
        int x = cf.canonical_position[a], y = cf.canonical_position[b];
        cf.canonical_edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(cf.canonical_edges.begin(), cf.canonical_edges.end());
    return cf;
}

// Isomorphism via canonical forms; when isomorphic, returns an explicit vertex
// bijection g1 -> g2 that callers can re-verify edge by edge.
inline std::pair<bool, std::optional<std::vector<int>>>
is_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2, int vertex_limit = 64) {
    if (g1.n_vertices != g2.n_vertices || g1.n_edges() != g2.n_edges())
        return {false, std::nullopt};
    auto degs = [](const SimpleGraph& g) {
        std::vector<int> d(g.n_vertices, 0);
        for (auto& [a, b] : g.edges) {
            ++d[a];
            ++d[b];
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(g1) != degs(g2)) return {false, std::nullopt};
    auto c1 = canonical_form(g1, vertex_limit);
    auto c2 = canonical_form(g2, vertex_limit);
    if (c1.certificate != c2.certificate) return {false, std::nullopt};
    std::vector<int> at_pos(g2.n_vertices, -1);
    for (int v = 0; v < g2.n_vertices; ++v) at_pos[c2.canonical_position[v]] = v;
    std::vector<int> bij(g1.n_vertices);
    for (int v = 0; v < g1.n_vertices; ++v) bij[v] = at_pos[c1.canonical_position[v]];
    // re-verify
    std::set<std::pair<int, int>> e2(g2.edges.begin(), g2.edges.end());
    for (auto& [a, b] : g1.edges) {
        int x = bij[a], y = bij[b];
        if (!e2.count({std::min(x, y), std::max(x, y)}))
            throw Error(Errc::Internal, "canonical bijection failed edge verification");
    }
    return {true, bij};
}

} // namespace inclgraph
