#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "inclgraph/graph.hpp"

namespace inclgraph {

struct PlanarEmbedding {
    // rotation[v]: neighbors of v in cyclic order; tracing rule: after the
    // directed edge (u, v), leave along (v, w) where w follows u in rotation[v]
    std::vector<std::vector<int>> rotation;
};

struct KuratowskiWitness {
    bool is_k5 = false; // otherwise a K_{3,3} pattern
    std::vector<int> branch_vertices; // K5: 5 entries; K33: 3 + 3 (X side then Y side)
    std::vector<std::vector<int>> paths; // internally disjoint, endpoints are branch vertices
};

struct PlanarityResult {
    bool planar = false;
    std::optional<PlanarEmbedding> embedding;
    std::optional<KuratowskiWitness> witness;
};

namespace planar_detail {

struct Block {
    std::vector<std::pair<int, int>> edges;
};

inline std::vector<Block> biconnected_blocks(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<Block> blocks;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> stack;
    int timer = 0;

    struct Frame { int v, parent; std::size_t next; };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> call;
        call.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next < adj[f.v].size()) {
                int w = adj[f.v][f.next++];
                if (disc[w] == -1) {
                    stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    call.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                call.pop_back();
                if (parent != -1) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) {
                        Block b;
                        while (true) {
                            auto e = stack.back();
                            stack.pop_back();
                            b.edges.push_back(e);
                            if (e == std::make_pair(parent, v)) break;
                        }
                        blocks.push_back(std::move(b));
                    }
                }
            }
        }
    }
    return blocks;
}

// Demoucron path addition on one biconnected block. Returns rotations for the
// block's vertices (global ids) or nullopt when the block is non-planar.
inline std::optional<std::map<int, std::vector<int>>>
embed_block(const std::vector<std::pair<int, int>>& block_edges) {
    std::vector<int> verts;
    for (auto& [a, b] : block_edges) {
        verts.push_back(a);
        verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const int nv = static_cast<int>(verts.size());
    auto local = [&](int gv) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), gv) - verts.begin());
    };

    if (block_edges.size() == 1) {
        std::map<int, std::vector<int>> rot;
        rot[block_edges[0].first] = {block_edges[0].second};
        rot[block_edges[0].second] = {block_edges[0].first};
        return rot;
    }

    const int m = static_cast<int>(block_edges.size());
    if (m > 3 * nv - 6) return std::nullopt;

    std::vector<std::vector<int>> adj(nv);
    for (auto& [a, b] : block_edges) {
        adj[local(a)].push_back(local(b));
        adj[local(b)].push_back(local(a));
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());

    std::vector<std::vector<bool>> edge_embedded(nv, std::vector<bool>(nv, false));
    std::vector<bool> vertex_embedded(nv, false);
    auto embed_edge = [&](int a, int b) {
        edge_embedded[a][b] = edge_embedded[b][a] = true;
        vertex_embedded[a] = vertex_embedded[b] = true;
    };

    // initial cycle by DFS
    std::vector<int> cyc;
    {
        std::vector<int> parent(nv, -2), order;
        std::vector<std::size_t> it(nv, 0);
        std::vector<int> st{0};
        parent[0] = -1;
        int cu = -1, cv = -1;
        while (!st.empty() && cu == -1) {
            int v = st.back();
            if (it[v] < adj[v].size()) {
                int w = adj[v][it[v]++];
                if (parent[w] == -2) {
                    parent[w] = v;
                    st.push_back(w);
                } else if (w != parent[v]) {
                    bool on_stack = false;
                    for (int x : st)
                        if (x == w) { on_stack = true; break; }
                    if (on_stack) { cu = v; cv = w; }
                }
            } else {
                st.pop_back();
            }
        }
        if (cu == -1) return std::nullopt; // no cycle in a 2-connected block: malformed
        int x = cu;
        while (x != cv) {
            cyc.push_back(x);
            x = parent[x];
        }
        cyc.push_back(cv);
    }

    std::vector<std::vector<int>> faces;
    faces.push_back(cyc);
    std::vector<int> rcyc(cyc.rbegin(), cyc.rend());
    faces.push_back(rcyc);
    for (std::size_t i = 0; i < cyc.size(); ++i)
        embed_edge(cyc[i], cyc[(i + 1) % cyc.size()]);

    int embedded_count = static_cast<int>(cyc.size());

    auto face_set = [&](const std::vector<int>& f) {
        Bitset s(nv);
        for (int v : f) s.set(v);
        return s;
    };

    while (embedded_count < m) {
        // bridges: components of non-embedded vertices plus chords
        std::vector<int> comp(nv, -1);
        int ncomp = 0;
        for (int v = 0; v < nv; ++v) {
            if (vertex_embedded[v] || comp[v] != -1) continue;
            std::vector<int> bfs{v};
            comp[v] = ncomp;
            for (std::size_t h = 0; h < bfs.size(); ++h)
                for (int w : adj[bfs[h]])
                    if (!vertex_embedded[w] && comp[w] == -1) {
                        comp[w] = ncomp;
                        bfs.push_back(w);
                    }
            ++ncomp;
        }

        struct Bridge {
            Bitset attachments;
            bool chord = false;
            int chord_u = -1, chord_v = -1;
            int comp_id = -1;
        };
        std::vector<Bridge> bridges;
        std::vector<int> bridge_of_comp(ncomp, -1);
        for (int v = 0; v < nv; ++v) {
            if (vertex_embedded[v]) continue;
            if (bridge_of_comp[comp[v]] == -1) {
                bridge_of_comp[comp[v]] = static_cast<int>(bridges.size());
                Bridge b;
                b.attachments = Bitset(nv);
                b.comp_id = comp[v];
                bridges.push_back(b);
            }
        }
        for (int v = 0; v < nv; ++v) {
            if (vertex_embedded[v]) continue;
            for (int w : adj[v])
                if (vertex_embedded[w]) bridges[bridge_of_comp[comp[v]]].attachments.set(w);
        }
        for (int a = 0; a < nv; ++a) {
            if (!vertex_embedded[a]) continue;
            for (int b : adj[a]) {
                if (b <= a || !vertex_embedded[b] || edge_embedded[a][b]) continue;
                Bridge br;
                br.attachments = Bitset(nv);
                br.attachments.set(a);
                br.attachments.set(b);
                br.chord = true;
                br.chord_u = a;
                br.chord_v = b;
                bridges.push_back(br);
            }
        }
        if (bridges.empty())
            return std::nullopt; // embedded < m yet no bridge: malformed input

        std::vector<Bitset> fsets;
        fsets.reserve(faces.size());
        for (auto& f : faces) fsets.push_back(face_set(f));

        int best_bridge = -1, best_count = -1, best_face = -1;
        for (std::size_t bi = 0; bi < bridges.size(); ++bi) {
            int cnt = 0, first = -1;
            for (std::size_t fi = 0; fi < faces.size(); ++fi)
                if (bridges[bi].attachments.is_subset_of(fsets[fi])) {
                    ++cnt;
                    if (first == -1) first = static_cast<int>(fi);
                }
            if (cnt == 0) return std::nullopt; // some bridge cannot be drawn
            if (best_count == -1 || cnt < best_count) {
                best_count = cnt;
                best_bridge = static_cast<int>(bi);
                best_face = first;
            }
        }

        const Bridge& br = bridges[best_bridge];
        std::vector<int> path;
        if (br.chord) {
            path = {br.chord_u, br.chord_v};
        } else {
            auto att = br.attachments.to_indices();
            int a0 = att[0], a1 = att[1];
            // BFS a0 -> a1 through the bridge component
            std::vector<int> prev(nv, -2);
            std::vector<int> q;
            for (int w : adj[a0])
                if (!vertex_embedded[w] && comp[w] == br.comp_id && prev[w] == -2) {
                    prev[w] = a0;
                    q.push_back(w);
                }
            int reach = -1;
            for (std::size_t h = 0; h < q.size() && reach == -1; ++h) {
                int v = q[h];
                for (int w : adj[v]) {
                    if (w == a1) {
                        reach = v;
                        break;
                    }
                    if (!vertex_embedded[w] && prev[w] == -2) {
                        prev[w] = v;
                        q.push_back(w);
                    }
                }
            }
            if (reach == -1) return std::nullopt; // malformed: attachments not linked
            std::vector<int> rev{a1};
            int x = reach;
            while (x != a0) {
                rev.push_back(x);
                x = prev[x];
            }
            rev.push_back(a0);
            path.assign(rev.rbegin(), rev.rend());
        }

        for (std::size_t i = 0; i + 1 < path.size(); ++i) embed_edge(path[i], path[i + 1]);
        embedded_count += static_cast<int>(path.size()) - 1;

        // split the chosen face along the path
        std::vector<int> F = faces[best_face];
        const int k = static_cast<int>(F.size());
        int pi = -1, pj = -1;
        for (int t = 0; t < k; ++t) {
            if (F[t] == path.front()) pi = t;
            if (F[t] == path.back()) pj = t;
        }
        std::vector<int> walk1, walk2;
        for (int t = pi; ; t = (t + 1) % k) {
            walk1.push_back(F[t]);
            if (t == pj) break;
        }
        for (int t = pj; ; t = (t + 1) % k) {
            walk2.push_back(F[t]);
            if (t == pi) break;
        }
        std::vector<int> face1 = walk1, face2 = walk2;
        for (std::size_t t = path.size() - 2; t >= 1; --t) face1.push_back(path[t]);
        for (std::size_t t = 1; t + 1 < path.size(); ++t) face2.push_back(path[t]);
        faces[best_face] = std::move(face1);
        faces.push_back(std::move(face2));
    }

    // rotations from the directed face cycles
    std::vector<std::map<int, int>> succ(nv); // at v: came-from u -> leave-to w
    for (auto& f : faces) {
        const int k = static_cast<int>(f.size());
        for (int t = 0; t < k; ++t) {
            int u = f[t], v = f[(t + 1) % k], w = f[(t + 2) % k];
            succ[v][u] = w;
        }
    }
    std::map<int, std::vector<int>> rot;
    for (int v = 0; v < nv; ++v) {
        if (succ[v].empty()) continue;
        std::vector<int> order;
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            order.push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end()) return std::nullopt; // malformed trace
            cur = it->second;
        } while (cur != start && order.size() <= succ[v].size());
        if (order.size() != succ[v].size() || cur != start)
            return std::nullopt; // rotation did not close into a single cycle
        std::vector<int> global_order;
        for (int u : order) global_order.push_back(verts[u]);
        rot[verts[v]] = std::move(global_order);
    }
    return rot;
}

} // namespace planar_detail

// Face-trace every component of the embedding and check V - E + F = 2.
inline bool verify_embedding(const SimpleGraph& g, const PlanarEmbedding& emb) {
    const int n = g.n_vertices;
    if (static_cast<int>(emb.rotation.size()) != n) return false;
    auto adj = g.adjacency();
    for (int v = 0; v < n; ++v) {
        auto rot = emb.rotation[v];
        auto nbrs = adj[v];
        std::sort(rot.begin(), rot.end());
        std::sort(nbrs.begin(), nbrs.end());
        if (rot != nbrs) return false;
    }
    // position of each neighbor inside rotation[v]
    std::vector<std::map<int, int>> pos(n);
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < emb.rotation[v].size(); ++i)
            pos[v][emb.rotation[v][i]] = static_cast<int>(i);

    // component ids
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[v] != -1) continue;
        std::vector<int> q{v};
        comp[v] = ncomp;
        for (std::size_t h = 0; h < q.size(); ++h)
            for (int w : adj[q[h]])
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    q.push_back(w);
                }
        ++ncomp;
    }

    std::set<std::pair<int, int>> visited; // directed edges
    std::vector<int> faces_per_comp(ncomp, 0);
    for (auto& [a, b] : g.edges) {
        for (auto [u, v] : {std::make_pair(a, b), std::make_pair(b, a)}) {
            if (visited.count({u, v})) continue;
            int cu = u, cv = v;
            while (!visited.count({cu, cv})) {
                visited.insert({cu, cv});
                const auto& r = emb.rotation[cv];
                int i = pos[cv][cu];
                int w = r[(i + 1) % r.size()];
                cu = cv;
                cv = w;
            }
            ++faces_per_comp[comp[u]];
        }
    }
    std::vector<int> vc(ncomp, 0), ec(ncomp, 0);
    for (int v = 0; v < n; ++v) ++vc[comp[v]];
    for (auto& [a, b] : g.edges) ++ec[comp[a]];
    for (int c = 0; c < ncomp; ++c) {
        int f = faces_per_comp[c] == 0 ? 1 : faces_per_comp[c];
        if (vc[c] - ec[c] + f != 2) return false;
    }
    return true;
}

inline bool verify_kuratowski(const SimpleGraph& g, const KuratowskiWitness& w) {
    std::set<std::pair<int, int>> gedges(g.edges.begin(), g.edges.end());
    auto has = [&](int a, int b) {
        return gedges.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    std::set<int> branch(w.branch_vertices.begin(), w.branch_vertices.end());
    if (w.is_k5 && (branch.size() != 5 || w.paths.size() != 10)) return false;
    if (!w.is_k5 && (branch.size() != 6 || w.paths.size() != 9)) return false;

    std::set<int> interior_used;
    std::set<std::pair<int, int>> pairs;
    for (auto& p : w.paths) {
        if (p.size() < 2) return false;
        if (!branch.count(p.front()) || !branch.count(p.back())) return false;
        if (p.front() == p.back()) return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!has(p[i], p[i + 1])) return false;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (branch.count(p[i])) return false;
            if (!interior_used.insert(p[i]).second) return false; // interiors must be disjoint
        }
        pairs.insert({std::min(p.front(), p.back()), std::max(p.front(), p.back())});
    }
    if (w.is_k5) {
        if (pairs.size() != 10) return false;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j)
                if (!pairs.count({std::min(w.branch_vertices[i], w.branch_vertices[j]),
                                  std::max(w.branch_vertices[i], w.branch_vertices[j])}))
                    return false;
    } else {
        if (pairs.size() != 9) return false;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 3; j < 6; ++j)
                if (!pairs.count({std::min(w.branch_vertices[i], w.branch_vertices[j]),
                                  std::max(w.branch_vertices[i], w.branch_vertices[j])}))
                    return false;
    }
    return true;
}

// Exact planarity decision without witness construction.
inline bool planar_bool(const SimpleGraph& g) {
    auto adj = g.adjacency();
    auto blocks = planar_detail::biconnected_blocks(g.n_vertices, adj);
    for (auto& b : blocks)
        if (!planar_detail::embed_block(b.edges)) return false;
    return true;
}

namespace planar_detail {

inline std::optional<KuratowskiWitness> direct_k33_search(const SimpleGraph& g) {
    const int n = g.n_vertices;
    if (n > 64) return std::nullopt;
    auto adj = g.adjacency_bitsets();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                Bitset common = adj[a] & adj[b];
                common &= adj[c];
                common.reset(a);
                common.reset(b);
                common.reset(c);
                if (common.count() >= 3) {
                    auto ys = common.to_indices();
                    KuratowskiWitness w;
                    w.is_k5 = false;
                    w.branch_vertices = {a, b, c, ys[0], ys[1], ys[2]};
                    for (int x : {a, b, c})
                        for (int k = 0; k < 3; ++k)
                            w.paths.push_back({x, ys[k]});
                    return w;
                }
            }
    return std::nullopt;
}

inline KuratowskiWitness extract_kuratowski(const SimpleGraph& g) {
    if (auto direct = direct_k33_search(g)) return *direct;

    SimpleGraph work = g;
    // one removal pass leaves a graph in which every edge is critical
    std::vector<std::pair<int, int>> kept;
    std::vector<std::pair<int, int>> current = work.edges;
    for (std::size_t i = 0; i < current.size(); ++i) {
        SimpleGraph trial;
        trial.n_vertices = g.n_vertices;
        for (std::size_t j = 0; j < kept.size(); ++j) trial.edges.push_back(kept[j]);
        for (std::size_t j = i + 1; j < current.size(); ++j) trial.edges.push_back(current[j]);
        trial.normalize();
        if (!planar_bool(trial)) continue; // drop current[i]
        kept.push_back(current[i]);
    }
    SimpleGraph minimal;
    minimal.n_vertices = g.n_vertices;
    minimal.edges = kept;
    minimal.normalize();

    auto adj = minimal.adjacency();
    std::vector<int> branch;
    for (int v = 0; v < minimal.n_vertices; ++v)
        if (adj[v].size() >= 3) branch.push_back(v);

    KuratowskiWitness w;
    if (branch.size() == 5) {
        w.is_k5 = true;
        for (int v : branch)
            if (adj[v].size() != 4) throw Error(Errc::Internal, "malformed K5 subdivision");
    } else if (branch.size() == 6) {
        w.is_k5 = false;
        for (int v : branch)
            if (adj[v].size() != 3) throw Error(Errc::Internal, "malformed K33 subdivision");
    } else {
        throw Error(Errc::Internal, "minimal non-planar subgraph is not a Kuratowski subdivision");
    }
    std::set<int> branch_set(branch.begin(), branch.end());

    std::vector<std::vector<int>> paths;
    for (int b : branch)
        for (int first : adj[b]) {
            std::vector<int> path{b, first};
            int prev = b, cur = first;
            while (!branch_set.count(cur)) {
                int nxt = -1;
                for (int u : adj[cur])
                    if (u != prev) { nxt = u; break; }
                if (nxt == -1) throw Error(Errc::Internal, "dangling subdivision path");
                prev = cur;
                cur = nxt;
                path.push_back(cur);
            }
            if (path.front() == path.back())
                throw Error(Errc::Internal, "subdivision path loops back");
            if (path.front() < path.back()) paths.push_back(path);
        }
    w.paths = paths;

    if (!w.is_k5) {
        // recover the bipartition from the contracted branch adjacency
        std::map<int, std::set<int>> nb;
        for (auto& p : w.paths) {
            nb[p.front()].insert(p.back());
            nb[p.back()].insert(p.front());
        }
        std::vector<int> X{branch[0]}, Y;
        for (int v : branch) {
            if (v == branch[0]) continue;
            if (nb[branch[0]].count(v)) Y.push_back(v);
            else X.push_back(v);
        }
        if (X.size() != 3 || Y.size() != 3)
            throw Error(Errc::Internal, "K33 subdivision bipartition failed");
        w.branch_vertices.clear();
        for (int v : X) w.branch_vertices.push_back(v);
        for (int v : Y) w.branch_vertices.push_back(v);
    } else {
        w.branch_vertices = branch;
    }

    if (!verify_kuratowski(g, w))
        throw Error(Errc::Internal, "extracted Kuratowski witness failed validation");
    return w;
}

} // namespace planar_detail

// Exact planarity with a machine-checkable certificate either way: a rotation
// system satisfying Euler's formula, or a K5/K33 subdivision.
inline PlanarityResult is_planar(const SimpleGraph& g, int vertex_limit = 512,
                                 bool want_witness = true) {
    if (g.n_vertices > vertex_limit)
        throw Error(Errc::VertexLimitExceeded,
                    std::to_string(g.n_vertices) + " vertices exceeds planarity limit " +
                        std::to_string(vertex_limit));
    PlanarityResult res;
    auto adj = g.adjacency();
    auto blocks = planar_detail::biconnected_blocks(g.n_vertices, adj);
    std::vector<std::vector<int>> rotation(g.n_vertices);
    bool ok = true;
    for (auto& b : blocks) {
        auto rot = planar_detail::embed_block(b.edges);
        if (!rot) { ok = false; break; }
        for (auto& [v, order] : *rot)
            rotation[v].insert(rotation[v].end(), order.begin(), order.end());
    }
    if (ok) {
        res.planar = true;
        PlanarEmbedding emb{std::move(rotation)};
        if (!verify_embedding(g, emb))
            throw Error(Errc::Internal, "computed embedding failed Euler verification");
        res.embedding = std::move(emb);
        return res;
    }
    res.planar = false;
    if (want_witness) res.witness = planar_detail::extract_kuratowski(g);
    return res;
}

} // namespace inclgraph
