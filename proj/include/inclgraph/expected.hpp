#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inclgraph/group.hpp"
#include "inclgraph/invariants.hpp"
#include "inclgraph/numeric.hpp"

namespace inclgraph {

template <typename T>
struct Prediction {
    T value{};
    std::string theorem;
};

struct ValueSetPrediction {
    std::vector<std::optional<int>> allowed; // nullopt encodes infinity
    std::string theorem;

    bool permits(const std::optional<int>& v) const {
        for (auto& a : allowed)
            if (a == v) return true;
        return false;
    }
};

// What the classification theorems pin down for one group, before looking at
// its graph. Fields left unset are unconstrained.
struct ExpectedProfile {
    long long order = 0;
    bool abelian = false;
    bool cyclic = false;
    bool solvable = true;
    bool empty_graph = false;   // no proper nontrivial subgroup (Z_1, Z_p)
    bool single_vertex = false; // exactly one (cyclic Z_{p^2})

    std::optional<Prediction<bool>> complete;
    std::optional<Prediction<bool>> totally_disconnected;
    std::optional<Prediction<bool>> bipartite;
    std::optional<Prediction<bool>> tree; // nontrivial tree (>= 2 vertices)
    std::optional<Prediction<bool>> star;
    std::optional<Prediction<bool>> path;
    std::optional<Prediction<bool>> cycle;
    std::optional<Prediction<bool>> disconnected;
    std::optional<Prediction<bool>> claw_free;
    std::optional<Prediction<bool>> planar;
    std::optional<Prediction<int>> omega;
    std::optional<Prediction<int>> chi;
    std::optional<Prediction<int>> girth_exact;
    std::optional<ValueSetPrediction> girth_allowed;
    std::optional<ValueSetPrediction> diameter_allowed;
    std::optional<Prediction<Shape>> shape;
    std::vector<std::string> notes;
};

namespace expected_detail {

inline GroupSpec flatten(const GroupSpec& s) {
    if (s.kind != GroupSpec::Kind::DirectProduct) return s;
    std::vector<GroupSpec> fs;
    for (auto& f : s.factors) {
        GroupSpec g = flatten(f);
        if (g.kind == GroupSpec::Kind::DirectProduct)
            fs.insert(fs.end(), g.factors.begin(), g.factors.end());
        else if (!(g.kind == GroupSpec::Kind::Cyclic && g.n == 1))
            fs.push_back(g);
    }
    if (fs.empty()) return GroupSpec::cyclic(1);
    if (fs.size() == 1) return fs[0];
    return GroupSpec::direct_product(std::move(fs));
}

inline bool spec_is_solvable(const GroupSpec& s) {
    if (s.kind == GroupSpec::Kind::Alternating && s.n == 5) return false;
    if (s.kind == GroupSpec::Kind::DirectProduct)
        for (auto& f : s.factors)
            if (!spec_is_solvable(f)) return false;
    return true;
}

// abelian invariants per prime: p -> partition (descending exponents)
inline std::map<long long, std::vector<int>> abelian_type(const GroupTable& g) {
    std::map<long long, std::vector<int>> type;
    auto fac = factorize(g.order);
    std::vector<int> orders(g.order);
    for (int x = 0; x < g.order; ++x) orders[x] = element_order(g, x);
    for (auto& [p, e] : fac) {
        // d[k] = #elements whose order divides p^k
        std::vector<long long> d(e + 1, 0);
        for (int x = 0; x < g.order; ++x) {
            long long o = orders[x];
            int v = 0;
            while (o % p == 0) { o /= p; ++v; }
            if (o == 1) // pure p-element
                for (int k = v; k <= e; ++k) ++d[k];
        }
        d[0] = 1;
        // m[k] = log_p(d[k]) - log_p(d[k-1]) = #parts >= k
        std::vector<int> m;
        for (int k = 1; k <= e; ++k) {
            int diff = 0;
            long long ratio = d[k] / d[k - 1];
            while (ratio > 1) { ratio /= p; ++diff; }
            m.push_back(diff);
        }
        std::vector<int> lambda;
        for (int i = 1; i <= (m.empty() ? 0 : m[0]); ++i) {
            int cnt = 0;
            for (int k : m)
                if (k >= i) ++cnt;
            lambda.push_back(cnt);
        }
        if (!lambda.empty()) type[p] = lambda;
    }
    return type;
}

inline bool abelian_planar(const std::map<long long, std::vector<int>>& type) {
    const int k = static_cast<int>(type.size());
    std::vector<std::vector<int>> parts;
    for (auto& [p, lam] : type) parts.push_back(lam);
    std::sort(parts.begin(), parts.end(), [](auto& a, auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a > b;
    });
    auto is_cyclic_part = [](const std::vector<int>& lam) { return lam.size() == 1; };
    bool cyclic = true;
    for (auto& lam : parts)
        if (!is_cyclic_part(lam)) cyclic = false;

    if (k == 1) {
        auto& lam = parts[0];
        if (lam.size() == 1) return lam[0] >= 2 && lam[0] <= 5;
        if (lam == std::vector<int>{1, 1}) return true;  // Z_p x Z_p
        if (lam == std::vector<int>{2, 1}) return true;  // Z_{p^2} x Z_p
        return false;
    }
    if (k == 2) {
        if (cyclic) {
            int a = parts[0][0], b = parts[1][0];
            if (a < b) std::swap(a, b);
            if (b == 1 && a <= 4) return true; // Z_{p^alpha q}, alpha <= 4
            if (a == 2 && b == 2) return true; // Z_{p^2 q^2}
            return false;
        }
        // Z_{pq} x Z_p: partitions {[1,1],[1]}
        std::vector<std::vector<int>> want{{1, 1}, {1}};
        return parts == want;
    }
    if (k == 3) {
        if (!cyclic) return false;
        std::vector<int> exps;
        for (auto& lam : parts) exps.push_back(lam[0]);
        std::sort(exps.rbegin(), exps.rend());
        return exps == std::vector<int>{1, 1, 1} || exps == std::vector<int>{2, 1, 1};
    }
    if (k == 4) {
        if (!cyclic) return false;
        for (auto& lam : parts)
            if (lam[0] != 1) return false;
        return true; // Z_{pqrs}
    }
    return false;
}

} // namespace expected_detail

// Theorem-driven predictions for the inclusion graph of the group a spec
// constructs. The table is consulted for structural facts (cyclicity, element
// orders, Sylow shape); graph facts are never peeked at.
inline ExpectedProfile expected_profile(const GroupSpec& spec, const GroupTable& g) {
    using namespace expected_detail;
    ExpectedProfile e;
    const long long n = g.order;
    e.order = n;
    auto fac = factorize(n);
    const int k = static_cast<int>(fac.size());
    const int big_omega = omega_with_multiplicity(n);
    e.abelian = is_abelian(g);
    e.cyclic = is_cyclic_group(g);
    GroupSpec flat = flatten(spec);
    e.solvable = spec_is_solvable(flat);

    e.empty_graph = (n == 1) || (big_omega == 1);
    e.single_vertex = e.cyclic && k == 1 && big_omega == 2;

    auto orders_multiset = element_order_multiset(g);
    auto has_element_of_order = [&](long long m) {
        return std::binary_search(orders_multiset.begin(), orders_multiset.end(),
                                  static_cast<int>(m));
    };

    if (n == 1) {
        e.notes.push_back("trivial group: I(G) is empty; classification theorems are vacuous");
        return e;
    }

    // Theorem 2.5: complete iff cyclic of prime-power order p^alpha, alpha > 1
    e.complete = Prediction<bool>{e.cyclic && k == 1 && big_omega >= 2, "2.5"};
    if (e.complete->value)
        e.shape = Prediction<Shape>{
            big_omega == 2 ? Shape{ShapeKind::Edgeless, 1}
            : big_omega == 3 ? Shape{ShapeKind::Path, 1}
                             : Shape{ShapeKind::Complete, big_omega - 1},
            "2.5"};

    // Theorem 2.8 / Corollary 2.10(1): totally disconnected iff |G| in {p^2, pq}
    bool order_pq = (big_omega == 2);
    e.totally_disconnected = Prediction<bool>{order_pq, "2.10.1"};

    // Theorem 2.9 / Corollary 2.10(2): bipartite iff height in {2,3},
    // i.e. |G| has 2 or 3 prime factors with multiplicity
    if (e.empty_graph) {
        e.notes.push_back("I(G) is empty: vacuously bipartite/claw-free/planar; outside the "
                          "order lists of 2.10(2), 2.16 and 2.18(2)");
    } else {
        e.bipartite = Prediction<bool>{big_omega == 2 || big_omega == 3, "2.10.2"};
    }

    // Theorem 2.11(2): trees
    bool tree = false;
    if (big_omega == 3 && k == 1) {
        long long p = fac.begin()->first;
        tree = has_element_of_order(p * p); // excludes exponent-p groups of order p^3
    } else if (big_omega == 3 && k == 2) {
        long long p = 0, q = 0;
        for (auto& [pr, ex] : fac)
            (ex == 2 ? p : q) = pr;
        if (p != 0) tree = has_element_of_order(p * p); // Sylow-p cyclic
    }
    e.tree = Prediction<bool>{tree, "2.11.2"};

    // Theorem 2.11(3): stars are Z_{p^3} and Q8
    bool q8_like = (n == 8) && !e.abelian &&
                   std::count(orders_multiset.begin(), orders_multiset.end(), 2) == 1;
    e.star = Prediction<bool>{(e.cyclic && k == 1 && big_omega == 3) || q8_like, "2.11.3"};
    if (q8_like) e.shape = Prediction<Shape>{{ShapeKind::Star, 3}, "2.11.3"};

    // Theorem 2.11(4): paths are Z_{p^3} (P1) and Z_{p^2 q} (P3)
    bool cyclic_p2q = e.cyclic && k == 2 && big_omega == 3;
    e.path = Prediction<bool>{(e.cyclic && k == 1 && big_omega == 3) || cyclic_p2q, "2.11.4"};
    if (cyclic_p2q) e.shape = Prediction<Shape>{{ShapeKind::Path, 3}, "2.11.4"};

    // Theorem 2.11(1): cycles are C3 = I(Z_{p^4}) and C6 = I(Z_{pqr})
    bool cyclic_pqr = e.cyclic && k == 3 && big_omega == 3;
    e.cycle = Prediction<bool>{(e.cyclic && k == 1 && big_omega == 4) || cyclic_pqr, "2.11.1"};
    if (cyclic_pqr) e.shape = Prediction<Shape>{{ShapeKind::Cycle, 6}, "2.11.1"};

    // Corollary 2.15 within the catalog: Z_p x Z_q, Frobenius with prime
    // complement and minimal normal kernel (Z_q x| Z_p orders, A4, G6 with an
    // irreducible action)
    if (!e.empty_graph) {
        bool disc = false;
        if (big_omega == 2 && (k == 2 || !e.cyclic)) disc = true; // pq and noncyclic p^2
        if (flat.kind == GroupSpec::Kind::Alternating && flat.n == 4) disc = true;
        if (flat.kind == GroupSpec::Kind::G6 && flat.q % 2 == 1 && (flat.p + 1) % flat.q == 0)
            disc = true;
        e.disconnected = Prediction<bool>{disc, "2.15"};
        if (disc && big_omega == 3) {
            // K_{1,p+1} u complement-of-K_{p^2}
            long long p = flat.kind == GroupSpec::Kind::Alternating ? 2 : flat.p;
            e.shape = Prediction<Shape>{
                {ShapeKind::DisjointUnion, static_cast<int>(1 + p * p)}, "2.15"};
        } else if (disc) {
            e.shape = Prediction<Shape>{{ShapeKind::Edgeless, 0}, "2.10.1"};
        }
    }

    // Theorem 2.18(2): claw-free list
    if (!e.empty_graph) {
        bool cf = order_pq || (e.cyclic && k == 1 && (big_omega == 3 || big_omega == 4)) ||
                  cyclic_p2q || cyclic_pqr;
        e.claw_free = Prediction<bool>{cf, "2.18.2"};
    }

    // Theorem 2.16: planarity classification for abelian groups
    if (e.abelian && !e.empty_graph) {
        auto type = abelian_type(g);
        e.planar = Prediction<bool>{abelian_planar(type), "2.16"};
    } else if (!e.abelian) {
        e.notes.push_back("non-abelian: planarity observed informationally (2.16 covers abelian only)");
    }

    // Corollary 2.7 with height = Omega(|G|) for solvable groups
    if (e.solvable) {
        e.omega = Prediction<int>{big_omega - 1, "2.7"};
        e.chi = Prediction<int>{big_omega - 1, "2.7"};
    }

    // Theorem 2.18(1) with the sharpenings of 2.19-2.21
    ValueSetPrediction girth;
    girth.allowed = {3, 6, std::nullopt};
    girth.theorem = "2.18.1";
    if (e.solvable && k >= 3) {
        girth.allowed = {3, 6};
        girth.theorem = "2.21.1";
    }
    if (!e.solvable) {
        girth.allowed = {3};
        girth.theorem = "prop-nonsolvable";
    }
    e.girth_allowed = girth;
    if (k == 1 && big_omega == 3) {
        // girth 6 cases of order p^3: elementary abelian, and the exponent-p
        // extraspecial group for odd p
        long long p = fac.begin()->first;
        bool exponent_p = !has_element_of_order(p * p);
        if (exponent_p && (e.abelian || p > 2))
            e.girth_exact = Prediction<int>{6, "2.19"};
    }

    // Theorem 2.17: abelian diameters
    if (e.abelian) {
        ValueSetPrediction d;
        d.allowed = {1, 2, 3, 4, std::nullopt};
        d.theorem = "2.17";
        if (e.single_vertex) {
            d.allowed.push_back(0);
            e.notes.push_back("single-vertex graph: diameter 0 permitted alongside 2.17's range");
        }
        e.diameter_allowed = d;
    }

    if (e.totally_disconnected->value && !e.single_vertex)
        e.shape = Prediction<Shape>{{ShapeKind::Edgeless, 0}, "2.10.1"};
    if (e.single_vertex) e.shape = Prediction<Shape>{{ShapeKind::Edgeless, 1}, "2.10.1"};

    return e;
}

inline ExpectedProfile expected_profile(const GroupSpec& spec, int order_cap = kDefaultOrderCap) {
    return expected_profile(spec, construct(spec, order_cap));
}

// Mismatches between a prediction and the observed graph; empty means every
// constrained field agrees.
inline std::vector<std::string> expected_deltas(const ExpectedProfile& e,
                                                const PropertyReport& r,
                                                const SimpleGraph& g) {
    std::vector<std::string> out;
    auto boolstr = [](bool b) { return b ? std::string("true") : std::string("false"); };
    auto check_bool = [&](const std::optional<Prediction<bool>>& p, bool observed,
                          const std::string& what) {
        if (p && p->value != observed)
            out.push_back(what + ": expected " + boolstr(p->value) + " (" + p->theorem +
                          "), observed " + boolstr(observed));
    };
    check_bool(e.complete, is_complete_graph(g), "complete");
    check_bool(e.totally_disconnected, g.n_vertices >= 1 && g.n_edges() == 0,
               "totally_disconnected");
    check_bool(e.bipartite, r.bipartite, "bipartite");
    check_bool(e.tree, g.n_vertices >= 2 && is_tree_graph(g), "tree");
    check_bool(e.star, is_star_graph(g), "star");
    check_bool(e.path, is_path_graph(g), "path");
    check_bool(e.cycle, is_cycle_graph(g), "cycle");
    check_bool(e.disconnected, g.n_vertices >= 1 && !r.connected, "disconnected");
    check_bool(e.claw_free, r.claw_free, "claw_free");
    check_bool(e.planar, r.planar, "planar");
    if (e.omega && e.omega->value != r.clique_number)
        out.push_back("clique_number: expected " + std::to_string(e.omega->value) + " (" +
                      e.omega->theorem + "), observed " + std::to_string(r.clique_number));
    if (e.chi && e.chi->value != r.chromatic_number)
        out.push_back("chromatic_number: expected " + std::to_string(e.chi->value) + " (" +
                      e.chi->theorem + "), observed " + std::to_string(r.chromatic_number));
    auto optstr = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("inf");
    };
    if (e.girth_exact && (!r.girth || *r.girth != e.girth_exact->value))
        out.push_back("girth: expected " + std::to_string(e.girth_exact->value) + " (" +
                      e.girth_exact->theorem + "), observed " + optstr(r.girth));
    if (e.girth_allowed && !e.girth_allowed->permits(r.girth))
        out.push_back("girth: observed " + optstr(r.girth) + " outside " +
                      e.girth_allowed->theorem + " range");
    if (e.diameter_allowed && !e.diameter_allowed->permits(r.diameter))
        out.push_back("diameter: observed " + optstr(r.diameter) + " outside " +
                      e.diameter_allowed->theorem + " range");
    if (e.shape && !(e.shape->value == r.shape) &&
        !(e.shape->value.kind == r.shape.kind && e.shape->value.param == 0))
        out.push_back(std::string("shape: expected ") + shape_name(e.shape->value.kind) + "(" +
                      std::to_string(e.shape->value.param) + ") (" + e.shape->theorem +
                      "), observed " + shape_name(r.shape.kind) + "(" +
                      std::to_string(r.shape.param) + ")");
    return out;
}

} // namespace inclgraph
