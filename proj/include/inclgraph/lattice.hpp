#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "inclgraph/bitset.hpp"
#include "inclgraph/errors.hpp"
#include "inclgraph/group.hpp"

namespace inclgraph {

struct Subgroup {
    Bitset members;
    int order = 0;
    std::vector<int> generators; // irredundant witness set, empty for the trivial subgroup
};

// Subgroup generated by the set bits of `seed`. If the partial closure ever
// exceeds half the group, Lagrange forces the whole group.
inline Bitset close_subgroup(const GroupTable& g, const Bitset& seed) {
    const int n = g.order;
    Bitset s(n);
    s.set(0);
    std::vector<int> elems{0};
    std::vector<int> queue;
    for (int x : seed.to_indices())
        if (!s.test(x)) queue.push_back(x);
    Bitset full(n);
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        if (s.test(x)) continue;
        s.set(x);
        elems.push_back(x);
        if (elems.size() * 2 > static_cast<std::size_t>(n)) {
            for (int i = 0; i < n; ++i) full.set(i);
            return full;
        }
        int xi = g.inv(x);
        if (!s.test(xi)) queue.push_back(xi);
        for (std::size_t k = 0; k < elems.size(); ++k) {
            int y = elems[k];
            int a = g.mul(x, y), b = g.mul(y, x);
            if (!s.test(a)) queue.push_back(a);
            if (!s.test(b)) queue.push_back(b);
        }
    }
    return s;
}

namespace detail {

inline std::vector<int> minimal_generators(const GroupTable& g, const Bitset& members) {
    std::vector<int> gens;
    Bitset closed(g.order);
    closed.set(0);
    for (int x : members.to_indices()) {
        if (x == 0 || closed.test(x)) continue;
        gens.push_back(x);
        Bitset seed(g.order);
        for (int e : gens) seed.set(e);
        closed = close_subgroup(g, seed);
        if (closed == members) break;
    }
    // drop generators made redundant by later ones
    for (std::size_t i = 0; i < gens.size();) {
        if (gens.size() == 1) break;
        std::vector<int> trial;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) trial.push_back(gens[j]);
        Bitset seed(g.order);
        for (int e : trial) seed.set(e);
        if (close_subgroup(g, seed) == members) gens = std::move(trial);
        else ++i;
    }
    return gens;
}

} // namespace detail

// Complete, duplicate-free list of subgroups including the trivial subgroup
// and G, sorted by (order, membership bit string). Seeds with all cyclic
// subgroups and closes joins <S, C> against cyclic subgroups until fixpoint;
// any subgroup T arises as <S, <x>> for a maximal S < T, so the sweep is
// exhaustive.
inline std::vector<Subgroup> all_subgroups(const GroupTable& g,
                                           int order_cap = kDefaultOrderCap) {
    const int n = g.order;
    if (n > order_cap)
        throw Error(Errc::OrderCapExceeded,
                    "|G| = " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));

    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> subs;
    std::vector<Bitset> cyclics;

    auto add = [&](const Bitset& s) {
        if (seen.insert(s).second) subs.push_back(s);
    };

    for (int x = 0; x < n; ++x) {
        Bitset c(n);
        int cur = x;
        while (true) {
            c.set(cur);
            if (cur == 0) break;
            cur = g.mul(cur, x);
            if (cur == x) break;
        }
        c.set(0);
        if (seen.insert(c).second) {
            subs.push_back(c);
            cyclics.push_back(c);
        }
    }

    for (std::size_t idx = 0; idx < subs.size(); ++idx) {
        Bitset base = subs[idx]; // copy: subs may reallocate
        for (const Bitset& c : cyclics) {
            if (c.is_subset_of(base)) continue;
            add(close_subgroup(g, base | c));
        }
    }

    std::sort(subs.begin(), subs.end(), [](const Bitset& a, const Bitset& b) {
        auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a.lex_less(b);
    });

    std::vector<Subgroup> out;
    out.reserve(subs.size());
    for (auto& s : subs) {
        Subgroup sg;
        sg.order = static_cast<int>(s.count());
        if (n % sg.order != 0)
            throw Error(Errc::Internal, "Lagrange violation in subgroup enumeration");
        sg.generators = detail::minimal_generators(g, s);
        sg.members = std::move(s);
        out.push_back(std::move(sg));
    }
    return out;
}

struct SubgroupLattice {
    int group_order = 0;
    std::vector<Subgroup> subgroups;      // sorted; [0] trivial, back() = G
    std::vector<Bitset> above;            // above[i]: indices j with subgroups[i] strictly inside j
    std::vector<Bitset> below;            // transpose of above
    std::vector<std::pair<int, int>> hasse_edges; // (i, j): j covers i
    int height = 0;                       // edges in a longest chain from trivial to G
    std::vector<std::vector<int>> levels; // Mirsky antichains of proper nontrivial subgroups,
                                          // levels[0] = maximal subgroups

    bool contains(int inner, int outer) const {
        return inner == outer || above[inner].test(outer);
    }
    int n_proper_nontrivial() const { return static_cast<int>(subgroups.size()) - 2; }
};

inline SubgroupLattice lattice_of(const GroupTable& g, int order_cap = kDefaultOrderCap) {
    SubgroupLattice lat;
    lat.group_order = g.order;
    lat.subgroups = all_subgroups(g, order_cap);
    const int s = static_cast<int>(lat.subgroups.size());

    lat.above.assign(s, Bitset(s));
    lat.below.assign(s, Bitset(s));
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            if (lat.subgroups[i].order >= lat.subgroups[j].order) continue;
            if (lat.subgroups[i].members.is_subset_of(lat.subgroups[j].members)) {
                lat.above[i].set(j);
                lat.below[j].set(i);
            }
        }

    for (int i = 0; i < s; ++i)
        for (int j : lat.above[i].to_indices())
            if (!(lat.above[i] & lat.below[j]).any())
                lat.hasse_edges.emplace_back(i, j);
    std::sort(lat.hasse_edges.begin(), lat.hasse_edges.end());

    // longest chain ending at each subgroup, counted in edges
    std::vector<int> chain(s, 0);
    for (int j = 0; j < s; ++j)
        for (int i : lat.below[j].to_indices())
            chain[j] = std::max(chain[j], chain[i] + 1);
    lat.height = chain[s - 1];

    // Mirsky levels: repeatedly strip the maximal elements of the
    // proper-nontrivial poset
    std::vector<bool> removed(s, false);
    removed[0] = removed[s - 1] = true;
    int remaining = s - 2;
    while (remaining > 0) {
        std::vector<int> level;
        for (int i = 1; i < s - 1; ++i) {
            if (removed[i]) continue;
            bool maximal = true;
            for (int j : lat.above[i].to_indices())
                if (j != s - 1 && !removed[j]) { maximal = false; break; }
            if (maximal) level.push_back(i);
        }
        for (int i : level) removed[i] = true;
        remaining -= static_cast<int>(level.size());
        lat.levels.push_back(std::move(level));
    }
    return lat;
}

inline int sylow_count(const GroupTable& g, long long p, const SubgroupLattice& lat) {
    if (!is_prime(p)) throw Error(Errc::NonPrimeParameter, std::to_string(p) + " is not prime");
    if (g.order % p != 0)
        throw Error(Errc::PrimeDoesNotDivideOrder,
                    std::to_string(p) + " does not divide |G| = " + std::to_string(g.order));
    long long pk = 1;
    long long m = g.order;
    while (m % p == 0) { pk *= p; m /= p; }
    int count = 0;
    for (auto& sg : lat.subgroups)
        if (sg.order == pk) ++count;
    return count;
}

inline int sylow_count(const GroupTable& g, long long p) {
    return sylow_count(g, p, lattice_of(g, g.order));
}

} // namespace inclgraph
