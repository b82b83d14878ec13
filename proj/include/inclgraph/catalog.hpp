#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "inclgraph/group_spec.hpp"
#include "inclgraph/numeric.hpp"

namespace inclgraph {

struct CatalogEntry {
    GroupSpec spec;
    long long order = 0;
    std::string key; // rendered spec, the deterministic sort key
};

struct CatalogRanges {
    long long max_order = 200;
    long long prime_max = 13; // parameters p,q,r,s range over primes <= this
    int exponent_max = 5;
};

// The parametrized group families the verification sweeps quantify over.
// Deterministic: sorted by (order, rendered spec).
inline std::vector<CatalogEntry> build_catalog(const CatalogRanges& ranges = {}) {
    const long long cap = ranges.max_order;
    std::vector<long long> primes;
    for (long long p = 2; p <= ranges.prime_max; ++p)
        if (is_prime(p)) primes.push_back(p);

    std::vector<GroupSpec> specs;
    auto add = [&](const GroupSpec& s) {
        if (spec_order(s) >= 2 && spec_order(s) <= cap) specs.push_back(s);
    };

    // cyclic groups: every smooth order over the prime range, exponents capped
    for (long long n = 2; n <= cap; ++n) {
        auto f = factorize(n);
        bool ok = true;
        for (auto& [p, e] : f)
            if (p > ranges.prime_max || e > ranges.exponent_max) ok = false;
        if (ok) add(GroupSpec::cyclic(n));
    }

    auto Z = [](long long n) { return GroupSpec::cyclic(n); };
    for (long long p : primes) {
        add(GroupSpec::direct_product({Z(p), Z(p)}));
        add(GroupSpec::direct_product({Z(p), Z(p), Z(p)}));
        add(GroupSpec::direct_product({Z(p * p), Z(p)}));
        add(GroupSpec::direct_product({Z(p * p), Z(p * p)}));
        for (long long q : primes) {
            if (q == p) continue;
            add(GroupSpec::direct_product({Z(p * q), Z(p)}));
            add(GroupSpec::direct_product({Z(p * p * q), Z(p)}));
            if (p < q) add(GroupSpec::direct_product({Z(p * q), Z(p * q)}));
        }
    }

    for (long long n = 3; 2 * n <= cap; ++n) add(GroupSpec::dihedral(n));

    add(GroupSpec::quaternion8());
    add(GroupSpec::modular8());
    for (long long p : primes)
        if (p > 2) add(GroupSpec::modular_p3(p));
    for (long long p : primes) add(GroupSpec::heisenberg(p));

    // Z_q x| Z_{p^alpha} with an action of order p^t
    for (long long q : primes)
        for (long long p : primes) {
            if (p == q) continue;
            for (int alpha = 1; alpha <= ranges.exponent_max; ++alpha) {
                long long order = q;
                bool over = false;
                for (int i = 0; i < alpha; ++i) {
                    order *= p;
                    if (order > cap) { over = true; break; }
                }
                if (over) break;
                long long pt = 1;
                for (int t = 1; t <= alpha; ++t) {
                    pt *= p;
                    if ((q - 1) % pt != 0) break;
                    add(GroupSpec::semidirect_qp(q, p, alpha, t));
                }
            }
        }

    // (Z_q x| Z_p) x Z_p, the remaining order-p^2 q family
    for (long long q : primes)
        for (long long p : primes) {
            if (p == q || (q - 1) % p != 0) continue;
            if (p * p * q <= cap)
                add(GroupSpec::direct_product({GroupSpec::semidirect_qp(q, p, 1, 1), Z(p)}));
        }

    for (long long p : primes)
        for (long long q : primes) {
            if (p == q || p * p * q > cap) continue;
            if ((p - 1) % q == 0) {
                add(GroupSpec::semidirect_p2q(p, q));
                // one representative per isomorphism type: t = 0 and the pairs {x, x^-1}
                std::vector<long long> reps{0};
                for (long long t = 1; t < q; ++t) {
                    long long tinv = 1;
                    for (long long u = 1; u < q; ++u)
                        if (u * t % q == 1) { tinv = u; break; }
                    if (t <= tinv) reps.push_back(t);
                }
                for (long long t : reps) add(GroupSpec::g5(p, q, t));
            }
            if (q % 2 == 1 && (p + 1) % q == 0) add(GroupSpec::g6(p, q));
        }

    add(GroupSpec::symmetric(3));
    add(GroupSpec::symmetric(4));
    add(GroupSpec::alternating(4));
    add(GroupSpec::alternating(5));

    std::vector<CatalogEntry> out;
    for (auto& s : specs) out.push_back({s, spec_order(s), render_spec(s)});
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.key < b.key;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const CatalogEntry& a, const CatalogEntry& b) {
                              return a.key == b.key;
                          }),
              out.end());
    return out;
}

} // namespace inclgraph
