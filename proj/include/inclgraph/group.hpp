#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "inclgraph/bitset.hpp"
#include "inclgraph/errors.hpp"
#include "inclgraph/group_spec.hpp"
#include "inclgraph/numeric.hpp"

namespace inclgraph {

inline constexpr int kDefaultOrderCap = 400;

// A finite group as an explicit operation table. Identity is always index 0
// and the element order is fixed by the constructing family, so equal specs
// produce identical tables.
struct GroupTable {
    int order = 0;
    std::vector<int> op;       // row-major, op[x * order + y]
    std::vector<int> inverses;
    std::vector<std::string> labels;
    std::optional<GroupSpec> spec;
    std::string name;

    int mul(int x, int y) const { return op[static_cast<std::size_t>(x) * order + y]; }
    int inv(int x) const { return inverses[x]; }
};

inline int element_order(const GroupTable& g, int x) {
    int m = 1, cur = x;
    while (cur != 0) {
        cur = g.mul(cur, x);
        ++m;
    }
    return m;
}

inline bool is_abelian(const GroupTable& g) {
    for (int x = 0; x < g.order; ++x)
        for (int y = x + 1; y < g.order; ++y)
            if (g.mul(x, y) != g.mul(y, x)) return false;
    return true;
}

inline bool is_cyclic_group(const GroupTable& g) {
    for (int x = 0; x < g.order; ++x)
        if (element_order(g, x) == g.order) return true;
    return false;
}

inline std::vector<int> element_order_multiset(const GroupTable& g) {
    std::vector<int> orders(g.order);
    for (int x = 0; x < g.order; ++x) orders[x] = element_order(g, x);
    std::sort(orders.begin(), orders.end());
    return orders;
}

// Full invariant check; empty result means the table is a group table with
// identity 0 and correct inverses.
inline std::vector<std::string> validate(const GroupTable& g) {
    std::vector<std::string> bad;
    const int n = g.order;
    if (n <= 0) { bad.push_back("EmptyTable"); return bad; }
    if (g.op.size() != static_cast<std::size_t>(n) * n) {
        bad.push_back("TableSizeMismatch");
        return bad;
    }
    for (auto v : g.op)
        if (v < 0 || v >= n) { bad.push_back("EntryOutOfRange"); return bad; }
    for (int x = 0; x < n; ++x) {
        if (g.mul(0, x) != x || g.mul(x, 0) != x) {
            bad.push_back("IdentityLawViolation at " + std::to_string(x));
            return bad;
        }
    }
    if (g.inverses.size() != static_cast<std::size_t>(n)) {
        bad.push_back("InverseTableSizeMismatch");
        return bad;
    }
    for (int x = 0; x < n; ++x) {
        if (g.mul(x, g.inverses[x]) != 0 || g.mul(g.inverses[x], x) != 0) {
            bad.push_back("InverseLawViolation at " + std::to_string(x));
            return bad;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) {
                    bad.push_back("AssociativityViolation at (" + std::to_string(x) + "," +
                                  std::to_string(y) + "," + std::to_string(z) + ")");
                    return bad;
                }
    return bad;
}

namespace detail {

inline void fill_inverses(GroupTable& g) {
    g.inverses.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (g.mul(x, y) == 0) { g.inverses[x] = y; break; }
}

inline void finalize(GroupTable& g) {
    fill_inverses(g);
    auto bad = validate(g);
    if (!bad.empty())
        throw Error(Errc::Internal, "constructed table fails validation: " + bad.front() +
                                        " (" + g.name + ")");
}

inline std::string power_word(const std::string& gen, long long e) {
    if (e == 0) return "";
    if (e == 1) return gen;
    return gen + std::to_string(e);
}

inline std::string word_label(std::initializer_list<std::pair<const char*, long long>> parts) {
    std::string out;
    for (auto& [gen, e] : parts) out += power_word(gen, e);
    return out.empty() ? "e" : out;
}

// Elements a^j b^k with j < a_ord, k < b_ord and b a b^-1 = a^act
// (so b^k a^j b^-k = a^(j * act^k)). Index = j * b_ord + k.
inline GroupTable metacyclic(long long a_ord, long long b_ord, long long act,
                             const std::string& name) {
    GroupTable g;
    g.order = static_cast<int>(a_ord * b_ord);
    g.name = name;
    g.op.resize(static_cast<std::size_t>(g.order) * g.order);
    std::vector<long long> act_pow(b_ord);
    act_pow[0] = 1 % a_ord;
    for (long long k = 1; k < b_ord; ++k) act_pow[k] = act_pow[k - 1] * (act % a_ord) % a_ord;
    for (long long j1 = 0; j1 < a_ord; ++j1)
        for (long long k1 = 0; k1 < b_ord; ++k1)
            for (long long j2 = 0; j2 < a_ord; ++j2)
                for (long long k2 = 0; k2 < b_ord; ++k2) {
                    long long j = (j1 + j2 * act_pow[k1]) % a_ord;
                    long long k = (k1 + k2) % b_ord;
                    g.op[(j1 * b_ord + k1) * g.order + (j2 * b_ord + k2)] =
                        static_cast<int>(j * b_ord + k);
                }
    g.labels.resize(g.order);
    for (long long j = 0; j < a_ord; ++j)
        for (long long k = 0; k < b_ord; ++k)
            g.labels[j * b_ord + k] = word_label({{"a", j}, {"b", k}});
    return g;
}

inline std::string cycle_notation(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || perm[i] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = perm[j];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

inline GroupTable permutation_group(int points, bool even_only, const std::string& name) {
    std::vector<std::vector<int>> elems;
    std::vector<int> perm(points);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (even_only) {
            int inversions = 0;
            for (int i = 0; i < points; ++i)
                for (int j = i + 1; j < points; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            if (inversions % 2) continue;
        }
        elems.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    GroupTable g;
    g.order = static_cast<int>(elems.size());
    g.name = name;
    g.op.resize(static_cast<std::size_t>(g.order) * g.order);
    auto index_of = [&](const std::vector<int>& p) {
        auto it = std::lower_bound(elems.begin(), elems.end(), p);
        return static_cast<int>(it - elems.begin());
    };
    std::vector<int> prod(points);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            for (int i = 0; i < points; ++i) prod[i] = elems[x][elems[y][i]];
            g.op[static_cast<std::size_t>(x) * g.order + y] = index_of(prod);
        }
    g.labels.resize(g.order);
    for (int x = 0; x < g.order; ++x) g.labels[x] = cycle_notation(elems[x]);
    return g;
}

} // namespace detail

// Smallest residue i in [2, modulus) whose multiplicative order mod modulus is
// exactly target_order.
inline long long find_action_exponent(long long modulus, long long target_order) {
    for (long long i = 2; i < modulus; ++i)
        if (multiplicative_order(i, modulus) == target_order) return i;
    throw Error(Errc::NoSuchExponent,
                "no residue of multiplicative order " + std::to_string(target_order) +
                " mod " + std::to_string(modulus));
}

GroupTable construct(const GroupSpec& spec, int order_cap = kDefaultOrderCap);

inline GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                                 int order_cap = kDefaultOrderCap) {
    long long n = static_cast<long long>(a.order) * b.order;
    if (n > order_cap)
        throw Error(Errc::OrderCapExceeded,
                    "|G| = " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
    GroupTable g;
    g.order = static_cast<int>(n);
    g.name = a.name + "x" + b.name;
    if (a.spec && b.spec) {
        std::vector<GroupSpec> fs;
        auto push = [&](const GroupSpec& s) {
            if (s.kind == GroupSpec::Kind::DirectProduct)
                fs.insert(fs.end(), s.factors.begin(), s.factors.end());
            else
                fs.push_back(s);
        };
        push(*a.spec);
        push(*b.spec);
        g.spec = GroupSpec::direct_product(std::move(fs));
    }
    g.op.resize(static_cast<std::size_t>(g.order) * g.order);
    for (int i1 = 0; i1 < a.order; ++i1)
        for (int j1 = 0; j1 < b.order; ++j1)
            for (int i2 = 0; i2 < a.order; ++i2)
                for (int j2 = 0; j2 < b.order; ++j2)
                    g.op[static_cast<std::size_t>(i1 * b.order + j1) * g.order +
                         (i2 * b.order + j2)] = a.mul(i1, i2) * b.order + b.mul(j1, j2);
    g.labels.resize(g.order);
    for (int i = 0; i < a.order; ++i)
        for (int j = 0; j < b.order; ++j)
            g.labels[i * b.order + j] = "(" + a.labels[i] + "," + b.labels[j] + ")";
    detail::finalize(g);
    return g;
}

inline GroupTable construct(const GroupSpec& spec, int order_cap) {
    using K = GroupSpec::Kind;
    validate_spec(spec);
    long long n = spec_order(spec);
    if (n > order_cap)
        throw Error(Errc::OrderCapExceeded,
                    "|G| = " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));

    GroupTable g;
    const std::string name = render_spec(spec);
    switch (spec.kind) {
        case K::Cyclic: {
            g.order = static_cast<int>(spec.n);
            g.name = name;
            g.op.resize(static_cast<std::size_t>(g.order) * g.order);
            for (int x = 0; x < g.order; ++x)
                for (int y = 0; y < g.order; ++y)
                    g.op[static_cast<std::size_t>(x) * g.order + y] = (x + y) % g.order;
            g.labels.resize(g.order);
            for (int x = 0; x < g.order; ++x) g.labels[x] = detail::word_label({{"a", x}});
            break;
        }
        case K::Dihedral:
            g = detail::metacyclic(spec.n, 2, (spec.n - 1) % spec.n, name);
            break;
        case K::Quaternion8: {
            // a^4 = 1, b^2 = a^2, b a b^-1 = a^-1; elements a^j b^k, k < 2
            g.order = 8;
            g.name = name;
            g.op.resize(64);
            auto idx = [](long long j, long long k) { return static_cast<int>(j * 2 + k); };
            for (long long j1 = 0; j1 < 4; ++j1)
                for (long long k1 = 0; k1 < 2; ++k1)
                    for (long long j2 = 0; j2 < 4; ++j2)
                        for (long long k2 = 0; k2 < 2; ++k2) {
                            long long j = k1 ? (j1 - j2 + 4) % 4 : (j1 + j2) % 4;
                            long long k = k1 + k2;
                            if (k == 2) { j = (j + 2) % 4; k = 0; }
                            g.op[static_cast<std::size_t>(idx(j1, k1)) * 8 + idx(j2, k2)] = idx(j, k);
                        }
            g.labels.resize(8);
            for (long long j = 0; j < 4; ++j)
                for (long long k = 0; k < 2; ++k)
                    g.labels[idx(j, k)] = detail::word_label({{"a", j}, {"b", k}});
            break;
        }
        case K::Modular8:
            // the printed presentation a^4 = b^2 = 1, ab = ba^-1, labeled M8
            g = detail::metacyclic(4, 2, 3, name);
            break;
        case K::ModularP3:
            g = detail::metacyclic(spec.p * spec.p, spec.p, 1 + spec.p, name);
            break;
        case K::SemidirectQP: {
            long long pt = 1;
            for (long long i = 0; i < spec.t; ++i) pt *= spec.p;
            long long palpha = 1;
            for (long long i = 0; i < spec.alpha; ++i) palpha *= spec.p;
            long long act = find_action_exponent(spec.q, pt);
            g = detail::metacyclic(spec.q, palpha, act, name);
            break;
        }
        case K::SemidirectP2Q: {
            long long act = find_action_exponent(spec.p * spec.p, spec.q);
            g = detail::metacyclic(spec.p * spec.p, spec.q, act, name);
            break;
        }
        case K::G5: {
            const long long p = spec.p, q = spec.q;
            long long i = find_action_exponent(p, q);
            long long it = mod_pow(i, spec.t, p); // t = 0 means c centralizes b
            g.order = static_cast<int>(p * p * q);
            g.name = name;
            g.op.resize(static_cast<std::size_t>(g.order) * g.order);
            std::vector<long long> ipow(q), itpow(q);
            for (long long z = 0; z < q; ++z) {
                ipow[z] = mod_pow(i, z, p);
                itpow[z] = mod_pow(it, z, p);
            }
            auto idx = [&](long long x, long long y, long long z) {
                return static_cast<int>((x * p + y) * q + z);
            };
            for (long long x1 = 0; x1 < p; ++x1)
                for (long long y1 = 0; y1 < p; ++y1)
                    for (long long z1 = 0; z1 < q; ++z1)
                        for (long long x2 = 0; x2 < p; ++x2)
                            for (long long y2 = 0; y2 < p; ++y2)
                                for (long long z2 = 0; z2 < q; ++z2)
                                    g.op[static_cast<std::size_t>(idx(x1, y1, z1)) * g.order +
                                         idx(x2, y2, z2)] =
                                        idx((x1 + x2 * ipow[z1]) % p,
                                            (y1 + y2 * itpow[z1]) % p, (z1 + z2) % q);
            g.labels.resize(g.order);
            for (long long x = 0; x < p; ++x)
                for (long long y = 0; y < p; ++y)
                    for (long long z = 0; z < q; ++z)
                        g.labels[idx(x, y, z)] =
                            detail::word_label({{"a", x}, {"b", y}, {"c", z}});
            break;
        }
        case K::G6: {
            const long long p = spec.p, q = spec.q;
            // first matrix of multiplicative order exactly q in GL2(p),
            // row-major lexicographic scan
            std::array<long long, 4> M{};
            bool found = false;
            for (long long m00 = 0; m00 < p && !found; ++m00)
                for (long long m01 = 0; m01 < p && !found; ++m01)
                    for (long long m10 = 0; m10 < p && !found; ++m10)
                        for (long long m11 = 0; m11 < p && !found; ++m11) {
                            long long det = (m00 * m11 - m01 * m10) % p;
                            if ((det % p + p) % p == 0) continue;
                            std::array<long long, 4> A{m00, m01, m10, m11};
                            std::array<long long, 4> X{1, 0, 0, 1};
                            long long ord = 0;
                            for (long long k = 1; k <= q; ++k) {
                                std::array<long long, 4> Y{};
                                Y[0] = (X[0] * A[0] + X[1] * A[2]) % p;
                                Y[1] = (X[0] * A[1] + X[1] * A[3]) % p;
                                Y[2] = (X[2] * A[0] + X[3] * A[2]) % p;
                                Y[3] = (X[2] * A[1] + X[3] * A[3]) % p;
                                X = Y;
                                if (X[0] == 1 && X[1] == 0 && X[2] == 0 && X[3] == 1) {
                                    ord = k;
                                    break;
                                }
                            }
                            if (ord == q) { M = A; found = true; }
                        }
            if (!found)
                throw Error(Errc::NoSuchExponent,
                            "GL2(" + std::to_string(p) + ") has no element of order " +
                                std::to_string(q));
            std::vector<std::array<long long, 4>> Mpow(q);
            Mpow[0] = {1, 0, 0, 1};
            for (long long k = 1; k < q; ++k) {
                auto& X = Mpow[k - 1];
                Mpow[k] = {(X[0] * M[0] + X[1] * M[2]) % p, (X[0] * M[1] + X[1] * M[3]) % p,
                           (X[2] * M[0] + X[3] * M[2]) % p, (X[2] * M[1] + X[3] * M[3]) % p};
            }
            g.order = static_cast<int>(p * p * q);
            g.name = name;
            g.op.resize(static_cast<std::size_t>(g.order) * g.order);
            auto idx = [&](long long v0, long long v1, long long z) {
                return static_cast<int>((v0 * p + v1) * q + z);
            };
            for (long long u0 = 0; u0 < p; ++u0)
                for (long long u1 = 0; u1 < p; ++u1)
                    for (long long z1 = 0; z1 < q; ++z1) {
                        auto& A = Mpow[z1];
                        for (long long v0 = 0; v0 < p; ++v0)
                            for (long long v1 = 0; v1 < p; ++v1) {
                                // row vector v times M^z1
                                long long w0 = (u0 + v0 * A[0] + v1 * A[2]) % p;
                                long long w1 = (u1 + v0 * A[1] + v1 * A[3]) % p;
                                for (long long z2 = 0; z2 < q; ++z2)
                                    g.op[static_cast<std::size_t>(idx(u0, u1, z1)) * g.order +
                                         idx(v0, v1, z2)] = idx(w0, w1, (z1 + z2) % q);
                            }
                    }
            g.labels.resize(g.order);
            for (long long v0 = 0; v0 < p; ++v0)
                for (long long v1 = 0; v1 < p; ++v1)
                    for (long long z = 0; z < q; ++z)
                        g.labels[idx(v0, v1, z)] =
                            detail::word_label({{"a", v0}, {"b", v1}, {"c", z}});
            break;
        }
        case K::Heisenberg: {
            const long long p = spec.p;
            g.order = static_cast<int>(p * p * p);
            g.name = name;
            g.op.resize(static_cast<std::size_t>(g.order) * g.order);
            auto idx = [&](long long x, long long y, long long z) {
                return static_cast<int>((x * p + y) * p + z);
            };
            for (long long x1 = 0; x1 < p; ++x1)
                for (long long y1 = 0; y1 < p; ++y1)
                    for (long long z1 = 0; z1 < p; ++z1)
                        for (long long x2 = 0; x2 < p; ++x2)
                            for (long long y2 = 0; y2 < p; ++y2)
                                for (long long z2 = 0; z2 < p; ++z2)
                                    g.op[static_cast<std::size_t>(idx(x1, y1, z1)) * g.order +
                                         idx(x2, y2, z2)] =
                                        idx((x1 + x2 + z1 * y2) % p, (y1 + y2) % p,
                                            (z1 + z2) % p);
            g.labels.resize(g.order);
            for (long long x = 0; x < p; ++x)
                for (long long y = 0; y < p; ++y)
                    for (long long z = 0; z < p; ++z)
                        g.labels[idx(x, y, z)] =
                            detail::word_label({{"a", x}, {"b", y}, {"c", z}});
            break;
        }
        case K::Alternating:
            g = detail::permutation_group(static_cast<int>(spec.n), true, name);
            break;
        case K::Symmetric:
            g = detail::permutation_group(static_cast<int>(spec.n), false, name);
            break;
        case K::DirectProduct: {
            GroupTable acc = construct(spec.factors[0], order_cap);
            for (std::size_t i = 1; i < spec.factors.size(); ++i)
                acc = direct_product(acc, construct(spec.factors[i], order_cap), order_cap);
            acc.spec = spec;
            acc.name = name;
            return acc;
        }
    }
    g.spec = spec;
    detail::finalize(g);
    return g;
}

// --- subgroup-level primitives ------------------------------------------

inline bool is_subgroup_set(const GroupTable& g, const Bitset& members) {
    if (!members.test(0)) return false;
    auto idx = members.to_indices();
    for (int x : idx) {
        if (!members.test(g.inv(x))) return false;
        for (int y : idx)
            if (!members.test(g.mul(x, y))) return false;
    }
    return true;
}

inline bool is_normal(const GroupTable& g, const Bitset& members) {
    if (!is_subgroup_set(g, members))
        throw Error(Errc::NotASubgroup, "membership set is not a subgroup");
    auto idx = members.to_indices();
    for (int x = 0; x < g.order; ++x) {
        int xi = g.inv(x);
        for (int s : idx)
            if (!members.test(g.mul(g.mul(x, s), xi))) return false;
    }
    return true;
}

struct QuotientResult {
    GroupTable table;
    std::vector<Bitset> coset_members; // indexed by quotient element
};

inline QuotientResult quotient(const GroupTable& g, const Bitset& normal_members) {
    if (!is_normal(g, normal_members))
        throw Error(Errc::NotNormal, "subgroup is not normal");
    const int n = g.order;
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    auto members = normal_members.to_indices();
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] != -1) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int s : members) coset_of[g.mul(x, s)] = id;
    }
    GroupTable q;
    q.order = static_cast<int>(reps.size());
    q.name = g.name + "/N" + std::to_string(normal_members.count());
    q.op.resize(static_cast<std::size_t>(q.order) * q.order);
    for (int i = 0; i < q.order; ++i)
        for (int j = 0; j < q.order; ++j)
            q.op[static_cast<std::size_t>(i) * q.order + j] = coset_of[g.mul(reps[i], reps[j])];
    q.labels.resize(q.order);
    for (int i = 0; i < q.order; ++i) q.labels[i] = g.labels[reps[i]] + "N";
    detail::finalize(q);

    QuotientResult out{std::move(q), {}};
    out.coset_members.assign(reps.size(), Bitset(n));
    for (int x = 0; x < n; ++x) out.coset_members[coset_of[x]].set(x);
    return out;
}

struct SubgroupTableResult {
    GroupTable table;
    std::vector<int> to_parent; // element index in the subgroup -> index in g
};

inline SubgroupTableResult group_from_subgroup(const GroupTable& g, const Bitset& members) {
    if (!is_subgroup_set(g, members))
        throw Error(Errc::NotASubgroup, "membership set is not a subgroup");
    auto elems = members.to_indices();
    std::vector<int> local(g.order, -1);
    for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);
    GroupTable h;
    h.order = static_cast<int>(elems.size());
    h.name = g.name + "|sub" + std::to_string(h.order);
    h.op.resize(static_cast<std::size_t>(h.order) * h.order);
    for (int i = 0; i < h.order; ++i)
        for (int j = 0; j < h.order; ++j)
            h.op[static_cast<std::size_t>(i) * h.order + j] = local[g.mul(elems[i], elems[j])];
    h.labels.resize(h.order);
    for (int i = 0; i < h.order; ++i) h.labels[i] = g.labels[elems[i]];
    detail::finalize(h);
    return {std::move(h), std::move(elems)};
}

} // namespace inclgraph
