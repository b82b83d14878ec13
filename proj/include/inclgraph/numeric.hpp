#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace inclgraph {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// prime -> exponent, keys ascending
inline std::map<long long, int> factorize(long long n) {
    std::map<long long, int> f;
    for (long long d = 2; d * d <= n; ++d)
        while (n % d == 0) { ++f[d]; n /= d; }
    if (n > 1) ++f[n];
    return f;
}

inline std::vector<long long> divisors(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

// Number of prime factors counted with multiplicity.
inline int omega_with_multiplicity(long long n) {
    int c = 0;
    for (auto& [p, e] : factorize(n)) { (void)p; c += e; }
    return c;
}

inline long long mod_pow(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

inline long long gcd_ll(long long a, long long b) {
    while (b) { long long t = a % b; a = b; b = t; }
    return a;
}

// Multiplicative order of a mod n; 0 if gcd(a, n) != 1.
inline long long multiplicative_order(long long a, long long n) {
    a %= n;
    if (a < 0) a += n;
    if (gcd_ll(a, n) != 1) return 0;
    long long x = a % n, ord = 1;
    while (x != 1 % n) {
        x = x * a % n;
        ++ord;
        if (ord > n) return 0; // unreachable for units
    }
    return ord;
}

} // namespace inclgraph
