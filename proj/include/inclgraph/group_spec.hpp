#pragma once

#include <string>
#include <vector>

#include "inclgraph/errors.hpp"
#include "inclgraph/numeric.hpp"

namespace inclgraph {

// Constructible group families. Parameter slots by kind:
//   Cyclic          n            Z_n
//   DirectProduct   factors      left-associative product
//   Dihedral        n            order 2n, <a,b | a^n = b^2 = 1, ab = ba^-1>
//   Quaternion8     -            <a,b | a^4 = b^4 = 1, a^2 = b^2, ab = ba^-1>
//   Modular8        -            <a,b | a^4 = b^2 = 1, ab = ba^-1>, labeled M8
//   ModularP3       p (odd)      <a,b | a^(p^2) = b^p = 1, bab^-1 = a^(1+p)>
//   SemidirectQP    q,p,alpha,t  Z_q x| Z_{p^alpha}, action of order p^t
//   SemidirectP2Q   p,q          Z_{p^2} x| Z_q, action of order q
//   G5              p,q,t        <a,b,c | a^p=b^p=c^q=1, ab=ba, cac^-1=a^i, cbc^-1=b^(i^t)>
//   G6              p,q          (Z_p x Z_p) x| Z_q via an order-q matrix in GL2(p)
//   Heisenberg      p            <a,b,c | a^p=b^p=c^p=1, ab=ba, ac=ca, cbc^-1=ab>
//   Alternating     n (<=5)
//   Symmetric       n (<=4)
struct GroupSpec {
    enum class Kind {
        Cyclic, DirectProduct, Dihedral, Quaternion8, Modular8, ModularP3,
        SemidirectQP, SemidirectP2Q, G5, G6, Heisenberg, Alternating, Symmetric,
    };

    Kind kind = Kind::Cyclic;
    long long n = 0, p = 0, q = 0, alpha = 0, t = 0;
    std::vector<GroupSpec> factors;

    static GroupSpec cyclic(long long n) { GroupSpec s; s.kind = Kind::Cyclic; s.n = n; return s; }
    static GroupSpec dihedral(long long n) { GroupSpec s; s.kind = Kind::Dihedral; s.n = n; return s; }
    static GroupSpec quaternion8() { GroupSpec s; s.kind = Kind::Quaternion8; return s; }
    static GroupSpec modular8() { GroupSpec s; s.kind = Kind::Modular8; return s; }
    static GroupSpec modular_p3(long long p) { GroupSpec s; s.kind = Kind::ModularP3; s.p = p; return s; }
    static GroupSpec semidirect_qp(long long q, long long p, long long alpha, long long t) {
        GroupSpec s; s.kind = Kind::SemidirectQP; s.q = q; s.p = p; s.alpha = alpha; s.t = t; return s;
    }
    static GroupSpec semidirect_p2q(long long p, long long q) {
        GroupSpec s; s.kind = Kind::SemidirectP2Q; s.p = p; s.q = q; return s;
    }
    static GroupSpec g5(long long p, long long q, long long t) {
        GroupSpec s; s.kind = Kind::G5; s.p = p; s.q = q; s.t = t; return s;
    }
    static GroupSpec g6(long long p, long long q) { GroupSpec s; s.kind = Kind::G6; s.p = p; s.q = q; return s; }
    static GroupSpec heisenberg(long long p) { GroupSpec s; s.kind = Kind::Heisenberg; s.p = p; return s; }
    static GroupSpec alternating(long long n) { GroupSpec s; s.kind = Kind::Alternating; s.n = n; return s; }
    static GroupSpec symmetric(long long n) { GroupSpec s; s.kind = Kind::Symmetric; s.n = n; return s; }
    static GroupSpec direct_product(std::vector<GroupSpec> fs) {
        GroupSpec s; s.kind = Kind::DirectProduct; s.factors = std::move(fs); return s;
    }

    bool operator==(const GroupSpec& o) const {
        return kind == o.kind && n == o.n && p == o.p && q == o.q &&
               alpha == o.alpha && t == o.t && factors == o.factors;
    }
};

inline long long factorial(long long n) {
    long long r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline long long spec_order(const GroupSpec& s) {
    using K = GroupSpec::Kind;
    switch (s.kind) {
        case K::Cyclic: return s.n;
        case K::Dihedral: return 2 * s.n;
        case K::Quaternion8:
        case K::Modular8: return 8;
        case K::ModularP3: return s.p * s.p * s.p;
        case K::SemidirectQP: {
            long long o = s.q;
            for (long long i = 0; i < s.alpha; ++i) o *= s.p;
            return o;
        }
        case K::SemidirectP2Q: return s.p * s.p * s.q;
        case K::G5:
        case K::G6: return s.p * s.p * s.q;
        case K::Heisenberg: return s.p * s.p * s.p;
        case K::Alternating: return s.n <= 1 ? 1 : factorial(s.n) / 2;
        case K::Symmetric: return factorial(s.n);
        case K::DirectProduct: {
            long long o = 1;
            for (auto& f : s.factors) o *= spec_order(f);
            return o;
        }
    }
    return 0;
}

namespace detail {
inline void require_prime(long long v, const std::string& name) {
    if (!is_prime(v))
        throw Error(Errc::NonPrimeParameter, name + " = " + std::to_string(v) + " is not prime");
}
} // namespace detail

// Structural validation of parameters; order-cap enforcement happens at
// construction time.
inline void validate_spec(const GroupSpec& s) {
    using K = GroupSpec::Kind;
    switch (s.kind) {
        case K::Cyclic:
            if (s.n < 1) throw Error(Errc::SemanticError, "Z_n requires n >= 1");
            break;
        case K::Dihedral:
            if (s.n < 1) throw Error(Errc::SemanticError, "dihedral parameter must be >= 1");
            break;
        case K::Quaternion8:
        case K::Modular8:
            break;
        case K::ModularP3:
            detail::require_prime(s.p, "p");
            if (s.p == 2)
                throw Error(Errc::SemanticError, "M_{p^3} requires an odd prime (use M8 for order 8)");
            break;
        case K::SemidirectQP: {
            detail::require_prime(s.q, "q");
            detail::require_prime(s.p, "p");
            if (s.p == s.q) throw Error(Errc::SemanticError, "SD(q,p,...) requires distinct primes");
            if (s.alpha < 1) throw Error(Errc::SemanticError, "SD(q,p,alpha,t) requires alpha >= 1");
            if (s.t < 1)
                throw Error(Errc::DivisibilityConditionFails,
                            "SD(q,p,alpha,t) requires t >= 1 (an order-1 action is a direct product)");
            if (s.t > s.alpha)
                throw Error(Errc::DivisibilityConditionFails, "SD(q,p,alpha,t) requires t <= alpha");
            long long pt = 1;
            for (long long i = 0; i < s.t; ++i) pt *= s.p;
            if ((s.q - 1) % pt != 0)
                throw Error(Errc::DivisibilityConditionFails,
                            std::to_string(s.p) + "^" + std::to_string(s.t) + " = " + std::to_string(pt) +
                            " does not divide q-1 = " + std::to_string(s.q - 1));
            break;
        }
        case K::SemidirectP2Q:
            detail::require_prime(s.p, "p");
            detail::require_prime(s.q, "q");
            if (s.p == s.q) throw Error(Errc::SemanticError, "SDP2Q(p,q) requires distinct primes");
            if ((s.p - 1) % s.q != 0)
                throw Error(Errc::DivisibilityConditionFails,
                            "q = " + std::to_string(s.q) + " does not divide p-1 = " + std::to_string(s.p - 1));
            break;
        case K::G5:
            detail::require_prime(s.p, "p");
            detail::require_prime(s.q, "q");
            if (s.p == s.q) throw Error(Errc::SemanticError, "G5(p,q,t) requires distinct primes");
            if ((s.p - 1) % s.q != 0)
                throw Error(Errc::DivisibilityConditionFails,
                            "q = " + std::to_string(s.q) + " does not divide p-1 = " + std::to_string(s.p - 1));
            if (s.t < 0 || s.t >= s.q)
                throw Error(Errc::SemanticError, "G5(p,q,t) requires 0 <= t < q");
            break;
        case K::G6:
            detail::require_prime(s.p, "p");
            detail::require_prime(s.q, "q");
            if (s.p == s.q) throw Error(Errc::SemanticError, "G6(p,q) requires distinct primes");
            break;
        case K::Heisenberg:
            detail::require_prime(s.p, "p");
            break;
        case K::Alternating:
            if (s.n < 1 || s.n > 5) throw Error(Errc::SemanticError, "A_n supported for 1 <= n <= 5");
            break;
        case K::Symmetric:
            if (s.n < 1 || s.n > 4) throw Error(Errc::SemanticError, "S_n supported for 1 <= n <= 4");
            break;
        case K::DirectProduct:
            if (s.factors.empty()) throw Error(Errc::SemanticError, "empty direct product");
            for (auto& f : s.factors) validate_spec(f);
            break;
    }
}

inline std::string render_spec(const GroupSpec& s) {
    using K = GroupSpec::Kind;
    switch (s.kind) {
        case K::Cyclic: return "Z" + std::to_string(s.n);
        case K::Dihedral: return "D" + std::to_string(2 * s.n);
        case K::Quaternion8: return "Q8";
        case K::Modular8: return "M8";
        case K::ModularP3: return "M" + std::to_string(s.p) + "^3";
        case K::SemidirectQP:
            return "SD(" + std::to_string(s.q) + "," + std::to_string(s.p) + "," +
                   std::to_string(s.alpha) + "," + std::to_string(s.t) + ")";
        case K::SemidirectP2Q:
            return "SDP2Q(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
        case K::G5:
            return "G5(" + std::to_string(s.p) + "," + std::to_string(s.q) + "," + std::to_string(s.t) + ")";
        case K::G6: return "G6(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
        case K::Heisenberg: return "Heis(" + std::to_string(s.p) + ")";
        case K::Alternating: return "A" + std::to_string(s.n);
        case K::Symmetric: return "S" + std::to_string(s.n);
        case K::DirectProduct: {
            std::string out;
            for (std::size_t i = 0; i < s.factors.size(); ++i) {
                if (i) out += "x";
                out += render_spec(s.factors[i]);
            }
            return out;
        }
    }
    return "?";
}

} // namespace inclgraph
