#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "inclgraph/errors.hpp"
#include "inclgraph/group_spec.hpp"

namespace inclgraph {

// Grammar:
//   spec := term ("x" term)*
//   term := "Z" int | "D" int (group order, even) | "Q8" | "M8" | "M" p "^3"
//         | "A" int | "S" int | "SD(" q "," p "," alpha "," t ")"
//         | "SDP2Q(" p "," q ")" | "G5(" p "," q "," t ")" | "G6(" p "," q ")"
//         | "Heis(" p ")"
// Direct products associate to the left.
namespace parse_detail {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return eof() ? '\0' : text[pos]; }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(Errc::ParseError,
                    why + " at position " + std::to_string(pos) + " in \"" + text + "\"");
    }

    bool try_literal(const std::string& lit) {
        if (text.compare(pos, lit.size(), lit) == 0) {
            pos += lit.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    long long integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000'000LL) fail("integer too large");
            ++pos;
        }
        return v;
    }
};

inline GroupSpec term(Cursor& c) {
    if (c.try_literal("SDP2Q(")) {
        long long p = c.integer();
        c.expect(',');
        long long q = c.integer();
        c.expect(')');
        return GroupSpec::semidirect_p2q(p, q);
    }
    if (c.try_literal("SD(")) {
        long long q = c.integer();
        c.expect(',');
        long long p = c.integer();
        c.expect(',');
        long long alpha = c.integer();
        c.expect(',');
        long long t = c.integer();
        c.expect(')');
        return GroupSpec::semidirect_qp(q, p, alpha, t);
    }
    if (c.try_literal("G5(")) {
        long long p = c.integer();
        c.expect(',');
        long long q = c.integer();
        c.expect(',');
        long long t = c.integer();
        c.expect(')');
        return GroupSpec::g5(p, q, t);
    }
    if (c.try_literal("G6(")) {
        long long p = c.integer();
        c.expect(',');
        long long q = c.integer();
        c.expect(')');
        return GroupSpec::g6(p, q);
    }
    if (c.try_literal("Heis(")) {
        long long p = c.integer();
        c.expect(')');
        return GroupSpec::heisenberg(p);
    }
    if (c.try_literal("Q8")) return GroupSpec::quaternion8();
    if (c.try_literal("Z")) return GroupSpec::cyclic(c.integer());
    if (c.try_literal("D")) {
        long long order = c.integer();
        if (order % 2 != 0)
            throw Error(Errc::SemanticError,
                        "D takes the group order, which must be even (got " +
                            std::to_string(order) + ")");
        return GroupSpec::dihedral(order / 2);
    }
    if (c.try_literal("M")) {
        long long v = c.integer();
        if (c.try_literal("^3")) return GroupSpec::modular_p3(v);
        if (v == 8) return GroupSpec::modular8();
        c.fail("after M expected 8 or p^3");
    }
    if (c.try_literal("A")) return GroupSpec::alternating(c.integer());
    if (c.try_literal("S")) return GroupSpec::symmetric(c.integer());
    c.fail("expected a group term");
}

} // namespace parse_detail

inline GroupSpec parse_spec(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
    parse_detail::Cursor c{text};
    if (c.eof()) c.fail("empty spec");
    std::vector<GroupSpec> factors{parse_detail::term(c)};
    while (!c.eof()) {
        if (!c.try_literal("x")) c.fail("expected 'x' or end of spec");
        factors.push_back(parse_detail::term(c));
    }
    GroupSpec result =
        factors.size() == 1 ? factors[0] : GroupSpec::direct_product(std::move(factors));
    validate_spec(result);
    return result;
}

} // namespace inclgraph
