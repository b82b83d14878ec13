#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "inclgraph/json_io.hpp"
#include "inclgraph/spec_parse.hpp"
#include "inclgraph/verify.hpp"

namespace inclgraph {

// exit codes: 0 ok, 1 internal/io, 2 parse or semantic error,
// 3 theorem/prediction mismatch, 4 resource cap
inline int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::ParseError:
        case Errc::SemanticError:
        case Errc::NonPrimeParameter:
        case Errc::DivisibilityConditionFails:
        case Errc::NoSuchExponent:
        case Errc::PrimeDoesNotDivideOrder:
            return 2;
        case Errc::OrderCapExceeded:
        case Errc::VertexLimitExceeded:
            return 4;
        default:
            return 1;
    }
}

inline int order_cap_from_env() {
    if (const char* v = std::getenv("INCL_ORDER_CAP")) {
        long cap = std::strtol(v, nullptr, 10);
        if (cap > 0) return static_cast<int>(cap);
    }
    return kDefaultOrderCap;
}

namespace cli_detail {

inline std::string optstr(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("inf");
}

inline void write_file_or_stdout(const std::string& path, const std::string& content,
                                 std::ostream& out) {
    if (path == "-" || path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::Internal, "cannot open " + path + " for writing");
    f << content;
}

} // namespace cli_detail

inline int cmd_analyze(const std::string& spec_text, bool json_out, std::ostream& out,
                       int order_cap) {
    GroupSpec spec = parse_spec(spec_text);
    auto g = construct(spec, order_cap);
    auto lat = lattice_of(g, order_cap);
    auto incl = inclusion_graph(g, lat);
    auto inter = intersection_graph(g, lat);
    auto report = analyze_graph(incl);
    auto expected = expected_profile(spec, g);
    auto deltas = expected_deltas(expected, report, incl);

    if (json_out) {
        json j;
        j["spec"] = render_spec(spec);
        j["order"] = g.order;
        j["n_subgroups"] = lat.subgroups.size();
        j["height"] = lat.height;
        j["report"] = report_to_json(report);
        j["expected"] = expected_to_json(expected);
        j["intersection_connected"] = inter.n_vertices >= 1 && n_components_of(inter) == 1;
        j["deltas"] = deltas;
        j["verdict"] = deltas.empty() ? "pass" : "fail";
        out << j.dump(2) << "\n";
    } else {
        using cli_detail::optstr;
        out << "spec:              " << render_spec(spec) << "\n";
        out << "order:             " << g.order << "\n";
        out << "subgroups:         " << lat.subgroups.size() << " (proper nontrivial "
            << lat.n_proper_nontrivial() << ")\n";
        out << "lattice height:    " << lat.height << "\n";
        out << "inclusion graph:   " << report.n_vertices << " vertices, " << report.n_edges
            << " edges\n";
        out << "shape:             " << shape_name(report.shape.kind) << "(" << report.shape.param
            << ")\n";
        out << "components:        " << report.n_components << "\n";
        out << "diameter:          " << optstr(report.diameter) << "\n";
        out << "girth:             " << optstr(report.girth) << "\n";
        out << "bipartite:         " << (report.bipartite ? "yes" : "no") << "\n";
        out << "max degree:        " << report.max_degree << "\n";
        out << "clique number:     " << report.clique_number << "\n";
        out << "chromatic number:  " << report.chromatic_number << "\n";
        out << "claw-free:         " << (report.claw_free ? "yes" : "no") << "\n";
        out << "planar:            " << (report.planar ? "yes" : "no") << "\n";
        out << "intersection:      "
            << ((inter.n_vertices >= 1 && n_components_of(inter) == 1) ? "connected"
                                                                       : "disconnected")
            << ", " << inter.n_edges() << " edges\n";
        for (auto& n : expected.notes) out << "note:              " << n << "\n";
        if (deltas.empty()) {
            out << "predictions:       all theorem predictions match\n";
        } else {
            for (auto& d : deltas) out << "MISMATCH:          " << d << "\n";
        }
    }
    return deltas.empty() ? 0 : 3;
}

inline int cmd_export(const std::string& spec_text, const std::string& format,
                      const std::string& out_path, std::ostream& out, int order_cap) {
    GroupSpec spec = parse_spec(spec_text);
    auto g = construct(spec, order_cap);
    auto lat = lattice_of(g, order_cap);
    auto incl = inclusion_graph(g, lat);
    if (format == "dot") {
        cli_detail::write_file_or_stdout(out_path, to_dot(incl, "I"), out);
    } else if (format == "json") {
        cli_detail::write_file_or_stdout(out_path, graph_to_json(incl).dump() + "\n", out);
    } else {
        throw Error(Errc::SemanticError, "unknown export format: " + format);
    }
    return 0;
}

inline int cmd_sweep(long long max_order, std::vector<std::string> theorems,
                     const std::string& out_path, std::ostream& out, int order_cap) {
    CatalogRanges ranges;
    ranges.max_order = max_order;
    if (theorems.empty()) theorems = theorem_ids();
    auto res = sweep(ranges, theorems, order_cap);
    cli_detail::write_file_or_stdout(out_path, res.jsonl, out);
    for (auto& tr : res.theorems)
        out << (tr.pass() ? "pass" : "FAIL") << "  theorem " << tr.theorem_id << "  ("
            << tr.instances_tested << " checks)\n";
    out << (res.pass ? "pass" : "FAIL") << "  sweep over " << res.instances
        << " catalog instances, " << res.instance_failures << " instance-level mismatches\n";
    return res.pass ? 0 : 3;
}

inline int cmd_isocheck(const std::string& s1, const std::string& s2, std::ostream& out,
                        int order_cap) {
    GroupSpec a = parse_spec(s1), b = parse_spec(s2);
    auto ga = construct(a, order_cap), gb = construct(b, order_cap);
    auto ia = inclusion_graph(ga, lattice_of(ga, order_cap));
    auto ib = inclusion_graph(gb, lattice_of(gb, order_cap));
    auto [iso, bij] = is_isomorphic(ia, ib);
    if (!iso) {
        out << "not isomorphic: I(" << render_spec(a) << ") [" << ia.n_vertices << " vertices, "
            << ia.n_edges() << " edges] vs I(" << render_spec(b) << ") [" << ib.n_vertices
            << " vertices, " << ib.n_edges() << " edges]\n";
        return 0;
    }
    out << "isomorphic: I(" << render_spec(a) << ") = I(" << render_spec(b) << ")\n";
    if (bij)
        for (int v = 0; v < ia.n_vertices; ++v)
            out << "  " << v << " -> " << (*bij)[v] << "   " << ia.vertex_labels[v] << " -> "
                << ib.vertex_labels[(*bij)[v]] << "\n";
    return 0;
}

inline int cmd_catalog(long long max_order, std::ostream& out) {
    CatalogRanges ranges;
    ranges.max_order = max_order;
    for (auto& e : build_catalog(ranges)) out << e.order << "\t" << e.key << "\n";
    return 0;
}

} // namespace inclgraph
