#include <CLI11.hpp>

#include "inclgraph/cli.hpp"

int main(int argc, char** argv) {
    using namespace inclgraph;
    CLI::App app{"inclusion graphs of subgroup lattices: build groups, enumerate subgroups, "
                 "compute exact graph invariants, verify the classification theorems"};
    app.require_subcommand(1);

    int order_cap = order_cap_from_env();

    std::string spec_text, spec_text2, format = "dot", out_path = "-";
    bool json_out = false;
    long long max_order = 200;
    std::vector<std::string> theorems;

    auto* analyze = app.add_subcommand("analyze", "full invariant report for one group spec");
    analyze->add_option("spec", spec_text, "group spec, e.g. Z12, Q8, D8, Z4xZ2, SD(7,3,1,1)")
        ->required();
    analyze->add_flag("--json", json_out, "emit JSON instead of text");

    auto* exp = app.add_subcommand("export", "export the inclusion graph");
    exp->add_option("spec", spec_text, "group spec")->required();
    exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    exp->add_option("-o,--output", out_path, "output file, '-' for stdout");

    auto* sw = app.add_subcommand("sweep", "verify the theorems over the parametrized catalog");
    sw->add_option("--max-order", max_order, "largest group order to include");
    sw->add_option("--theorem", theorems, "theorem id (repeatable; default: all)");
    sw->add_option("-o,--output", out_path, "JSONL report path, '-' for stdout");

    auto* iso = app.add_subcommand("isocheck", "compare two inclusion graphs up to isomorphism");
    iso->add_option("spec1", spec_text, "first group spec")->required();
    iso->add_option("spec2", spec_text2, "second group spec")->required();

    auto* cat = app.add_subcommand("catalog", "list the catalog specs");
    cat->add_option("--max-order", max_order, "largest group order to include");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(spec_text, json_out, std::cout, order_cap);
        if (exp->parsed()) return cmd_export(spec_text, format, out_path, std::cout, order_cap);
        if (sw->parsed()) return cmd_sweep(max_order, theorems, out_path, std::cout, order_cap);
        if (iso->parsed()) return cmd_isocheck(spec_text, spec_text2, std::cout, order_cap);
        if (cat->parsed()) return cmd_catalog(max_order, std::cout);
    } catch (const inclgraph::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return inclgraph::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
