#include <cstdlib>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"edf-forge: vertex valuations, blow-ups and digraph-defined "
                 "external difference families in cyclic groups"};
    app.require_subcommand(1);

    // construct
    edfforge::cli::ConstructRequest creq;
    auto* construct = app.add_subcommand(
        "construct", "build a family valuation / EDF / 2-CEDF and write a verified witness");
    construct
        ->add_option("family", creq.family,
                     "path | path-edf | cycle | kpq | cyclotomic-tree | star-path | 2cycles | "
                     "ladder | sun | sun-directed | 2cedf")
        ->required();
    construct->add_option("--m", creq.m, "path/cycle length (vertices)");
    construct->add_option("--k", creq.k, "family parameter k");
    construct->add_option("--p", creq.p, "K_{p,q}: p");
    construct->add_option("--q", creq.q, "K_{p,q}: q");
    construct->add_option("--prime", creq.prime, "prime p (cyclotomic-tree, star-path)");
    std::int64_t primitive = -1;
    construct->add_option("--alpha", primitive, "primitive element override (star-path)");
    construct->add_option("--l", creq.l, "blow-up factor (default 1)");
    construct->add_flag("--oriented", creq.oriented, "oriented variant (cycle, m = 2 mod 4)");
    construct->add_flag("--clockwise", creq.clockwise, "clockwise orientation (2cycles)");
    construct->add_option("--out", creq.out, "output JSON path (default: stdout)");

    // verify
    std::string vin, vmode = "edf", vclass = "beta";
    int vc = -1;
    auto* verify = app.add_subcommand("verify", "verify a witness file");
    verify->add_option("--in", vin, "witness JSON")->required();
    verify->add_option("--mode", vmode, "edf | ccedf | valuation");
    verify->add_option("--c", vc, "shift for ccedf mode");
    verify->add_option("--class", vclass,
                       "valuation mode: beta | alpha | near-alpha | oriented-beta | "
                       "oriented-near-alpha");

    // search
    edfforge::cli::SearchRequest sreq;
    if (const char* env = std::getenv("EDF_FORGE_MAX_SEARCH")) sreq.max_vertices = std::atoi(env);
    auto* search = app.add_subcommand("search", "exhaustive valuation search (oracle)");
    search->add_option("--gen", sreq.generator,
                       "path:M | cycle:M | ucycle:M | kpq:P,Q | star:M,L | p1p1");
    search->add_option("--in", sreq.in, "witness JSON as digraph source");
    search->add_option("--trees", sreq.trees, "sweep all trees of this order for near-alpha");
    search->add_option("--class", sreq.valuation_class,
                       "beta | alpha | near-alpha | oriented-beta");
    search->add_option("--max-vertices", sreq.max_vertices,
                       "size bound (env EDF_FORGE_MAX_SEARCH)");

    // export-dot
    std::string din, dout;
    auto* exportdot = app.add_subcommand("export-dot", "render a witness as DOT");
    exportdot->add_option("--in", din, "witness JSON")->required();
    exportdot->add_option("--out", dout, "DOT output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (construct->parsed()) {
        if (primitive >= 0) creq.primitive = primitive;
        return edfforge::cli::cmd_construct(creq);
    }
    if (verify->parsed())
        return edfforge::cli::cmd_verify(
            vin, vmode, vc >= 0 ? std::optional<int>(vc) : std::nullopt, vclass);
    if (search->parsed()) return edfforge::cli::cmd_search(sreq);
    if (exportdot->parsed()) return edfforge::cli::cmd_export_dot(din, dout);
    return 1;
}
