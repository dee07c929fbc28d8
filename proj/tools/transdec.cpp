// transdec: build and verify transitive decompositions of graphs.
//
// Exit codes: 0 success/verified, 1 verification failed, 2 input error,
// 3 internal invariant violation.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "transdec/decomposition.hpp"
#include "transdec/graph.hpp"
#include "transdec/group.hpp"
#include "transdec/json_io.hpp"
#include "transdec/origami.hpp"
#include "transdec/pls.hpp"

namespace td = transdec;

namespace {

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        td::write_text(out_path, text);
}

std::string dump(const td::json& j) { return j.dump(2) + "\n"; }

void print_report(const td::VerificationReport& r, bool as_json) {
    if (as_json) {
        std::cout << dump(td::report_to_json(r));
        return;
    }
    std::cout << "partition: " << (r.is_partition ? "ok" : "invalid") << "\n"
              << "invariant (condition i): " << (r.is_invariant ? "yes" : "no") << "\n"
              << "transitive (condition ii): " << (r.is_transitive ? "yes" : "no") << "\n"
              << "max subgraph valency: " << r.max_subgraph_valency << "\n";
    if (!r.invariance_witness.empty()) std::cout << "witness: " << r.invariance_witness << "\n";
    if (!r.transitivity_witness.empty()) std::cout << "witness: " << r.transitivity_witness << "\n";
}

struct VerifyOpts {
    std::string graph, partition, group;
    bool as_json = false;
};
struct QuotientOpts {
    std::string graph, blocks, out;
};
struct LiftOpts {
    std::string graph, blocks, qpart, group, out;
    bool as_json = false;
};
struct OrigamiOpts {
    std::string format = "json", out;
    bool as_json = false;
};
struct PlsOpts {
    std::string space, graph, partition, group;
    std::string graph_out, partition_out, out;
};
struct AutOpts {
    std::string graph;
    bool as_json = false;
};
struct GenOpts {
    std::string kind, out;
    int n = 0, k = 0;
};

int run_verify(const VerifyOpts& o) {
    td::Graph g = td::graph_from_json(td::parse_file(o.graph));
    td::EdgePartition p = td::partition_from_json(td::parse_file(o.partition), g);
    td::PermGroup grp = td::group_from_json(td::parse_file(o.group));
    td::VerificationReport r = td::verify(p, grp);
    print_report(r, o.as_json);
    return r.ok() ? 0 : 1;
}

int run_quotient(const QuotientOpts& o) {
    td::Graph g = td::graph_from_json(td::parse_file(o.graph));
    td::BlockSystem b = td::blocks_from_json(td::parse_file(o.blocks));
    emit(o.out, dump(td::graph_to_json(td::quotient(g, b))));
    return 0;
}

int run_lift(const LiftOpts& o) {
    td::Graph g = td::graph_from_json(td::parse_file(o.graph));
    td::BlockSystem b = td::blocks_from_json(td::parse_file(o.blocks));
    td::Graph q = td::quotient(g, b);
    td::EdgePartition qp = td::partition_from_json(td::parse_file(o.qpart), q);
    td::PermGroup grp = td::group_from_json(td::parse_file(o.group));
    td::EdgePartition lifted = td::lift(g, b, qp, grp);
    td::VerificationReport r = td::verify(lifted, grp);
    emit(o.out, dump(td::partition_to_json(lifted)));
    print_report(r, o.as_json);
    return r.ok() ? 0 : 1;
}

int run_origami(const OrigamiOpts& o) {
    auto [coloring, report] = td::build_dodecahedron_coloring();
    emit(o.out, td::export_coloring(coloring, o.format));
    std::cerr << "verified: invariant=" << (report.is_invariant ? "yes" : "no")
              << " transitive=" << (report.is_transitive ? "yes" : "no")
              << " valency=" << report.max_subgraph_valency << "\n";
    return 0;
}

int run_pls_to_decomp(const PlsOpts& o) {
    td::PartialLinearSpace s = td::space_from_json(td::parse_file(o.space));
    auto check = td::is_partial_linear_space(s.points, s.lines);
    if (!check.ok) throw td::input_error("invalid partial linear space: " + check.witness);
    auto [g, p] = td::to_decomposition(s);
    emit(o.graph_out, dump(td::graph_to_json(g)));
    emit(o.partition_out, dump(td::partition_to_json(p)));
    return 0;
}

int run_pls_from_decomp(const PlsOpts& o) {
    td::Graph g = td::graph_from_json(td::parse_file(o.graph));
    td::EdgePartition p = td::partition_from_json(td::parse_file(o.partition), g);
    td::PermGroup grp = td::group_from_json(td::parse_file(o.group));
    td::PartialLinearSpace s = td::from_decomposition(g, p, grp);
    emit(o.out, dump(td::space_to_json(s)));
    return 0;
}

int run_aut(const AutOpts& o) {
    td::Graph g = td::graph_from_json(td::parse_file(o.graph));
    td::PermGroup grp = td::automorphism_group(g);
    if (o.as_json) {
        td::json j = td::group_to_json(grp);
        j["order"] = grp.order();
        std::cout << dump(j);
    } else {
        std::cout << "order: " << grp.order() << "\n" << dump(td::group_to_json(grp));
    }
    return 0;
}

int run_gen(const GenOpts& o) {
    if (o.kind == "complete") {
        emit(o.out, dump(td::graph_to_json(td::complete_graph(o.n))));
    } else if (o.kind == "gp") {
        emit(o.out, dump(td::graph_to_json(td::generalized_petersen(o.n, o.k))));
    } else if (o.kind == "kneser-petersen") {
        emit(o.out, dump(td::graph_to_json(td::kneser_petersen())));
    } else if (o.kind == "antipodal-blocks") {
        emit(o.out, dump(td::blocks_to_json(td::antipodal_blocks_gp10_2())));
    } else if (o.kind == "qa-partition") {
        emit(o.out, dump(td::partition_to_json(td::petersen_Qa_partition())));
    } else {
        throw td::input_error("unknown object kind '" + o.kind + "'");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transitive graph decompositions: quotients, lifts, verification"};
    app.require_subcommand(1);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "check conditions (i)/(ii) for a decomposition");
    verify->add_option("--graph", vo.graph, "graph JSON file")->required();
    verify->add_option("--partition", vo.partition, "edge partition JSON file")->required();
    verify->add_option("--group", vo.group, "group JSON file")->required();
    verify->add_flag("--json", vo.as_json, "machine-readable report");

    QuotientOpts qo;
    auto* quot = app.add_subcommand("quotient", "imprimitive quotient by a block system");
    quot->add_option("--graph", qo.graph)->required();
    quot->add_option("--blocks", qo.blocks)->required();
    quot->add_option("-o,--output", qo.out, "output file (default stdout)");

    LiftOpts lo;
    auto* lift = app.add_subcommand("lift", "lift a quotient decomposition to the graph");
    lift->add_option("--graph", lo.graph)->required();
    lift->add_option("--blocks", lo.blocks)->required();
    lift->add_option("--quotient-partition", lo.qpart)->required();
    lift->add_option("--group", lo.group)->required();
    lift->add_option("-o,--output", lo.out);
    lift->add_flag("--json", lo.as_json);

    OrigamiOpts oo;
    auto* origami = app.add_subcommand("origami", "dodecahedron 5-colouring pipeline");
    origami->add_option("--format", oo.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    origami->add_option("-o,--output", oo.out);

    PlsOpts po;
    auto* pls = app.add_subcommand("pls", "partial linear space conversions");
    pls->require_subcommand(1);
    auto* to_decomp = pls->add_subcommand("to-decomp", "space -> graph + partition");
    to_decomp->add_option("--space", po.space)->required();
    to_decomp->add_option("--graph-out", po.graph_out);
    to_decomp->add_option("--partition-out", po.partition_out);
    auto* from_decomp = pls->add_subcommand("from-decomp", "graph + partition + group -> space");
    from_decomp->add_option("--graph", po.graph)->required();
    from_decomp->add_option("--partition", po.partition)->required();
    from_decomp->add_option("--group", po.group)->required();
    from_decomp->add_option("-o,--output", po.out);

    AutOpts ao;
    auto* aut = app.add_subcommand("aut", "automorphism group of a graph");
    aut->add_option("--graph", ao.graph)->required();
    aut->add_flag("--json", ao.as_json);

    GenOpts go;
    auto* gen = app.add_subcommand("gen", "write built-in objects as JSON");
    gen->add_option("kind", go.kind,
                    "complete | gp | kneser-petersen | antipodal-blocks | qa-partition")
        ->required();
    gen->add_option("--n", go.n);
    gen->add_option("--k", go.k);
    gen->add_option("-o,--output", go.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return run_verify(vo);
        if (*quot) return run_quotient(qo);
        if (*lift) return run_lift(lo);
        if (*origami) return run_origami(oo);
        if (*to_decomp) return run_pls_to_decomp(po);
        if (*from_decomp) return run_pls_from_decomp(po);
        if (*aut) return run_aut(ao);
        if (*gen) return run_gen(go);
    } catch (const td::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
