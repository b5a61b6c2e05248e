#include "loopdeg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "loopdeg/error.hpp"
#include "loopdeg/io.hpp"
#include "loopdeg/oracle.hpp"
#include "loopdeg/realize.hpp"
#include "loopdeg/transforms.hpp"

namespace loopdeg::cli {

namespace {

using io::json;

enum class CheckMode { Eg, LoopsDouble, LoopsReduced, GaleRyser };
enum class RealizeMode { Simple, LoopsDouble, LoopsReduced };
enum class CoverKind { Tensor, Topological };

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_input(const std::string& arg, std::istream& in) {
    auto slurp = [](std::istream& s) {
        return std::string(std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>());
    };
    if (arg == "-") return slurp(in);
    std::error_code ec;
    if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream file(arg);
        if (!file) throw Error(ErrorCode::ParseError, "cannot open " + arg);
        return slurp(file);
    }
    return arg;
}

DegreeSequence read_sequence(const std::string& arg, bool sort, std::istream& in) {
    return make_sequence(io::parse_degrees(read_input(arg, in)), sort);
}

CheckReport run_check(const DegreeSequence& d, CheckMode mode) {
    switch (mode) {
        case CheckMode::Eg: return check_erdos_gallai(d);
        case CheckMode::LoopsDouble: return check_loops_double(d);
        case CheckMode::LoopsReduced: return check_loops_reduced(d);
        case CheckMode::GaleRyser: return check_gale_ryser_symmetric(d);
    }
    return {};
}

const char* bound_label(CheckMode mode) {
    switch (mode) {
        case CheckMode::Eg: return "k(k-1) + sum_{i>k} min(k,d_i), even sum";
        case CheckMode::LoopsDouble: return "k(k+1) + sum_{i>k} min(k,d_i), even sum";
        case CheckMode::LoopsReduced: return "k^2 + sum_{i>k} min(k,d_i)";
        case CheckMode::GaleRyser: return "sum_{i=1..n} min(k,d_i)";
    }
    return "";
}

struct CheckArgs {
    std::string input;
    CheckMode mode = CheckMode::LoopsReduced;
    bool sort = false;
    bool as_json = false;
};

int cmd_check(const CheckArgs& a, Streams s) {
    const DegreeSequence d = read_sequence(a.input, a.sort, s.in);
    const CheckReport r = run_check(d, a.mode);
    if (a.as_json) {
        json j = io::to_json(r);
        j["degrees"] = io::to_json(d);
        s.out << j.dump() << '\n';
    } else {
        s.out << "sequence: " << io::format_sequence(d) << '\n' << io::format_report(r, bound_label(a.mode));
    }
    return r.passed ? kPass : kFail;
}

struct RealizeArgs {
    std::string input;
    RealizeMode mode = RealizeMode::LoopsReduced;
    bool sort = false;
    bool dot = false;
    bool trace = false;
};

int cmd_realize(const RealizeArgs& a, Streams s) {
    if (a.dot && a.trace) {
        s.err << "error: --dot and --trace cannot be combined\n";
        return kInputError;
    }
    const DegreeSequence d = read_sequence(a.input, a.sort, s.in);
    const CheckMode check_mode = a.mode == RealizeMode::Simple        ? CheckMode::Eg
                                 : a.mode == RealizeMode::LoopsDouble ? CheckMode::LoopsDouble
                                                                      : CheckMode::LoopsReduced;
    const CheckReport report = run_check(d, check_mode);
    if (!report.passed) {
        s.err << "error: " << io::format_sequence(d) << " is not realizable";
        if (!report.parity_ok) s.err << " (odd degree sum)";
        if (report.first_violation) s.err << " (fails at k=" << *report.first_violation << ")";
        s.err << '\n';
        s.out << io::format_report(report, bound_label(check_mode));
        return kFail;
    }
    const Realization r = a.mode == RealizeMode::Simple ? realize_simple_traced(d)
                          : a.mode == RealizeMode::LoopsDouble ? realize_loops_double(d)
                                                               : realize_loops_reduced(d);
    if (a.dot) {
        s.out << io::to_dot(r.graph);
    } else if (a.trace) {
        s.out << json{{"graph", io::to_json(r.graph)}, {"trace", io::to_json(r.trace)}}.dump()
              << '\n';
    } else {
        s.out << io::to_json(r.graph).dump() << '\n';
    }
    return kPass;
}

struct CoverArgs {
    std::string input;
    CoverKind kind = CoverKind::Tensor;
    bool dot = false;
};

GraphWithLoops read_graph(const std::string& arg, std::istream& in) {
    return io::graph_from_json(io::parse_json(read_input(arg, in)));
}

int cmd_cover(const CoverArgs& a, Streams s) {
    const GraphWithLoops g = read_graph(a.input, s.in);
    if (a.kind == CoverKind::Tensor) {
        const BipartiteGraph b = tensor_double_cover(g);
        s.out << (a.dot ? io::to_dot(b) : io::to_json(b).dump() + "\n");
    } else {
        const LoopMultigraph m = topological_double_cover(g);
        s.out << (a.dot ? io::to_dot(m) : io::to_json(m).dump() + "\n");
    }
    return kPass;
}

struct ComplementArgs {
    std::string input;
    bool sequence = false;
    bool sort = false;
    bool dot = false;
};

int cmd_complement(const ComplementArgs& a, Streams s) {
    if (a.sequence) {
        const DegreeSequence d = read_sequence(a.input, a.sort, s.in);
        s.out << json{{"degrees", io::to_json(complement_sequence(d))}}.dump() << '\n';
        return kPass;
    }
    const GraphWithLoops c = complement_graph(read_graph(a.input, s.in));
    s.out << (a.dot ? io::to_dot(c) : io::to_json(c).dump() + "\n");
    return kPass;
}

struct OracleArgs {
    std::string input;
    Convention convention = Convention::Reduced;
    bool bipartite = false;
    bool sort = false;
    bool compare = false;
    bool scan = false;
    bool jsonl = false;
    std::size_t scan_n = 0;
    Degree d_max = 0;
    std::optional<std::size_t> max_n;
    std::optional<std::size_t> timeout_ms;
};

struct Verdict {
    bool realizable;
    json witness;  // null when absent
};

Verdict query_oracle(const DegreeSequence& d, const OracleArgs& a, const OracleBudget& budget) {
    if (a.bipartite) {
        auto r = oracle_bipartite_symmetric(d, budget);
        return {r.realizable, r.witness ? io::to_json(*r.witness) : json(nullptr)};
    }
    auto r = oracle_realizable(d, a.convention, budget);
    return {r.realizable, r.witness ? io::to_json(*r.witness) : json(nullptr)};
}

bool query_check(const DegreeSequence& d, const OracleArgs& a) {
    return a.bipartite ? check_gale_ryser_symmetric(d).passed
                       : check_loops(d, a.convention).passed;
}

int cmd_oracle(const OracleArgs& a, Streams s) {
    OracleBudget budget = OracleBudget::from_env();
    if (a.max_n) {
        budget.max_n = *a.max_n;
        budget.max_bipartite_n = *a.max_n;
    }
    if (a.timeout_ms) budget.timeout = std::chrono::milliseconds(*a.timeout_ms);
    const std::size_t cap = a.bipartite ? budget.max_bipartite_n : budget.max_n;
    const char* what = a.bipartite ? "bipartite-symmetric"
                       : a.convention == Convention::Double ? "double" : "reduced";

    if (!a.scan) {
        const DegreeSequence d = read_sequence(a.input, a.sort, s.in);
        const Verdict v = query_oracle(d, a, budget);
        json j = {{"degrees", io::to_json(d)}, {"realizable", v.realizable}};
        if (!v.witness.is_null()) j["witness"] = v.witness;
        if (a.compare) j["check"] = query_check(d, a);
        s.out << j.dump() << '\n';
        if (a.compare) return j["check"].get<bool>() == v.realizable ? kPass : kFail;
        return v.realizable ? kPass : kFail;
    }

    if (a.scan_n > cap) {
        throw Error(ErrorCode::BudgetExceeded, "scan order " + std::to_string(a.scan_n) +
                                                   " exceeds oracle cap " + std::to_string(cap));
    }
    std::size_t total = 0, realizable = 0, disagreements = 0;
    for (const DegreeSequence& d : enumerate_sequences(a.scan_n, a.d_max)) {
        const Verdict v = query_oracle(d, a, budget);
        ++total;
        if (v.realizable) ++realizable;
        const bool checked = a.compare && query_check(d, a);
        const bool agrees = !a.compare || checked == v.realizable;
        if (!agrees) {
            ++disagreements;
            s.err << "disagreement: " << io::format_sequence(d) << " oracle=" << v.realizable
                  << '\n';
        }
        if (a.jsonl) {
            json j = {{"degrees", io::to_json(d)}, {"realizable", v.realizable}};
            if (!v.witness.is_null()) j["witness"] = v.witness;
            if (a.compare) j["check"] = checked;
            s.out << j.dump() << '\n';
        }
    }
    std::ostream& summary = a.jsonl ? s.err : s.out;
    summary << "scanned " << total << " sequences (n=" << a.scan_n << ", dmax=" << a.d_max
            << ", " << what << "): " << realizable << " realizable\n";
    if (a.compare) summary << disagreements << " disagreements\n";
    return disagreements == 0 ? kPass : kFail;
}

int code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::BudgetExceeded: return kBudget;
        case ErrorCode::InfeasibleSequence: return kFail;
        case ErrorCode::InternalPatchFailure: return kFail;
        default: return kInputError;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Degree sequences of graphs with at most one loop per vertex"};
    app.require_subcommand(1);

    const std::map<std::string, CheckMode> check_modes{{"eg", CheckMode::Eg},
                                                       {"loops-double", CheckMode::LoopsDouble},
                                                       {"loops-reduced", CheckMode::LoopsReduced},
                                                       {"gale-ryser", CheckMode::GaleRyser}};
    const std::map<std::string, RealizeMode> realize_modes{
        {"simple", RealizeMode::Simple},
        {"loops-double", RealizeMode::LoopsDouble},
        {"loops-reduced", RealizeMode::LoopsReduced}};
    const std::map<std::string, CoverKind> cover_kinds{{"tensor", CoverKind::Tensor},
                                                       {"topological", CoverKind::Topological}};
    const std::map<std::string, Convention> conventions{{"double", Convention::Double},
                                                        {"reduced", Convention::Reduced}};

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Test a sequence against one inequality family");
    check->add_option("--mode", check_args.mode, "eg | loops-double | loops-reduced | gale-ryser")
        ->required()
        ->transform(CLI::CheckedTransformer(check_modes, CLI::ignore_case));
    check->add_flag("--sort", check_args.sort, "Sort the input instead of validating its order");
    check->add_flag("--json", check_args.as_json, "Emit the report as JSON");
    check->add_option("sequence", check_args.input, "Degrees, JSON file, or - for stdin");

    RealizeArgs realize_args;
    auto* realize = app.add_subcommand("realize", "Construct a graph with the given degrees");
    realize->add_option("--mode", realize_args.mode, "simple | loops-double | loops-reduced")
        ->required()
        ->transform(CLI::CheckedTransformer(realize_modes, CLI::ignore_case));
    realize->add_flag("--sort", realize_args.sort, "Sort the input instead of validating its order");
    realize->add_flag("--dot", realize_args.dot, "Emit DOT instead of JSON");
    realize->add_flag("--trace", realize_args.trace, "Include the reduction and rebuild trace");
    realize->add_option("sequence", realize_args.input, "Degrees, JSON file, or - for stdin");

    CoverArgs cover_args;
    auto* cover = app.add_subcommand("cover", "Build a double cover of a graph file");
    cover->add_option("--kind", cover_args.kind, "tensor | topological")
        ->transform(CLI::CheckedTransformer(cover_kinds, CLI::ignore_case));
    cover->add_flag("--dot", cover_args.dot, "Emit DOT instead of JSON");
    cover->add_option("graph", cover_args.input, "Graph JSON, file, or - for stdin")->required();

    ComplementArgs complement_args;
    auto* complement = app.add_subcommand(
        "complement", "Complement a graph in the complete graph-with-loops, or a sequence");
    complement->add_flag("--sequence", complement_args.sequence,
                         "Input is a degree sequence: emit (n-d_n, ..., n-d_1)");
    complement->add_flag("--sort", complement_args.sort, "Sort a sequence input");
    complement->add_flag("--dot", complement_args.dot, "Emit DOT instead of JSON");
    complement->add_option("input", complement_args.input, "Graph JSON or sequence, file, or -")
        ->required();

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Decide realizability by exhaustive search");
    oracle->add_option("--convention", oracle_args.convention, "double | reduced")
        ->transform(CLI::CheckedTransformer(conventions, CLI::ignore_case));
    oracle->add_flag("--bipartite", oracle_args.bipartite,
                     "Search bipartite graphs with part degrees (d, d)");
    oracle->add_flag("--sort", oracle_args.sort, "Sort the input instead of validating its order");
    oracle->add_flag("--compare", oracle_args.compare,
                     "Also run the inequality check; fail on disagreement");
    oracle->add_flag("--scan", oracle_args.scan, "Scan every sequence of length --n up to --dmax");
    oracle->add_flag("--jsonl", oracle_args.jsonl, "During --scan, print one JSON line per sequence");
    oracle->add_option("--n", oracle_args.scan_n, "Scan length");
    oracle->add_option("--dmax", oracle_args.d_max, "Scan degree cap")->check(CLI::NonNegativeNumber);
    oracle->add_option("--max-n", oracle_args.max_n, "Oracle order cap");
    oracle->add_option("--timeout-ms", oracle_args.timeout_ms, "Per-query time limit");
    oracle->add_option("sequence", oracle_args.input, "Degrees, JSON file, or - for stdin");

    try {
        std::vector<std::string> rest;
        if (args.size() > 1) rest.assign(args.rbegin(), args.rend() - 1);
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    Streams s{in, out, err};
    try {
        if (check->parsed()) return cmd_check(check_args, s);
        if (realize->parsed()) return cmd_realize(realize_args, s);
        if (cover->parsed()) return cmd_cover(cover_args, s);
        if (complement->parsed()) return cmd_complement(complement_args, s);
        if (oracle->parsed()) return cmd_oracle(oracle_args, s);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return code_for(e.code());
    }
    return kInputError;
}

}  // namespace loopdeg::cli
