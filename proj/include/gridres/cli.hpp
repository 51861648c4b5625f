// Command-line front end: verify, construct, solve, predict, table, and
// conjecture subcommands with text/JSON/CSV reports. run_cli is in-process
// so the whole surface is testable without spawning binaries.
//
// Exit codes: 0 pass/success, 1 verification fail, 2 nonexistent,
// 3 budget exceeded, 64 usage or input error.
#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gridres/bounds.hpp"
#include "gridres/construct.hpp"
#include "gridres/grid.hpp"
#include "gridres/json_io.hpp"
#include "gridres/solver.hpp"
#include "gridres/verify.hpp"
#include "gridres/vertex_set.hpp"

namespace gridres {
namespace detail_cli {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

inline std::string trim(const std::string& s) {
    const auto sp = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; };
    std::size_t b = 0, e = s.size();
    while (b < e && sp(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && sp(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline void check_member(const GridDims& g, const Vertex& v, int line) {
    if (!g.in_bounds(v)) {
        std::string where = line > 0 ? " (line " + std::to_string(line) + ")" : "";
        throw GridMismatchError("vertex " + format_vertex(v) + " is out of bounds for grid " +
                                format_grid(g) + where);
    }
}

// Set input: either "@path" with one "(x,y,z)" per line and '#' comments,
// or an inline semicolon-separated literal.
inline VertexSet parse_set_spec(const GridDims& g, const std::string& spec) {
    VertexSet s(g);
    if (!spec.empty() && spec[0] == '@') {
        const std::string path = spec.substr(1);
        std::ifstream in(path);
        if (!in) throw DomainError("cannot open set file '" + path + "'");
        std::string raw;
        int line = 0;
        while (std::getline(in, raw)) {
            ++line;
            const std::string body = trim(raw.substr(0, raw.find('#')));
            if (body.empty()) continue;
            std::size_t pos = 0;
            Vertex v = parse_vertex_at(body, pos, line, 1);
            while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
            if (pos != body.size())
                throw ParseError("trailing characters after vertex", line,
                                 static_cast<int>(pos) + 1);
            check_member(g, v, line);
            s.insert(v);
        }
        return s;
    }
    std::size_t pos = 0;
    while (true) {
        Vertex v = parse_vertex_at(spec, pos, 1, 1);
        check_member(g, v, 0);
        s.insert(v);
        while (pos < spec.size() && (spec[pos] == ' ' || spec[pos] == '\t')) ++pos;
        if (pos == spec.size()) break;
        if (spec[pos] != ';')
            throw ParseError("expected ';' between vertices", 1, static_cast<int>(pos) + 1);
        ++pos;
        while (pos < spec.size() && (spec[pos] == ' ' || spec[pos] == '\t')) ++pos;
        if (pos == spec.size()) break;  // trailing separator
    }
    return s;
}

inline std::string set_literal(const VertexSet& s) {
    std::string r;
    for (const Vertex& v : s.vertices()) {
        if (!r.empty()) r += ';';
        r += format_vertex(v);
    }
    return r;
}

struct GridArg {
    GridDims grid;
    std::optional<std::string> normalized_from;
};

inline GridArg parse_grid_arg(const std::string& text) {
    GridArg a{parse_grid(text), std::nullopt};
    if (format_grid(a.grid) != text) a.normalized_from = text;
    return a;
}

inline std::optional<Index> env_table_cap() {
    const char* v = std::getenv("GRIDRES_TABLE_CAP");
    if (!v) return std::nullopt;
    const std::string s(v);
    if (s.empty() ||
        !std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
        throw DomainError("GRIDRES_TABLE_CAP must be a positive integer, got '" + s + "'");
    const long long cap = std::stoll(s);
    if (cap < 1) throw DomainError("GRIDRES_TABLE_CAP must be a positive integer");
    return static_cast<Index>(cap);
}

// "a..b" or a single "a", over tolerated-failure counts.
inline std::pair<int, int> parse_k_range(const std::string& text) {
    const auto dots = text.find("..");
    const auto to_int = [&](const std::string& tok) {
        if (tok.empty() ||
            !std::all_of(tok.begin(), tok.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
            throw DomainError("k range must look like 2 or 1..6, got '" + text + "'");
        return static_cast<int>(std::stol(tok));
    };
    int lo, hi;
    if (dots == std::string::npos) {
        lo = hi = to_int(text);
    } else {
        lo = to_int(text.substr(0, dots));
        hi = to_int(text.substr(dots + 2));
    }
    if (lo < 1 || hi < lo) throw DomainError("k range must satisfy 1 <= lo <= hi");
    return {lo, hi};
}

struct OutputPrefs {
    std::string format = "text";
    std::optional<unsigned> seed;
};

inline int cmd_verify(const GridArg& ga, const std::string& set_spec, int k,
                      const OutputPrefs& prefs, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const GridDims& g = ga.grid;
    const VertexSet s = parse_set_spec(g, set_spec);
    const VerifyReport report = resolving_strength(g, s);
    const bool pass = report.strength >= k;

    if (prefs.format == "json") {
        Json result = verify_json(report);
        result["k"] = k;
        result["pass"] = pass;
        out << report_envelope("verify", g,
                               Json{{"set", set_spec}, {"k", k}}, std::move(result),
                               ms_since(t0), prefs.seed, ga.normalized_from)
                   .dump(2)
            << '\n';
    } else {
        out << "grid: " << format_grid(g) << '\n'
            << "set size: " << s.size() << '\n'
            << "strength: " << report.strength << '\n'
            << "k: " << k << '\n'
            << "result: " << (pass ? "PASS" : "FAIL") << '\n'
            << "witness: " << format_vertex(report.witness.u) << " vs "
            << format_vertex(report.witness.v) << " resolved by " << report.witness.count
            << '\n';
    }
    return pass ? 0 : 1;
}

inline int cmd_construct(const GridArg& ga, const std::string& name, int k, int h, int h_prime,
                         int i, int j, bool force_verify, const OutputPrefs& prefs,
                         std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const GridDims& g = ga.grid;
    Certificate cert = [&] {
        if (name == "corner-basis") return corner_basis(g, kDefaultVerifyCap, force_verify);
        if (name == "four-point")
            return four_point_set(g, h, h_prime, i, j, kDefaultVerifyCap, force_verify);
        if (name == "odd-k") return odd_k_construction(g, k, kDefaultVerifyCap, force_verify);
        if (name == "even-k") return even_k_construction(g, k, kDefaultVerifyCap, force_verify);
        if (name == "face") return face_construction(g, k, kDefaultVerifyCap, force_verify);
        throw DomainError("unknown construction '" + name + "'");
    }();

    if (prefs.format == "json") {
        out << report_envelope("construct", g, Json{{"name", name}, {"k", k}},
                               certificate_json(cert), ms_since(t0), prefs.seed,
                               ga.normalized_from)
                   .dump(2)
            << '\n';
    } else {
        out << "construction: " << cert.name << '\n'
            << "grid: " << format_grid(g) << '\n'
            << "claimed level: " << cert.claimed_k << '\n'
            << "size: " << cert.set.size() << '\n'
            << "set: " << set_literal(cert.set) << '\n';
        if (cert.verified_flag)
            out << "verified strength: " << cert.verified->strength << '\n';
        else
            out << "verified: no (grid above the verification cap; pass "
                   "--verify-constructions to force)\n";
    }
    return 0;
}

inline int solve_exit_code(const SolveResult& res) {
    switch (res.status) {
        case SolveStatus::Optimal: return 0;
        case SolveStatus::Nonexistent: return 2;
        case SolveStatus::BudgetExceeded: return 3;
    }
    return 64;
}

inline void solve_text(const SolveResult& res, std::ostream& out) {
    out << "grid: " << format_grid(res.grid) << '\n'
        << "k: " << res.k << '\n'
        << "mode: " << solve_mode_name(res.mode) << '\n'
        << "status: " << solve_status_name(res.status) << '\n';
    if (res.size) out << "size: " << *res.size << '\n';
    if (res.set) out << "set: " << set_literal(*res.set) << '\n';
    out << "proven floor: " << res.proof_size_floor << '\n'
        << "nodes: " << res.nodes_explored << '\n'
        << "elapsed_ms: " << res.elapsed_ms << '\n';
}

inline int cmd_solve(const GridArg& ga, int k, const SolveOptions& opts,
                     const OutputPrefs& prefs, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const SolveResult res = solve(ga.grid, k, opts);
    if (prefs.format == "json") {
        out << report_envelope("solve", ga.grid,
                               Json{{"k", k}, {"mode", solve_mode_name(opts.mode)}},
                               solve_json(res), ms_since(t0), prefs.seed, ga.normalized_from)
                   .dump(2)
            << '\n';
    } else {
        solve_text(res, out);
    }
    return solve_exit_code(res);
}

inline int cmd_predict(const GridArg& ga, int k, const OutputPrefs& prefs, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const DimPrediction p = predict_dim(ga.grid, k);
    if (prefs.format == "json") {
        out << report_envelope("predict", ga.grid, Json{{"k", k}}, prediction_json(ga.grid, p),
                               ms_since(t0), prefs.seed, ga.normalized_from)
                   .dump(2)
            << '\n';
    } else {
        out << "grid: " << format_grid(ga.grid) << '\n'
            << "k (tolerated failures): " << k << '\n'
            << "regime: " << regime_name(p.regime) << '\n'
            << "status: " << predict_status_name(p.status) << '\n';
        if (p.value) out << "value: " << *p.value << '\n';
        if (p.regime == Regime::Gap)
            out << "conjectured: " << conjecture_value(ga.grid, k) << '\n';
        out << "detail: " << p.provenance << '\n';
        if (p.note) out << "note: " << *p.note << '\n';
    }
    return p.status == PredictStatus::Nonexistent ? 2 : 0;
}

struct TableRow {
    std::string grid;
    int k = 0;
    std::string regime;
    std::string predicted_status;
    std::optional<Index> predicted_value;
    std::string exact_status;
    std::optional<Index> exact_size;
    std::string agree;  // "yes", "no", or "" when exact search did not finish
    double elapsed_ms = 0;
};

inline TableRow make_table_row(const GridDims& g, int k, const SolveOptions& base_opts) {
    const auto t0 = std::chrono::steady_clock::now();
    TableRow row;
    row.grid = format_grid(g);
    row.k = k;
    const DimPrediction p = predict_dim(g, k);
    row.regime = regime_name(p.regime);
    row.predicted_status = predict_status_name(p.status);
    row.predicted_value = p.value;

    SolveOptions opts = base_opts;
    opts.mode = SolveMode::Exact;
    const SolveResult res = min_k_resolving(g, k + 1, opts);
    row.exact_status = solve_status_name(res.status);
    if (res.status == SolveStatus::Optimal) {
        row.exact_size = res.size;
        switch (p.status) {
            case PredictStatus::Exact:
                row.agree = (*res.size == *p.value) ? "yes" : "no";
                break;
            case PredictStatus::UpperBoundOnly:
                row.agree = (*res.size <= *p.value) ? "yes" : "no";
                break;
            case PredictStatus::Nonexistent:
                row.agree = "no";
                break;
        }
    } else if (res.status == SolveStatus::Nonexistent) {
        row.agree = (p.status == PredictStatus::Nonexistent) ? "yes" : "no";
    }
    row.elapsed_ms = ms_since(t0);
    return row;
}

inline void table_csv_header(std::ostream& out) {
    out << "grid,k,regime,predicted_status,predicted_value,exact_status,exact_size,agree,"
           "elapsed_ms\n";
}

inline void table_csv_row(const TableRow& r, std::ostream& out) {
    out << r.grid << ',' << r.k << ',' << r.regime << ',' << r.predicted_status << ',';
    if (r.predicted_value) out << *r.predicted_value;
    out << ',' << r.exact_status << ',';
    if (r.exact_size) out << *r.exact_size;
    out << ',' << r.agree << ',' << r.elapsed_ms << '\n';
}

inline Json table_row_json(const TableRow& r) {
    Json j{{"grid", r.grid},
           {"k", r.k},
           {"regime", r.regime},
           {"predicted_status", r.predicted_status},
           {"predicted_value", r.predicted_value ? Json(*r.predicted_value) : Json(nullptr)},
           {"predicted_provenance", "theorem"},
           {"exact_status", r.exact_status},
           {"exact_size", r.exact_size ? Json(*r.exact_size) : Json(nullptr)},
           {"exact_provenance", "exact-search"},
           {"agree", r.agree},
           {"elapsed_ms", r.elapsed_ms}};
    return j;
}

inline int cmd_table(const std::string& grids_csv, const std::string& k_range,
                     const SolveOptions& base_opts, const OutputPrefs& prefs,
                     std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<GridArg> grids;
    std::size_t pos = 0;
    while (pos <= grids_csv.size()) {
        const auto comma = grids_csv.find(',', pos);
        const std::string tok =
            trim(grids_csv.substr(pos, comma == std::string::npos ? comma : comma - pos));
        if (!tok.empty()) grids.push_back(parse_grid_arg(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (grids.empty()) throw DomainError("--grids needs at least one grid literal");
    const auto [klo, khi] = parse_k_range(k_range);

    std::vector<TableRow> rows;
    for (const GridArg& ga : grids) {
        require_rank3(ga.grid, "theorem table");
        for (int k = klo; k <= khi; ++k) rows.push_back(make_table_row(ga.grid, k, base_opts));
    }

    if (prefs.format == "json") {
        Json arr = Json::array();
        for (const TableRow& r : rows) arr.push_back(table_row_json(r));
        Json j{{"command", "table"},
               {"inputs", Json{{"grids", grids_csv}, {"k", k_range}}},
               {"rows", std::move(arr)},
               {"elapsed_ms", ms_since(t0)}};
        if (prefs.seed) j["seed"] = *prefs.seed;
        out << j.dump(2) << '\n';
    } else {
        table_csv_header(out);
        for (const TableRow& r : rows) table_csv_row(r, out);
    }
    return 0;
}

inline int cmd_conjecture(const GridArg& ga, const SolveOptions& base_opts,
                          const OutputPrefs& prefs, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const GridDims& g = ga.grid;
    require_rank3(g, "conjecture exploration");
    const int am = alpha_m(g), aM = alpha_M(g);

    struct Row {
        int k;
        std::string exact_status;
        std::optional<Index> exact_size;
        Index conjectured;
        std::optional<Index> delta;
        std::string agree;
    };
    std::vector<Row> rows;
    for (int k = am; k < aM; ++k) {
        Row row;
        row.k = k;
        row.conjectured = conjecture_value(g, k);
        SolveOptions opts = base_opts;
        opts.mode = SolveMode::Exact;
        const SolveResult res = min_k_resolving(g, k + 1, opts);
        row.exact_status = solve_status_name(res.status);
        if (res.status == SolveStatus::Optimal) {
            row.exact_size = res.size;
            row.delta = *res.size - row.conjectured;
            row.agree = (*row.delta == 0) ? "yes" : "no";
        }
        rows.push_back(row);
    }

    if (prefs.format == "json") {
        Json arr = Json::array();
        for (const Row& r : rows)
            arr.push_back(
                Json{{"k", r.k},
                     {"exact_status", r.exact_status},
                     {"exact_size", r.exact_size ? Json(*r.exact_size) : Json(nullptr)},
                     {"exact_provenance", "exact-search"},
                     {"conjectured", r.conjectured},
                     {"conjecture_provenance", "conjecture"},
                     {"delta", r.delta ? Json(*r.delta) : Json(nullptr)},
                     {"agree", r.agree}});
        Json j{{"command", "conjecture"},
               {"grid", format_grid(g)},
               {"alpha_m", am},
               {"alpha_M", aM},
               {"rows", std::move(arr)},
               {"elapsed_ms", ms_since(t0)}};
        if (ga.normalized_from) j["normalized_from"] = *ga.normalized_from;
        if (prefs.seed) j["seed"] = *prefs.seed;
        out << j.dump(2) << '\n';
    } else if (prefs.format == "csv") {
        out << "k,exact_status,exact_size,conjectured,delta,agree\n";
        for (const Row& r : rows) {
            out << r.k << ',' << r.exact_status << ',';
            if (r.exact_size) out << *r.exact_size;
            out << ',' << r.conjectured << ',';
            if (r.delta) out << *r.delta;
            out << ',' << r.agree << '\n';
        }
    } else {
        out << "grid: " << format_grid(g) << '\n'
            << "gap regime: alpha_m = " << am << ", alpha_M = " << aM << '\n';
        if (rows.empty()) out << "gap regime is empty for this grid\n";
        for (const Row& r : rows) {
            out << "k=" << r.k << ": conjectured " << r.conjectured << ", exact ";
            if (r.exact_size)
                out << *r.exact_size << " (" << (r.agree == "yes" ? "agrees" : "disagrees")
                    << ")";
            else
                out << r.exact_status;
            out << '\n';
        }
    }
    return 0;
}

}  // namespace detail_cli

// args: command-line tokens after the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    using namespace detail_cli;

    CLI::App app{"exact toolkit for resolving sets and k-resolving sets in grid graphs"};
    app.name("gridres");
    app.require_subcommand(1);
    app.fallthrough();  // global flags like --seed may follow the subcommand

    std::optional<unsigned> seed;
    app.add_option("--seed", seed,
                   "seed echoed into reports for reproducible downstream runs");

    std::string grid_lit, set_spec, format = "text";
    int k_level = 1;

    auto* verify = app.add_subcommand(
        "verify", "compute the resolving strength of a set and compare it to k");
    verify->add_option("--grid", grid_lit, "grid literal like 2x3x4")->required();
    verify->add_option("--set", set_spec, "inline \"(x,y,z);(...)\" literal or @file")
        ->required();
    verify->add_option("--k", k_level, "required resolvers per vertex pair (default 1)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string cons_name;
    int cons_k = 1, fp_h = 0, fp_hp = 1, fp_i = 0, fp_j = 0;
    bool force_verify = false;
    auto* construct =
        app.add_subcommand("construct", "emit a certified resolving-set construction");
    construct->set_help_flag("--help", "print this help and exit");
    construct->add_option("name", cons_name,
                          "one of corner-basis, four-point, odd-k, even-k, face")
        ->required()
        ->check(CLI::IsMember({"corner-basis", "four-point", "odd-k", "even-k", "face"}));
    construct->add_option("--grid", grid_lit, "grid literal")->required();
    construct->add_option("--k", cons_k,
                          "tolerated failures for odd-k/even-k/face (level is k+1)");
    construct->add_option("--h", fp_h, "four-point: first layer (default 0)");
    construct->add_option("--hprime", fp_hp, "four-point: second layer (default 1)");
    construct->add_option("--i", fp_i, "four-point: free x1 coordinate (default 0)");
    construct->add_option("--j", fp_j, "four-point: free x2 coordinate (default 0)");
    construct->add_flag("--verify-constructions", force_verify,
                        "verify even above the automatic cap");
    construct->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string mode_str = "exact";
    std::optional<double> time_budget;
    std::optional<Index> max_size, start_size;
    int threads = 1;
    bool force_oracle = false;
    auto* solve_cmd = app.add_subcommand(
        "solve", "exact minimum k-resolving set (k = required resolvers per pair)");
    solve_cmd->add_option("--grid", grid_lit, "grid literal")->required();
    solve_cmd->add_option("--k", k_level, "required resolvers per vertex pair")
        ->required()
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--mode", mode_str, "exact, oracle, or greedy (default exact)")
        ->check(CLI::IsMember({"exact", "oracle", "greedy"}));
    solve_cmd->add_option("--time-budget", time_budget, "wall-clock budget in seconds");
    solve_cmd->add_option("--max-size", max_size, "stop after this candidate cardinality");
    solve_cmd->add_option("--start-size", start_size,
                          "trusted floor: skip stages below this size");
    solve_cmd->add_option("--threads", threads,
                          "worker count (any value returns identical sizes; current "
                          "search runs one worker)")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--force-oracle", force_oracle,
                        "lift the oracle's 16-vertex enumeration guard");
    solve_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    int predict_k = 1;
    auto* predict = app.add_subcommand(
        "predict", "closed-form prediction for the size after k tolerated failures");
    predict->add_option("--grid", grid_lit, "grid literal")->required();
    predict->add_option("--k", predict_k, "tolerated failures (level is k+1)")
        ->required()
        ->check(CLI::PositiveNumber);
    predict->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string grids_csv, k_range;
    std::string table_format = "csv";
    auto* table = app.add_subcommand(
        "table", "predicted vs exact sizes over grids and a k range, as CSV");
    table->add_option("--grids", grids_csv, "comma-separated grid literals")->required();
    table->add_option("--k", k_range, "tolerated-failure range like 1..6")->required();
    table->add_option("--time-budget", time_budget,
                      "per-solve wall-clock budget in seconds");
    table->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* conjecture = app.add_subcommand(
        "conjecture", "exact vs conjectured sizes across the whole gap regime");
    conjecture->add_option("--grid", grid_lit, "grid literal")->required();
    conjecture->add_option("--time-budget", time_budget,
                           "per-solve wall-clock budget in seconds");
    conjecture->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("gridres");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 64;
    }

    try {
        OutputPrefs prefs{format, seed};
        SolveOptions opts;
        opts.time_budget_s = time_budget;
        opts.max_size = max_size;
        opts.start_size_hint = start_size;
        opts.table_cap = env_table_cap();
        opts.threads = threads;
        opts.oracle_override = force_oracle;

        if (app.got_subcommand(verify))
            return cmd_verify(parse_grid_arg(grid_lit), set_spec, k_level, prefs, out);
        if (app.got_subcommand(construct))
            return cmd_construct(parse_grid_arg(grid_lit), cons_name, cons_k, fp_h, fp_hp,
                                 fp_i, fp_j, force_verify, prefs, out);
        if (app.got_subcommand(solve_cmd)) {
            if (mode_str == "oracle")
                opts.mode = SolveMode::Oracle;
            else if (mode_str == "greedy")
                opts.mode = SolveMode::Greedy;
            return cmd_solve(parse_grid_arg(grid_lit), k_level, opts, prefs, out);
        }
        if (app.got_subcommand(predict))
            return cmd_predict(parse_grid_arg(grid_lit), predict_k, prefs, out);
        if (app.got_subcommand(table)) {
            prefs.format = table_format;
            return cmd_table(grids_csv, k_range, opts, prefs, out);
        }
        if (app.got_subcommand(conjecture))
            return cmd_conjecture(parse_grid_arg(grid_lit), opts, prefs, out);
        err << "no subcommand selected\n";
        return 64;
    } catch (const NonexistentError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what()
            << " (set GRIDRES_TABLE_CAP or --force-oracle where applicable)\n";
        return 64;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 64;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 64;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 64;
    } catch (const UnsupportedRankError& e) {
        err << "error: " << e.what() << '\n';
        return 64;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 70;
    }
}

}  // namespace gridres
