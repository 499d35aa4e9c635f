#include "cli.hpp"

#include "singwf/analysis.hpp"
#include "singwf/dataset.hpp"
#include "singwf/errors.hpp"
#include "singwf/parser.hpp"
#include "singwf/report.hpp"
#include "singwf/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace singwf {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct PolyArgs {
    std::string poly;
    std::string vars;
    std::string weights;
    bool json = false;
};

void add_poly_args(CLI::App* cmd, PolyArgs& a, bool with_weights = true) {
    cmd->add_option("poly", a.poly, "quasihomogeneous polynomial, e.g. \"t^3+z^2x+tx^3+ty^5\"")->required();
    cmd->add_option("--vars", a.vars, "variable order: t,z,x,y or x1,...,xn (also x1..xn)");
    if (with_weights) cmd->add_option("--weights", a.weights, "explicit weights p1,p2,... instead of inference");
    cmd->add_flag("--json", a.json, "emit JSON");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::optional<VarList> parse_vars_option(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (const auto dots = s.find(".."); dots != std::string::npos) {
        const std::string hi = s.substr(dots + 2);
        if (s.substr(0, dots) != "x1" || hi.size() < 2 || hi[0] != 'x')
            throw Error(ErrorCode::FormatError, "--vars range must look like x1..xn");
        return VarList::indexed(std::stoul(hi.substr(1)));
    }
    return VarList(split_commas(s));
}

std::optional<std::vector<Weight>> parse_weights_option(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::vector<Weight> w;
    for (const auto& tok : split_commas(s)) {
        try {
            std::size_t used = 0;
            w.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidWeights, "bad weight \"" + tok + "\"");
        }
    }
    return w;
}

StdBoundary parse_boundary_option(const std::string& s, const VarList& vars) {
    StdBoundary b = StdBoundary::zero(vars.size());
    if (s.empty()) return b;
    for (const auto& item : split_commas(s)) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::InvalidBoundary, "expected var=c, got \"" + item + "\"");
        const auto idx = vars.index_of(item.substr(0, eq));
        if (!idx) throw Error(ErrorCode::UnknownVariable, "boundary variable \"" + item.substr(0, eq) + "\"");
        b.c[*idx] = parse_rational(item.substr(eq + 1));
    }
    return b;
}

AnalysisReport run_analysis(const PolyArgs& a, const std::string& boundary = {}) {
    AnalysisOptions opts;
    opts.weights = parse_weights_option(a.weights);
    const std::optional<VarList> vars = parse_vars_option(a.vars);
    if (!boundary.empty()) {
        const VarList v = vars ? *vars : guess_vars(a.poly);
        opts.boundary = parse_boundary_option(boundary, v);
    }
    return analyze_text(a.poly, vars, opts);
}

int cmd_weights(const PolyArgs& a, std::ostream& out) {
    const std::optional<VarList> vars = parse_vars_option(a.vars);
    const VarList v = vars ? *vars : guess_vars(a.poly);
    const Polynomial poly = parse_polynomial(a.poly, v);
    const WeightAssignment w = infer_weights(poly);
    const Discrepancy disc = discrepancy(w);
    if (a.json) {
        nlohmann::ordered_json j;
        j["input"] = render(poly);
        j["vars"] = v.names();
        j["weights"] = {{"p", w.p}, {"d", w.d}};
        j["discrepancy"] = {{"a", disc.a}, {"tag", std::string(to_string(disc.tag))}};
        out << j.dump(2) << "\n";
    } else {
        out << "p=" << wps_string(w.p).substr(1) << " d=" << w.d << "\n";
        out << "discrepancy: " << disc.a << " (" << to_string(disc.tag) << ")\n";
    }
    return kOk;
}

int cmd_wellform(const PolyArgs& a, std::ostream& out) {
    const AnalysisReport rep = run_analysis(a);
    if (a.json) {
        out << report_to_json(rep) << "\n";
        return kOk;
    }
    const auto& prof = rep.profile;
    out << "q=" << wps_string(prof.q).substr(1) << " Q=" << prof.Q << "\n";
    out << "E: " << render(rep.tilde) << " ⊂ " << wps_string(prof.p_tilde) << ", degree " << prof.d_tilde << "\n";
    out << "well-formed: " << (rep.well_formed() ? "yes" : "no") << "\n";
    for (const auto& pr : prof.failing_pairs)
        out << "failing pair {" << rep.vars()[pr.i] << "," << rep.vars()[pr.j] << "} q=" << prof.qij(pr.i, pr.j) << "\n";
    if (rep.cone) out << "cone: " << wps_string(rep.cone->weights) << "\n";
    out << "fixpoint iterations: " << prof.fixpoint_iterations << "\n";
    return kOk;
}

int cmd_diff(const PolyArgs& a, const std::string& boundary, std::ostream& out) {
    const AnalysisReport rep = run_analysis(a, boundary);
    if (a.json) {
        out << report_to_json(rep) << "\n";
        return kOk;
    }
    const std::size_t n = rep.vars().size();
    out << "Diff_E(0) = " << to_display_string(rep.diff_E, n) << "\n";
    out << "Diff_E/P(0) = " << to_display_string(rep.diff_over_wps, n) << "\n";
    out << "D = " << to_display_string(rep.D, n) << "\n";
    if (rep.boundary) {
        out << "Diff_E(B) = " << to_display_string(*rep.diff_E_boundary, n) << "\n";
        out << "Diff_E/P(B) = " << to_display_string(*rep.diff_over_wps_boundary, n) << "\n";
    }
    return kOk;
}

int cmd_verify(std::vector<std::string> paths, unsigned jobs, bool json, bool fail_fast, bool timing, std::ostream& out) {
    std::vector<std::filesystem::path> ps;
    if (paths.empty()) ps.push_back(default_tables_dir());
    for (const auto& p : paths) ps.emplace_back(p);
    const auto records = load_records(ps);
    const auto outcomes = verify_all(records, jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs, fail_fast);

    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& o : outcomes) (o.status == VerifyStatus::Pass ? pass : o.status == VerifyStatus::Fail ? fail : skip)++;
    if (json) {
        out << outcomes_to_json(outcomes, timing) << "\n";
    } else {
        for (const auto& o : outcomes) {
            if (o.status != VerifyStatus::Pass) out << outcome_to_text(o) << "\n";
        }
        out << outcomes.size() << " records: " << pass << " pass, " << fail << " fail, " << skip << " skip\n";
    }
    return fail == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted blow-ups of quasihomogeneous singularities: weights, well-forming, differents"};
    app.name("singwf");
    app.require_subcommand(1);

    PolyArgs analyze_args, weights_args, wellform_args, diff_args;
    std::string boundary;
    std::vector<std::string> verify_paths;
    unsigned jobs = 1;
    bool verify_json = false, fail_fast = false, timing = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one polynomial");
    add_poly_args(analyze_cmd, analyze_args);
    analyze_cmd->add_option("--boundary", boundary, "boundary coefficients var=c,... on the ambient space");

    auto* weights_cmd = app.add_subcommand("weights", "primitive weights, degree and discrepancy");
    add_poly_args(weights_cmd, weights_args, false);

    auto* wellform_cmd = app.add_subcommand("wellform", "gcd data and the well-formed model of E");
    add_poly_args(wellform_cmd, wellform_args);

    auto* diff_cmd = app.add_subcommand("diff", "differents on E");
    add_poly_args(diff_cmd, diff_args);
    diff_cmd->add_option("--boundary", boundary, "boundary coefficients var=c,... on the ambient space");

    auto* verify_cmd = app.add_subcommand("verify", "check record files against the pipeline");
    verify_cmd->add_option("paths", verify_paths, "record files or directories (default: the shipped tables)");
    verify_cmd->add_option("--jobs,-j", jobs, "worker threads (0 = hardware concurrency)");
    verify_cmd->add_flag("--json", verify_json, "emit JSON");
    verify_cmd->add_flag("--fail-fast", fail_fast, "stop at the first failure");
    verify_cmd->add_flag("--timing", timing, "include per-record timing in JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*analyze_cmd) {
            const AnalysisReport rep = run_analysis(analyze_args, boundary);
            out << (analyze_args.json ? report_to_json(rep) : report_to_text(rep));
            if (analyze_args.json) out << "\n";
            return kOk;
        }
        if (*weights_cmd) return cmd_weights(weights_args, out);
        if (*wellform_cmd) return cmd_wellform(wellform_args, out);
        if (*diff_cmd) return cmd_diff(diff_args, boundary, out);
        if (*verify_cmd) return cmd_verify(verify_paths, jobs, verify_json, fail_fast, timing, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

int cli_main(int argc, char** argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace singwf
