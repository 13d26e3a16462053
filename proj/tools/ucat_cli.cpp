// Command-line front end: compute ucat and decompositions, verify the
// committed datasets, run property scans, and emit SVG plots.
#include <CLI11.hpp>

#include <iostream>

#include "ucat/datasets.hpp"
#include "ucat/errors.hpp"
#include "ucat/json_io.hpp"
#include "ucat/scans.hpp"
#include "ucat/svg.hpp"

using namespace ucat;

namespace {

constexpr int EXIT_VERIFY_FAIL = 1;
constexpr int EXIT_PARSE = 2;
constexpr int EXIT_BAD_EXPONENT = 3;

AnyFunction load_input(const std::string& path) { return load_function_file(path); }

ojson certificate_json(const ForcedMaxCertificate& cert) {
    ojson arr = ojson::array();
    for (auto& w : cert.intervals) {
        ojson j;
        j["lo"] = w.interval.lo ? format_scalar(*w.interval.lo) : "-inf";
        j["hi"] = w.interval.hi ? format_scalar(*w.interval.hi) : "+inf";
        j["neg_variation"] = w.neg_variation.str();
        j["left_value"] = w.left_value.str();
        arr.push_back(std::move(j));
    }
    return arr;
}

int cmd_ucat(const std::string& input, const std::string& p_str) {
    AnyFunction f = load_input(input);
    Scalar p = parse_scalar(p_str);
    ojson out;
    if (f.line) {
        if (f.line->domain == DomainKind::WholeLine) {
            PLFunction powered = power(*f.line, p);
            out["ucat"] = ucat_line(*f.line, p);
            if (powered.exponent == 1) {
                ojson pts = ojson::array();
                for (auto& x : sweep_points(powered)) pts.push_back(format_scalar(x));
                out["sweep_points"] = std::move(pts);
            }
            out["certificate"] = certificate_json(forced_max_certificate(powered));
        } else {
            auto r = ucat_interval(power(*f.line, p));
            out["ucat"] = r.n;
            out["last_summand_increasing"] = r.last_increasing;
            out["last_summand_plateau"] = r.last_plateau;
        }
    } else if (f.circle) {
        out["ucat"] = ucat_circle(*f.circle, p);
        CirclePL g = power_circle(*f.circle, p);
        if (!has_zero(g)) {
            int best = -1;
            Scalar best_a(0);
            for (auto& a : g.angles) {
                int m = m_a_plus(g, a);
                if (best < 0 || m < best) {
                    best = m;
                    best_a = a;
                }
            }
            out["min_m_a_plus"] = best;
            out["argmin_angle"] = format_scalar(best_a);
        }
    } else {
        std::cerr << "ucat on graph/plane carriers is not a closed-form computation; "
                     "use `verify` for the certified bounds\n";
        return EXIT_PARSE;
    }
    std::cout << dump_canonical(out);
    return 0;
}

int cmd_decompose(const std::string& input, const std::string& p_str, const std::string& svg) {
    AnyFunction f = load_input(input);
    Scalar p = parse_scalar(p_str);
    if (!f.line) {
        std::cerr << "decompose expects a line or interval function\n";
        return EXIT_PARSE;
    }
    PLFunction base = *f.line;
    bool interval = base.domain == DomainKind::ClosedInterval;
    PLFunction powered = power(base, p);
    PLFunction hat = interval ? extend_hat(powered) : powered;
    UnimodalDecomposition d = decompose_line(hat);
    if (interval) d = restrict_to_unit_interval(d);

    ojson out;
    out["ucat"] = d.summands.size();
    ojson arr = ojson::array();
    for (size_t i = 0; i < d.summands.size(); ++i) {
        ojson s = to_json(d.summands[i]);
        s["mode"] = ojson::array({format_scalar(d.mode_points[i].first),
                                  format_scalar(d.mode_points[i].second)});
        arr.push_back(std::move(s));
    }
    out["summands"] = std::move(arr);
    std::cout << dump_canonical(out);
    if (!svg.empty()) {
        PLFunction plot_f = interval ? extend_hat(base) : base;
        write_text_file(svg, decomposition_svg(plot_f, d));
    }
    return 0;
}

int cmd_plot(const std::string& input, const std::string& svg) {
    AnyFunction f = load_input(input);
    if (!f.line) {
        std::cerr << "plot expects a line or interval function\n";
        return EXIT_PARSE;
    }
    PLFunction base =
        f.line->domain == DomainKind::ClosedInterval ? extend_hat(*f.line) : *f.line;
    UnimodalDecomposition d = decompose_line(base);
    write_text_file(svg, decomposition_svg(base, d));
    return 0;
}

int cmd_verify(const std::string& dataset, bool all, bool as_json) {
    VerifyReport rep;
    if (all)
        rep = verify_all();
    else
        rep = verify_dataset(build_dataset(dataset));
    if (as_json)
        std::cout << dump_canonical(rep.json());
    else
        std::cout << rep.text();
    return rep.all_machine_checks_pass() ? 0 : EXIT_VERIFY_FAIL;
}

int cmd_scan(const std::string& kind, int trials, const std::string& p_list, uint64_t seed) {
    std::vector<Scalar> ps;
    std::vector<long> ips;
    std::stringstream ss(p_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        ps.push_back(parse_scalar(tok));
        ips.push_back(std::atol(tok.c_str()));
    }
    ScanReport rep;
    if (kind == "line")
        rep = monotonicity_scan_line(trials, ps, seed);
    else if (kind == "circle")
        rep = monotonicity_scan_circle(trials, ps, seed);
    else if (kind == "tree")
        rep = tree_monotonicity_scan(trials, ips, seed);
    else if (kind == "updown")
        rep = updown_scan(trials, ps, seed);
    else if (kind == "oracle")
        rep = oracle_scan(trials, seed);
    else {
        std::cerr << "unknown scan kind " << kind << "\n";
        return EXIT_PARSE;
    }
    ojson out;
    out["kind"] = rep.kind;
    out["trials"] = rep.trials;
    out["violations"] = rep.violations;
    if (!rep.counterexamples.empty()) out["counterexamples"] = rep.counterexamples;
    std::cout << dump_canonical(out);
    return rep.violations == 0 ? 0 : EXIT_VERIFY_FAIL;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unimodal category toolkit"};
    app.require_subcommand(1);

    std::string input, p_str = "1", svg_path, dataset, kind = "line", p_list = "1,2";
    int trials = 100;
    uint64_t seed = 1;
    bool all = false, as_json = false;

    auto* ucat_cmd = app.add_subcommand("ucat", "compute the unimodal category");
    ucat_cmd->add_option("--input", input, "function JSON file")->required();
    ucat_cmd->add_option("--p", p_str, "exponent (rational, e.g. 1/2 or 1.5)");

    auto* dec_cmd = app.add_subcommand("decompose", "minimal unimodal decomposition");
    dec_cmd->add_option("--input", input, "function JSON file")->required();
    dec_cmd->add_option("--p", p_str, "exponent");
    dec_cmd->add_option("--svg", svg_path, "write an SVG of the sweep picture");

    auto* plot_cmd = app.add_subcommand("plot", "emit the variation/decomposition SVG");
    plot_cmd->add_option("--input", input, "function JSON file")->required();
    plot_cmd->add_option("--svg", svg_path, "output SVG path")->required();

    auto* ver_cmd = app.add_subcommand("verify", "verify the committed datasets");
    ver_cmd->add_option("--dataset", dataset, "dataset name");
    ver_cmd->add_flag("--all", all, "verify every dataset");
    ver_cmd->add_flag("--json", as_json, "JSON report");

    auto* scan_cmd = app.add_subcommand("scan", "randomized property scans");
    scan_cmd->add_option("--kind", kind, "line|circle|tree|updown|oracle")->required();
    scan_cmd->add_option("--trials", trials, "number of trials")->required();
    scan_cmd->add_option("--p-list", p_list, "comma-separated exponents");
    scan_cmd->add_option("--seed", seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ucat_cmd->parsed()) return cmd_ucat(input, p_str);
        if (dec_cmd->parsed()) return cmd_decompose(input, p_str, svg_path);
        if (plot_cmd->parsed()) return cmd_plot(input, svg_path);
        if (ver_cmd->parsed()) {
            if (!all && dataset.empty()) {
                std::cerr << "verify needs --dataset NAME or --all\n";
                return EXIT_PARSE;
            }
            return cmd_verify(dataset, all, as_json);
        }
        if (scan_cmd->parsed()) return cmd_scan(kind, trials, p_list, seed);
    } catch (const UnsupportedExponent& e) {
        std::cerr << "unsupported exponent: " << e.what() << "\n";
        return EXIT_BAD_EXPONENT;
    } catch (const NonpositiveExponent& e) {
        std::cerr << "unsupported exponent: " << e.what() << "\n";
        return EXIT_BAD_EXPONENT;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_PARSE;
    }
    return 0;
}
