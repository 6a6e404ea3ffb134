// Command-line front end: polynomial classification, branch profiles,
// scenario replay, the fixed-identity battery, and family property suites,
// with optional JSON reports.
//
// Exit codes: 0 all assertions pass, 1 assertion failure, 2 usage or input
// error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "minsing/identities.hpp"
#include "minsing/parse.hpp"
#include "minsing/scenario.hpp"
#include "minsing/suite.hpp"

namespace {

using namespace minsing;

int g_exit = 0;

void note_failure() {
    if (g_exit == 0) g_exit = 1;
}

void write_json(const std::string& path, const OrderedJson& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

void print_report(const Report& rep, bool verbose) {
    for (const auto& s : rep.steps) {
        if (!verbose && s.status == "pass") continue;
        std::cout << "  [" << s.status << "] #" << s.index << " " << s.op;
        if (!s.expected.empty()) std::cout << " expected: " << s.expected;
        if (!s.actual.empty()) std::cout << " actual: " << s.actual;
        std::cout << "\n";
    }
    std::cout << rep.name << ": " << rep.summary << "\n";
}

std::vector<std::string> scenario_paths(const std::string& dir) {
    std::vector<std::string> paths;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    return paths;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact branch analysis and resolution charts for hypersurface "
        "singularities in up to four variables"};
    app.require_subcommand(1);

    std::string json_path;
    bool verbose = false;
    app.add_option("--json", json_path, "write the run report as JSON");
    app.add_flag("--verbose", verbose, "print passing steps and evidence");

    // verify <all|identities|scenarios>
    std::string verify_what = "all";
    std::string scenario_dir = "scenarios";
    auto* verify = app.add_subcommand(
        "verify", "run the identity battery and the bundled scenarios");
    verify->add_option("what", verify_what,
                       "all | identities | scenarios")
        ->check(CLI::IsMember({"all", "identities", "scenarios"}));
    verify->add_option("--scenarios", scenario_dir,
                       "directory holding the bundled scenario files");

    // scenario <path>
    std::string scenario_path;
    auto* scen = app.add_subcommand("scenario", "replay one scenario file");
    scen->add_option("path", scenario_path, "scenario JSON file")
        ->required();

    // classify --poly <expr>
    std::string classify_expr;
    int precision = kDefaultPrecision;
    auto* classify = app.add_subcommand(
        "classify", "match a germ against the singularity catalog");
    classify->add_option("--poly", classify_expr, "polynomial expression")
        ->required();
    classify->add_option("--precision", precision, "series precision");

    // branches --poly <expr> [--ramify k] [--precision N]
    std::string branches_expr;
    int ramify_k = 0;
    auto* branches = app.add_subcommand(
        "branches", "branch count of a cover cubic or quadratic in z over "
                    "the base w");
    branches->add_option("--poly", branches_expr, "polynomial expression")
        ->required();
    branches->add_option("--ramify", ramify_k,
                         "try only the cover w = v^k for this k");
    branches->add_option("--precision", precision, "series precision");

    // suite --family <f> --count n --seed s
    std::string family_name;
    int count = 200;
    std::uint64_t seed = 0;
    auto* suite = app.add_subcommand(
        "suite", "generate family instances and check their ground truth");
    suite->add_option("--family", family_name,
                      "one | two-a | two-b | three | three-raw")
        ->required();
    suite->add_option("--count", count, "number of instances");
    suite->add_option("--seed", seed, "base seed");
    suite->add_option("--precision", precision, "series precision");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            std::vector<Report> reports;
            if (verify_what != "scenarios")
                reports.push_back(verify_identities());
            if (verify_what != "identities")
                for (const auto& p : scenario_paths(scenario_dir))
                    reports.push_back(run_scenario(load_scenario(p)));
            Report combined;
            combined.name = "verify-" + verify_what;
            combined.precision = precision;
            for (const auto& r : reports) {
                print_report(r, verbose);
                ReportStep& rs = combined.add(r.name);
                rs.status = r.passed() ? "pass" : "fail";
                rs.actual = r.summary;
                rs.certificates["steps"] = r.to_json()["steps"];
                if (!r.passed()) note_failure();
            }
            combined.finish();
            write_json(json_path, combined.to_json());
        } else if (*scen) {
            Report rep = run_scenario(load_scenario(scenario_path));
            print_report(rep, verbose);
            write_json(json_path, rep.to_json());
            if (!rep.passed()) note_failure();
        } else if (*classify) {
            Detection d = detect(parse_poly(classify_expr), precision);
            std::cout << to_string(d.label) << "\n";
            if (verbose) {
                std::cout << "  route: " << d.route << "\n";
                for (const auto& n : d.notes)
                    std::cout << "  " << n << "\n";
            }
            Report rep;
            rep.name = "classify";
            rep.precision = precision;
            ReportStep& rs = rep.add("classify");
            rs.status = "pass";
            rs.actual = to_string(d.label);
            rs.certificates["detection"] = detection_certificate(d);
            rep.finish();
            write_json(json_path, rep.to_json());
        } else if (*branches) {
            MPoly f = parse_poly(branches_expr);
            auto uni = f.as_univariate("z");
            int deg = uni.empty() ? 0 : uni.rbegin()->first;
            Report rep;
            rep.name = "branches";
            rep.precision = precision;
            ReportStep& rs = rep.add("branches");
            if (ramify_k > 1)
                f = f.substitute({{"w", MPoly::var("v", ramify_k)}});
            if (deg == 3) {
                if (ramify_k > 1) {
                    CubicSplit s = full_split_cubic(f, "z", precision);
                    rs.actual = std::string(to_string(s.outcome)) +
                                " at k=" + std::to_string(ramify_k);
                    rs.status = "pass";
                    if (!s.note.empty())
                        rs.certificates["note"] = s.note;
                    rs.certificates["delta_sqrt"] =
                        to_string(s.delta_sqrt.status);
                } else {
                    SplitProfile p =
                        split_profile(f, "w", "z", precision, true);
                    rs.actual = branch_summary(p);
                    rs.status = "pass";
                    rs.certificates["profile"] = profile_certificate(p);
                }
            } else if (deg == 2) {
                if (ramify_k > 1) {
                    QuadraticSplit s = split_quadratic(f, "z", precision);
                    rs.actual = std::string(to_string(s.outcome)) +
                                " at k=" + std::to_string(ramify_k);
                    rs.status = "pass";
                    if (!s.note.empty())
                        rs.certificates["note"] = s.note;
                } else {
                    QuadraticProfile p =
                        quadratic_profile(f, "w", "z", precision);
                    rs.actual = branch_summary(p);
                    rs.status = "pass";
                    rs.certificates["profile"] = profile_certificate(p);
                }
            } else {
                std::cerr << "branches: the polynomial must be quadratic or "
                             "cubic in z (degree "
                          << deg << ")\n";
                return 2;
            }
            std::cout << rs.actual << "\n";
            if (verbose)
                std::cout << rs.certificates.dump(2) << "\n";
            rep.finish();
            write_json(json_path, rep.to_json());
        } else if (*suite) {
            auto fam = family_from_string(family_name);
            if (!fam) {
                std::cerr << "suite: unknown family '" << family_name
                          << "'\n";
                return 2;
            }
            if (count < 1) {
                std::cerr << "suite: count must be at least 1\n";
                return 2;
            }
            Report rep = property_suite(*fam, count, seed, precision);
            print_report(rep, verbose);
            write_json(json_path, rep.to_json());
            if (!rep.passed()) note_failure();
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
