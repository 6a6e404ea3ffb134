#pragma once

// Scenario files: versioned JSON documents that seed a chart and replay a
// recorded sequence of operations against it, with inline expectations.
//
// Schema:
//   {
//     "schema_version": 1,
//     "name": "...",
//     "vars": ["w", "x", "y", "z"],
//     "seed_poly": "expression",
//     "ledger": [{"equation": "expression", "multiplicity": n}, ...],
//     "precision": 12,          // optional
//     "steps": [ {"op": "...", "args": {...}, "expect": "...",
//                 "note": "..."}, ... ]
//   }
//
// Operations and their args:
//   blowup          {"center": [vars], "chart": var}
//   clean           {"center": [vars], "chart": var, "expect_refusal": bool}
//   change_coords   {"map": {var: "expression", ...}}
//   complete_power  {"var": var, "degree": n}
//   localize        {"var": var}
//   ramify          {"var": var, "k": n}
//   detect          {}
//   assert_equal    {}                  with expect = germ expression
//   assert_label    {}                  with expect = catalog label
//   assert_branches {"base": var, "variable": var}
//                                       with expect = branch summary text
//   assert_divisor  {"equation": "expression", "multiplicity": n}
//
// The optional "expect" on a transforming operation is the germ expression
// required to hold exactly after the operation.  "note" is free-form
// commentary echoed into reports.  Transform failures are hard errors that
// stop the run unless the step sets "expect_refusal"; assertion failures
// are recorded and the run continues.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "parse.hpp"
#include "report.hpp"

namespace minsing {

struct ScenarioStep {
    std::string op;
    OrderedJson args = OrderedJson::object();
    std::string expect;  // empty when absent
    bool has_expect = false;
    std::string note;
};

struct Scenario {
    std::string name;
    std::vector<std::string> vars;
    std::string seed_poly;
    std::vector<std::pair<std::string, int>> ledger;
    int precision = kDefaultPrecision;
    std::vector<ScenarioStep> steps;
};

inline Scenario parse_scenario(const OrderedJson& j) {
    Scenario sc;
    if (!j.is_object() || !j.contains("schema_version"))
        throw std::runtime_error("scenario: missing schema_version");
    if (j.at("schema_version").get<int>() != 1)
        throw std::runtime_error("scenario: unsupported schema_version");
    sc.name = j.at("name").get<std::string>();
    for (const auto& v : j.at("vars"))
        sc.vars.push_back(v.get<std::string>());
    sc.seed_poly = j.at("seed_poly").get<std::string>();
    if (j.contains("ledger"))
        for (const auto& e : j.at("ledger"))
            sc.ledger.emplace_back(e.at("equation").get<std::string>(),
                                   e.at("multiplicity").get<int>());
    if (j.contains("precision")) sc.precision = j.at("precision").get<int>();
    for (const auto& js : j.at("steps")) {
        ScenarioStep st;
        st.op = js.at("op").get<std::string>();
        if (js.contains("args")) st.args = js.at("args");
        if (js.contains("expect")) {
            st.expect = js.at("expect").get<std::string>();
            st.has_expect = true;
        }
        if (js.contains("note")) st.note = js.at("note").get<std::string>();
        sc.steps.push_back(std::move(st));
    }
    return sc;
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file " + path);
    OrderedJson j;
    in >> j;
    return parse_scenario(j);
}

namespace detail {

inline std::map<std::string, MPoly> parse_binding(const OrderedJson& m) {
    std::map<std::string, MPoly> bind;
    for (auto it = m.begin(); it != m.end(); ++it)
        bind[it.key()] = parse_poly(it.value().get<std::string>());
    return bind;
}

inline std::vector<std::string> parse_center(const OrderedJson& a) {
    std::vector<std::string> center;
    for (const auto& v : a) center.push_back(v.get<std::string>());
    return center;
}

}  // namespace detail

// Replays a scenario, returning a report with one step per scenario step.
// The final chart is written to *final when non-null (for replay checks).
inline Report run_scenario(const Scenario& sc, Chart* final = nullptr) {
    Report rep;
    rep.name = sc.name;
    rep.precision = sc.precision;
    Chart chart(parse_poly(sc.seed_poly), sc.vars);
    for (const auto& [eq, mult] : sc.ledger)
        chart.add_divisor(parse_poly(eq), mult);

    bool halted = false;
    for (const auto& step : sc.steps) {
        ReportStep& rs = rep.add(step.op);
        if (!step.note.empty()) rs.certificates["note"] = step.note;
        if (halted) {
            rs.status = "error";
            rs.actual = "not executed: a previous step failed hard";
            continue;
        }
        try {
            const OrderedJson& a = step.args;
            bool transformed = false;
            OpOutcome out;
            if (step.op == "blowup" || step.op == "clean") {
                auto center = detail::parse_center(a.at("center"));
                auto sel = a.at("chart").get<std::string>();
                out = step.op == "blowup" ? chart.blowup(center, sel)
                                          : chart.clean(center, sel);
                transformed = true;
            } else if (step.op == "change_coords") {
                out = chart.change_coords(detail::parse_binding(a.at("map")));
                transformed = true;
            } else if (step.op == "complete_power") {
                out = chart.complete_power(a.at("var").get<std::string>(),
                                           a.at("degree").get<int>());
                transformed = true;
            } else if (step.op == "localize") {
                out = chart.localize(a.at("var").get<std::string>());
                transformed = true;
            } else if (step.op == "ramify") {
                out = chart.ramify(a.at("var").get<std::string>(),
                                   a.at("k").get<int>());
                transformed = true;
            } else if (step.op == "detect") {
                Detection d = detect(chart.germ(), sc.precision);
                rs.status = "pass";
                rs.actual = to_string(d.label);
                rs.certificates["detection"] = detection_certificate(d);
                if (step.has_expect) {
                    rs.expected = step.expect;
                    if (step.expect != rs.actual) rs.status = "fail";
                }
                continue;
            } else if (step.op == "assert_equal") {
                if (!step.has_expect)
                    throw std::runtime_error("assert_equal needs expect");
                MPoly want = parse_poly(step.expect);
                rs.expected = want.to_string();
                rs.actual = chart.germ().to_string();
                if (chart.germ() == want) {
                    rs.status = "pass";
                } else {
                    rs.status = "fail";
                    rs.certificates["difference"] =
                        (chart.germ() - want).to_string();
                }
                continue;
            } else if (step.op == "assert_label") {
                if (!step.has_expect)
                    throw std::runtime_error("assert_label needs expect");
                Detection d = detect(chart.germ(), sc.precision);
                rs.expected = step.expect;
                rs.actual = to_string(d.label);
                rs.status = rs.actual == step.expect ? "pass" : "fail";
                rs.certificates["detection"] = detection_certificate(d);
                continue;
            } else if (step.op == "assert_branches") {
                if (!step.has_expect)
                    throw std::runtime_error("assert_branches needs expect");
                std::string base = a.contains("base")
                                       ? a.at("base").get<std::string>()
                                       : "w";
                std::string zv = a.contains("variable")
                                     ? a.at("variable").get<std::string>()
                                     : "z";
                auto uni = chart.germ().as_univariate(zv);
                int deg = uni.empty() ? 0 : uni.rbegin()->first;
                rs.expected = step.expect;
                if (deg == 2) {
                    QuadraticProfile p =
                        quadratic_profile(chart.germ(), base, zv,
                                          sc.precision);
                    rs.actual = branch_summary(p);
                    rs.certificates["profile"] = profile_certificate(p);
                } else if (deg == 3) {
                    SplitProfile p = split_profile(chart.germ(), base, zv,
                                                   sc.precision, true);
                    rs.actual = branch_summary(p);
                    rs.certificates["profile"] = profile_certificate(p);
                } else {
                    throw std::runtime_error(
                        "assert_branches: germ has degree " +
                        std::to_string(deg) + " in " + zv);
                }
                rs.status = rs.actual == step.expect ? "pass" : "fail";
                continue;
            } else if (step.op == "assert_divisor") {
                MPoly eq =
                    parse_poly(a.at("equation").get<std::string>())
                        .trailing_monic();
                int mult = a.at("multiplicity").get<int>();
                rs.expected = eq.to_string() + " with multiplicity " +
                              std::to_string(mult);
                bool found = false;
                for (const auto& d : chart.divisors())
                    if (d.equation == eq && d.multiplicity == mult)
                        found = true;
                rs.actual = "ledger:";
                for (const auto& d : chart.divisors())
                    rs.actual += " (" + d.equation.to_string() + ", " +
                                 std::to_string(d.multiplicity) + ")";
                rs.status = found ? "pass" : "fail";
                continue;
            } else {
                throw std::runtime_error("unknown operation '" + step.op +
                                         "'");
            }

            if (transformed) {
                bool expect_refusal = a.contains("expect_refusal") &&
                                      a.at("expect_refusal").get<bool>();
                rs.certificates["outcome"] = OrderedJson{
                    {"ok", out.ok},
                    {"extracted", out.extracted},
                    {"ord_before", out.ord_before},
                    {"ord_after", out.ord_after},
                };
                if (!out.error.empty())
                    rs.certificates["outcome"]["error"] = out.error;
                if (expect_refusal) {
                    rs.expected = "operation refused";
                    rs.actual = out.ok ? "operation succeeded" : out.error;
                    rs.status = out.ok ? "fail" : "pass";
                    continue;
                }
                if (!out.ok) {
                    rs.status = "error";
                    rs.actual = out.error;
                    halted = true;
                    continue;
                }
                rs.actual = chart.germ().to_string();
                if (step.has_expect) {
                    MPoly want = parse_poly(step.expect);
                    rs.expected = want.to_string();
                    if (chart.germ() == want) {
                        rs.status = "pass";
                    } else {
                        rs.status = "fail";
                        rs.certificates["difference"] =
                            (chart.germ() - want).to_string();
                    }
                } else {
                    rs.status = "pass";
                }
            }
        } catch (const std::exception& e) {
            rs.status = "error";
            rs.actual = e.what();
            halted = true;
        }
    }
    rep.finish();
    if (final) *final = chart;
    return rep;
}

}  // namespace minsing
