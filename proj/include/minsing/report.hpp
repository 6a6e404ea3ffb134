#pragma once

// Machine-readable run reports.  A report is a named list of steps, each
// with a pass/fail status, the expected and actual values as strings, and a
// free-form certificates object carrying supporting evidence (branch
// attempts, detection notes, divisor ledgers).  Serialization is
// deterministic: fixed inputs give byte-identical JSON.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "catalog.hpp"
#include "cubic.hpp"

namespace minsing {

using OrderedJson = nlohmann::ordered_json;

struct ReportStep {
    int index = 0;
    std::string op;
    std::string status;  // "pass" | "fail" | "error"
    std::string expected;
    std::string actual;
    OrderedJson certificates = OrderedJson::object();
};

struct Report {
    std::string name;
    std::uint64_t seed = 0;
    int precision = kDefaultPrecision;
    std::vector<ReportStep> steps;
    std::string summary;

    bool passed() const {
        for (const auto& s : steps)
            if (s.status != "pass") return false;
        return true;
    }

    ReportStep& add(const std::string& op) {
        ReportStep s;
        s.index = int(steps.size());
        s.op = op;
        steps.push_back(std::move(s));
        return steps.back();
    }

    void finish() {
        int pass = 0;
        for (const auto& s : steps)
            if (s.status == "pass") ++pass;
        summary = std::to_string(pass) + "/" + std::to_string(steps.size()) +
                  " steps passed";
    }

    OrderedJson to_json() const {
        OrderedJson j;
        j["schema_version"] = 1;
        j["name"] = name;
        j["seed"] = seed;
        j["precision"] = precision;
        j["steps"] = OrderedJson::array();
        for (const auto& s : steps) {
            OrderedJson js;
            js["index"] = s.index;
            js["op"] = s.op;
            js["status"] = s.status;
            js["expected"] = s.expected;
            js["actual"] = s.actual;
            js["certificates"] = s.certificates;
            j["steps"].push_back(std::move(js));
        }
        j["summary"] = summary;
        return j;
    }
};

// ---------------------------------------------------------------------------
// Formatting helpers shared by the scenario interpreter and the CLI
// ---------------------------------------------------------------------------

inline std::string branch_summary(int branch_count, int ramification) {
    if (branch_count < 0) return "indeterminate";
    std::string s = std::to_string(branch_count) + " branch";
    if (branch_count != 1) s += "es";
    s += " (split at k=" + std::to_string(ramification) + ")";
    return s;
}

inline std::string branch_summary(const SplitProfile& p) {
    return branch_summary(p.branch_count, p.ramification);
}

inline OrderedJson attempt_certificate(const ProfileAttempt& a) {
    OrderedJson j;
    j["k"] = a.k;
    j["cover_var"] = a.cover_var;
    j["outcome"] = to_string(a.outcome);
    j["delta_sqrt"] = to_string(a.delta_sqrt.status);
    if (!a.delta_sqrt.note.empty()) j["delta_sqrt_note"] = a.delta_sqrt.note;
    if (a.ord_B3 != kOrdInf || a.ord_C2 != kOrdInf) {
        j["ord_B3"] = a.ord_B3 == kOrdInf ? -1 : a.ord_B3;
        j["ord_C2"] = a.ord_C2 == kOrdInf ? -1 : a.ord_C2;
    }
    if (a.delta_decomposed) {
        j["delta_square_part"] = a.delta_square_part.to_string();
        j["delta_cofactor"] = a.delta_cofactor.to_string();
        j["delta_unit"] = a.delta_unit.to_string();
    }
    if (!a.note.empty()) j["note"] = a.note;
    return j;
}

inline OrderedJson profile_certificate(const SplitProfile& p) {
    OrderedJson j;
    j["branch_count"] = p.branch_count;
    j["ramification"] = p.ramification;
    j["needs_field_extension"] = p.needs_field_extension;
    j["attempts"] = OrderedJson::array();
    for (const auto& a : p.attempts)
        j["attempts"].push_back(attempt_certificate(a));
    if (p.branch_count > 0) {
        OrderedJson roots = OrderedJson::array();
        for (const auto& r : p.split.roots) roots.push_back(r.to_string());
        j["roots"] = std::move(roots);
        j["exact_factorization"] = p.split.exact_factorization;
    }
    return j;
}

inline std::string branch_summary(const QuadraticProfile& p) {
    return branch_summary(p.branch_count, p.ramification);
}

inline OrderedJson profile_certificate(const QuadraticProfile& p) {
    OrderedJson j;
    j["branch_count"] = p.branch_count;
    j["ramification"] = p.ramification;
    j["needs_field_extension"] = p.needs_field_extension;
    j["attempts"] = OrderedJson::array();
    for (const auto& a : p.attempts)
        j["attempts"].push_back(attempt_certificate(a));
    if (p.branch_count > 0) {
        OrderedJson roots = OrderedJson::array();
        for (const auto& r : p.split.roots) roots.push_back(r.to_string());
        j["roots"] = std::move(roots);
        j["exact_factorization"] = p.split.exact_factorization;
    }
    return j;
}

inline OrderedJson detection_certificate(const Detection& d) {
    OrderedJson j;
    j["label"] = to_string(d.label);
    j["order"] = d.ord;
    j["route"] = d.route;
    j["notes"] = d.notes;
    if (d.cone.ok) {
        OrderedJson cone = OrderedJson::array();
        for (size_t k = 0; k < d.cone.factors.size(); ++k) {
            OrderedJson f;
            f["form"] = d.cone.factors[k].to_string();
            f["multiplicity"] = d.cone.multiplicities[k];
            cone.push_back(std::move(f));
        }
        j["cone"] = std::move(cone);
    }
    if (!d.discriminant.is_zero())
        j["discriminant"] = d.discriminant.to_string();
    return j;
}

inline OrderedJson ledger_certificate(const Chart& c) {
    OrderedJson j = OrderedJson::array();
    for (const auto& d : c.divisors()) {
        OrderedJson e;
        e["equation"] = d.equation.to_string();
        e["multiplicity"] = d.multiplicity;
        j.push_back(std::move(e));
    }
    return j;
}

}  // namespace minsing
