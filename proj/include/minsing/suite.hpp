#pragma once

// Property suites: generate seeded instances of a normal-form family, run
// the branch trichotomy on each, and tally agreement with the family's
// ground truth.  Disagreements carry the full certificate trail.

#include "report.hpp"

namespace minsing {

inline Report property_suite(Family fam, int count, std::uint64_t seed,
                             int prec = kDefaultPrecision,
                             bool with_detect = true) {
    Report rep;
    rep.name = std::string("suite-") + to_string(fam);
    rep.seed = seed;
    rep.precision = prec;
    for (int i = 0; i < count; ++i) {
        FamilyGenerator gen(seed + std::uint64_t(i));
        FamilyInstance inst = gen.generate(fam);
        SplitProfile p = split_profile(inst.f, "w", "z", prec);
        ReportStep& rs = rep.add("instance");
        rs.expected = branch_summary(inst.ground_truth_branches,
                                     inst.ground_truth_ramification);
        rs.actual = branch_summary(p);
        rs.status = rs.expected == rs.actual ? "pass" : "fail";
        rs.certificates["seed"] = inst.seed;
        rs.certificates["equation"] = inst.f.to_string();
        rs.certificates["exponents"] = inst.exponents;
        if (with_detect)
            rs.certificates["label"] =
                to_string(detect(inst.f, prec).label);
        if (rs.status == "fail")
            rs.certificates["profile"] = profile_certificate(p);
    }
    rep.finish();
    return rep;
}

}  // namespace minsing
