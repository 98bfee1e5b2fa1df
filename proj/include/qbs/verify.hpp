#pragma once

#include <string>
#include <vector>

#include "qbs/moments.hpp"

namespace qbs {

struct VerifyCheck {
    std::string name;
    bool pass;
    double deviation;   // the quantity the check thresholds
    std::string note;   // optional context (offending point, both readings, ...)
};

/// Result of the oracle suite: closed forms vs brute force, partition of
/// unity, the second-moment reading comparison, the central-moment bound
/// scan, reductions, and the analytically forced spot values. info lines
/// carry diagnostics that are reported but not gating (e.g. where the
/// printed bound fails outside its regime).
struct VerifyReport {
    std::vector<VerifyCheck> checks;
    std::vector<std::string> info;

    bool all_pass() const;
};

/// Runs the whole suite. A non-default tweak seeds a coefficient fault in
/// the moment closed forms; the suite must then fail (mutation smoke test).
VerifyReport run_verify(const MomentTweak& tweak = {});

/// Render as one "PASS|FAIL <name> <max-deviation>" line per check,
/// info lines prefixed INFO.
std::string format_report(const VerifyReport& report);

}  // namespace qbs
