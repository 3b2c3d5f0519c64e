#pragma once

#include <string>
#include <vector>

namespace dunkl {

enum class RegionId { J1, J2, K1, K1p, K2, K2p, S1, S2 };

std::string to_string(RegionId id);
RegionId region_from_string(const std::string& name);

// J regions take (sigma, tau); K regions (sigma, tau, theta); S regions
// (alpha, beta, gamma, delta).
int region_arity(RegionId id);
const std::vector<std::string>& region_variables(RegionId id);

struct ClauseReport {
    std::string antecedent;
    std::string consequent;
    bool applies;    // antecedent holds
    bool satisfied;  // (not applies) or consequent
    // Signed distance to the consequent boundary (positive inside); for an
    // inactive clause, the distance by which the antecedent fails (negative).
    double margin;
};

struct RegionReport {
    RegionId region;
    bool member;
    std::vector<ClauseReport> clauses;
};

bool region_member(RegionId id, const std::vector<double>& point);
RegionReport region_report(RegionId id, const std::vector<double>& point);

struct VHypotheses {
    bool ok;
    std::string case_tag;  // "a", "b", "c", "d" or "vacuous"
    std::vector<std::string> violated;
};

VHypotheses theorem_v_hypotheses(double sigma, double tau, double theta, double u);

}  // namespace dunkl
