#pragma once

#include "colcount/graph.hpp"
#include "colcount/oracles.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace colcount {

struct MembershipS {
    double d = 0.0;
    int ell = 0;
    int ball_radius = 1;
    double edge_bound = 0.0;  // 3dn/4
    bool edge_count_ok = false;
    std::size_t short_cycle_count = 0;
    double cycle_bound = 0.0;  // n^0.3
    bool cycle_cap_hit = false;
    bool short_cycles_ok = false;
    bool balls_ok = false;
    std::optional<Vertex> bad_ball_centre;  // first centre whose ball has |E| > |V|
    bool in_S = false;
};

// ell = floor(ln n / (10 ln d)) unless given, ball radius
// max(1, floor(ln n / (4 ln(e^2 d / 2)))). Requires d > 1.
MembershipS membership_S(const Graph& g, double d, std::optional<int> ell = std::nullopt,
                         std::size_t cycle_cap = kDefaultCycleCap);

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

struct PathSum {
    std::size_t path_count = 0;
    std::size_t sphere_size = 0;
    double bound_sum = 0.0;
    bool cap_exceeded = false;
};

// Sums the disagreement probability (s colours, root `root`, q from the
// degrees of h) over the simple paths from root that stay at distance
// < radius and stop at their first vertex at distance exactly radius.
PathSum path_sum_to_sphere(const Graph& h, Vertex root, int radius, int s, std::size_t cap = kDefaultPathCap);

struct VerifierConfig {
    double epsilon1 = 0.1;
    std::optional<int> ell;
    std::size_t path_cap = kDefaultPathCap;
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
    std::size_t cycle_cap = kDefaultCycleCap;
    unsigned threads = 1;
};

struct ExactPhaseRecord {
    Edge edge;
    double p = 0.0;  // Pr[X_i(v_i) != X_i(u_i)] in G_i
    int component_size = 0;
};

struct PathPhaseRecord {
    Edge edge;
    int distance = -1;  // in g minus the edge, -1 when unreachable
    double a = 0.0;
    int radius = 1;
    bool radius_clamped = false;
    std::size_t path_count = 0;
    std::size_t sphere_size = 0;
    double bound_sum = 0.0;
    bool cap_exceeded = false;
    bool pass = false;
};

struct VerifierReport {
    int n = 0;
    double d = 0.0;
    int k = 0;
    double epsilon1 = 0.0;
    MembershipS membership;
    std::size_t cutoff = 0;  // number of exact-phase edges
    std::vector<ExactPhaseRecord> exact_phase;
    std::vector<PathPhaseRecord> path_phase;
    double threshold = 0.0;  // n^-epsilon1
    double max_bound = 0.0;
    bool verdict = false;
    // "certified", "not-in-S", "criterion-failed", "path-cap-exceeded"
    // or "exact-phase-infeasible".
    std::string reason;
    double first_moment = 0.0;
    double implied_h = 0.0;  // heuristic: 2 k^4 (phase-2 terms) n^-epsilon1 / n
    std::vector<std::string> warnings;
};

VerifierReport verify_concentration(const Graph& g, double d, int k, const VerifierConfig& config = {});

}  // namespace colcount
