#pragma once

#include "colcount/graph.hpp"
#include "colcount/marginal.hpp"
#include "colcount/oracles.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace colcount {

struct EstimatorConfig {
    std::optional<int> t;       // truncation radius, default from n and d
    std::optional<int> ell;     // short-cycle length, default from n and d
    std::optional<double> d;    // average-degree parameter (metadata)
    std::uint64_t budget = kDefaultEliminationBudget;
    double r_threshold_exponent = 0.3;
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
    std::size_t cycle_cap = kDefaultCycleCap;
    unsigned threads = 1;
};

struct Radii {
    int t = 1;
    int ell = 0;
    double d = 0.0;  // value the defaults were derived from
};

// t = max(1, floor(ln n / (2 ln d))), ell = floor(ln n / (10 ln d)), with d
// taken from the config or else the average degree 2|E|/n. Values of d
// below 2 are treated as 2 in these formulas.
Radii resolve_radii(const Graph& g, const EstimatorConfig& config);

struct TermRecord {
    Edge edge;
    double p = 0.0;
    double log_p = 0.0;
    int component_size = 0;
    std::size_t extra_edges = 0;
    bool disconnected = false;
};

struct EstimateReport {
    int n = 0;
    std::optional<double> d;
    int k = 0;
    int t = 0;
    int ell = 0;
    std::vector<TermRecord> terms;
    std::size_t skipped = 0;
    bool fallback_used = false;
    std::size_t r_size = 0;
    double psi = 0.0;
    std::optional<double> first_moment;
    double elapsed_seconds = 0.0;
};

// Compensated (Neumaier) sum in the given order.
double compensated_sum(const std::vector<double>& values);

EstimateReport estimate_log_z(const Graph& g, int k, const EstimatorConfig& config = {});

// ln k + (d/2) ln(1 - 1/k).
double first_moment_formula(double d, int k);

struct ErrorTerm {
    Edge edge;
    double exact_p = 0.0;
    double approx_p = 0.0;
    double ratio_error = 0.0;  // |exact - approx| / exact
    bool skipped = false;      // approx fixed to 1 (edge scheduled after the cutoff)
};

struct ErrorDecomposition {
    int n = 0;
    int k = 0;
    int t = 0;
    int ell = 0;
    std::vector<ErrorTerm> terms;
    double log_z_exact = 0.0;
    double log_z_approx = 0.0;
    double gap = 0.0;    // |log Z_approx - log Z| / n
    double bound = 0.0;  // (2/n) Σ ratio_error
    bool bound_applicable = false;  // every ratio_error < 1/2
    bool bound_holds = true;
    bool fallback_used = false;
};

// Compares each schema term with the exact marginal of the full G_i.
// Throws InfeasibleSize when exact counting exceeds the enumeration budget.
ErrorDecomposition error_decomposition(const Graph& g, int k, const EstimatorConfig& config = {});

}  // namespace colcount
