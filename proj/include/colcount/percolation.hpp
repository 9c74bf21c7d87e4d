#pragma once

#include "colcount/graph.hpp"
#include "colcount/oracles.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace colcount {

// Product measure P_{s,w}: each vertex disagrees independently with
// probability q(v); the root always disagrees.
class DisagreementConfig {
public:
    // q(v) = 1 for the root or when deg(v) >= s, else 1 / (s - deg(v)).
    static DisagreementConfig from_degrees(const Graph& g, int s, Vertex root);

    // Explicit per-vertex probabilities; q[root] is forced to 1.
    DisagreementConfig(Vertex root, std::vector<double> q, int s = 0);

    Vertex root() const { return root_; }
    int s() const { return s_; }
    double q(Vertex v) const { return q_[v]; }
    std::size_t size() const { return q_.size(); }

private:
    Vertex root_;
    int s_;
    std::vector<double> q_;
};

// Product of q over the path. The path must be simple, consecutive
// vertices adjacent in g, and start at the root.
double path_disagreement_probability(const Graph& g, const DisagreementConfig& cfg, std::span<const Vertex> path);

inline constexpr int kDefaultExactPercolationCap = 20;

// Exact probability that some path of disagreeing vertices joins the root to
// `target`, summing over all disagreement patterns of the root's component.
// Vertices with q = 1 are fixed; the cap bounds the number of free ones.
double percolation_probability_exact(const Graph& g, const DisagreementConfig& cfg, std::span<const Vertex> target,
                                     int cap = kDefaultExactPercolationCap);

struct McEstimate {
    double estimate = 0.0;
    double half_width_95 = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

// Samples are split into fixed-size shards with seeds derived from `seed`,
// so the result does not depend on `threads`.
McEstimate percolation_probability_mc(const Graph& g, const DisagreementConfig& cfg, std::span<const Vertex> target,
                                      std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

// Swap sigma and eta on the maximal connected sigma/eta-coloured subgraph
// containing x. Maps Ω_sigma onto Ω_eta.
Colouring coupling_map_T(const Graph& g, Vertex x, int sigma, int eta, const Colouring& xi, int k);

struct TvPercolationCheck {
    double tv_max = 0.0;
    double perc = 0.0;
    bool holds = true;
    bool empty_support = false;  // graph not k-colourable; nothing to check
};

TvPercolationCheck tv_vs_percolation_check(const Graph& g, Vertex x, std::span<const Vertex> lambda, int k,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

// Same check for every x and every lambda with |lambda| <= max_lambda,
// reusing one enumeration of the colourings.
struct TvPercolationSweep {
    std::size_t checked = 0;
    std::size_t violations = 0;
    double worst_margin = 0.0;  // max of tv_max - perc
    bool empty_support = false;
};

TvPercolationSweep tv_vs_percolation_sweep(const Graph& g, int k, int max_lambda,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace colcount
