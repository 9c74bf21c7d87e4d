#pragma once

#include "colcount/bigint.hpp"
#include "colcount/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace colcount {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

using Colouring = std::vector<int>;
using Pin = std::pair<Vertex, int>;

// Calls `visit` for every proper k-colouring extending `pins`, in a fixed
// order (vertices assigned in BFS order, colours ascending). Throws
// BudgetExceeded if k^(free vertices) exceeds `budget`.
void for_each_proper_colouring(const Graph& g, int k, std::span<const Pin> pins,
                               const std::function<void(const Colouring&)>& visit,
                               std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<Colouring> enumerate_proper_colourings(const Graph& g, int k,
                                                   std::uint64_t budget = kDefaultEnumerationBudget);

// |Ω(G, k)|, factorised over connected components; the budget applies to
// the sum over components of k^|component|.
BigInt brute_force_count(const Graph& g, int k, std::uint64_t budget = kDefaultEnumerationBudget);

// Whether brute_force_count fits the budget.
bool brute_force_feasible(const Graph& g, int k, std::uint64_t budget = kDefaultEnumerationBudget);

// P(G, x) in the monomial basis: coeffs[i] multiplies x^i.
class ChromaticPolynomial {
public:
    explicit ChromaticPolynomial(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt evaluate(long long x) const;

private:
    std::vector<BigInt> coeffs_;
};

inline constexpr std::uint64_t kDefaultDeletionContractionBudget = 1u << 24;

// Deletion-contraction on the lexicographically first edge, contracting to
// simple graphs. Supports n <= 64.
ChromaticPolynomial chromatic_polynomial(const Graph& g,
                                         std::uint64_t budget = kDefaultDeletionContractionBudget);

// Conditional Gibbs distribution of `targets` given `pins`. Entries are
// indexed mixed-radix with the first target most significant.
struct MarginalTable {
    std::vector<Vertex> targets;
    int k = 0;
    std::vector<double> probs;
    BigInt support;  // number of colourings extending the pins
    bool empty_support = false;

    std::size_t index(std::span<const int> colours) const;
    double at(std::span<const int> colours) const { return probs[index(colours)]; }
};

MarginalTable exact_joint_marginals(const Graph& g, std::span<const Pin> pins, std::span<const Vertex> targets,
                                    int k, std::uint64_t budget = kDefaultEnumerationBudget);

// Total variation between the projections on `lambda` of µ(.|x=sigma) and
// µ(.|x=eta). nullopt when either conditioning is unsatisfiable.
std::optional<double> exact_tv(const Graph& g, Vertex x, int sigma, int eta, std::span<const Vertex> lambda, int k,
                               std::uint64_t budget = kDefaultEnumerationBudget);

struct DecayRecord {
    int t = 0;
    std::size_t sphere_size = 0;
    double reconstruction_tv = 0.0;  // max_C ||µ - µ(.|x=C)|| on L(x,t)
    double pairwise_tv = 0.0;        // max_{σ,τ} ||µ(.|σ_x) - µ(.|τ_x)|| on L(x,t)
    double weighted_tv = 0.0;        // Σ_A µ(A) ||µ(.|A) - µ|| at x, A over L(x,t)
};

std::vector<DecayRecord> decay_profile(const Graph& g, Vertex x, int k, int t_max,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

// Greedy proper colouring in vertex order (smallest free colour).
// Throws InitFailed when some vertex has no free colour.
Colouring greedy_colouring(const Graph& g, int k);

// Systematic-scan heat-bath chain: each sweep resamples vertices 0..n-1 in
// order, uniformly among colours unused by neighbours.
Colouring glauber_sampler(const Graph& g, int k, std::uint64_t sweeps, std::uint64_t seed);

struct GlauberEstimate {
    double p_diff = 0.0;
    double std_error = 0.0;  // batch means
    std::uint64_t sweeps = 0;
};

// Estimates Pr[X(v) != X(u)] by averaging over sweeps after burn-in.
GlauberEstimate glauber_disagreement(const Graph& g, int k, Vertex v, Vertex u, std::uint64_t sweeps,
                                     std::uint64_t burn_in, std::uint64_t seed);

}  // namespace colcount
