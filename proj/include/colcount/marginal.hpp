#pragma once

#include "colcount/bigint.hpp"
#include "colcount/graph.hpp"
#include "colcount/sequence.hpp"

#include <cstdint>
#include <vector>

namespace colcount {

inline constexpr int kMaxColours = 64;
inline constexpr std::uint64_t kDefaultEliminationBudget = 10'000'000;

using ColourMask = std::uint64_t;

// Allowed colours per vertex, colours numbered 0..k-1.
class ColourList {
public:
    ColourList(int n, int k);  // every colour allowed

    int k() const { return k_; }
    int size() const { return static_cast<int>(allowed_.size()); }

    ColourMask allowed(Vertex v) const { return allowed_[v]; }
    bool allows(Vertex v, int c) const { return (allowed_[v] >> c) & 1u; }
    int count(Vertex v) const;

    void set(Vertex v, ColourMask mask);
    void pin(Vertex v, int c);
    void forbid(Vertex v, int c);

private:
    int k_;
    std::vector<ColourMask> allowed_;
};

// Exact number of proper list colourings of a tree. Throws InvalidInput if
// `tree` is cyclic or disconnected.
BigInt tree_count(const Graph& tree, const ColourList& lists);

// Same DP over any forest (product over its trees).
BigInt forest_count(const Graph& forest, const ColourList& lists);

// Exact list-colouring count of a component. Pinned vertices are absorbed,
// hanging trees are folded into their attachment vertex by the tree DP, and
// the remaining core is summed out by variable elimination. Throws
// BudgetExceeded when elimination would need more than `budget` table
// operations.
BigInt component_count(const TruncatedComponent& tc, const ColourList& lists,
                       std::uint64_t budget = kDefaultEliminationBudget);

// Colour symmetry reduces the k x k anchor table to two cells.
struct JointTable {
    int k = 0;
    BigInt same;  // anchor v = 0, anchor u = 0
    BigInt diff;  // anchor v = 0, anchor u = 1

    BigInt total() const;  // k * same + k(k-1) * diff
};

JointTable joint_table(const TruncatedComponent& tc, int k, std::uint64_t budget = kDefaultEliminationBudget);

// Pr[colour(v) != colour(u)] under the uniform colouring of the component.
double disagreement_probability(const JointTable& jt);

struct CijBound {
    double value = 0.0;  // max over cells of Pr[cell]^-2
    bool infinite = false;
};

CijBound cij_bound(const JointTable& jt);

}  // namespace colcount
