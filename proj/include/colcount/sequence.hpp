#pragma once

#include "colcount/graph.hpp"

#include <cstddef>
#include <vector>

namespace colcount {

enum class SequenceVariant { Counting, Verification };

const char* to_string(SequenceVariant v);

// Edge insertion schedule G_0 (edgeless) ⊂ G_1 ⊂ ... ⊂ G_r = G.
// Counting: edges[cutoff..] are exactly the R edges.
// Verification: edges[..cutoff) are exactly the edges on short cycles.
struct BuildSequence {
    std::vector<Edge> edges;
    std::size_t cutoff = 0;
    SequenceVariant variant = SequenceVariant::Counting;
    int ell = 0;

    std::size_t size() const { return edges.size(); }
};

// Edges on no cycle of length <= ell that touch a vertex on such a cycle.
std::vector<Edge> edge_set_R(const Graph& g, int ell, std::size_t cycle_cap = kDefaultCycleCap);

BuildSequence counting_sequence(const Graph& g, int ell, std::size_t cycle_cap = kDefaultCycleCap);
BuildSequence verification_sequence(const Graph& g, int ell, std::size_t cycle_cap = kDefaultCycleCap);

// Radius-t neighbourhood of the anchor pair in G_i, with the sphere-crossing
// edges removed. Ψ_i itself is never part of the component.
struct TruncatedComponent {
    Graph component;              // induced on B(anchor, t) in G_i
    std::vector<Vertex> to_parent;
    Vertex anchor_v = 0;          // local ids
    Vertex anchor_u = 0;
    int radius = 0;
    std::vector<Edge> tree_edges;   // BFS forest, local ids
    std::vector<Edge> extra_edges;
    std::vector<Vertex> pin_set;    // distinct endpoints of extra_edges
    bool disconnected = false;      // anchors in different components
};

// Looks up insertion ranks so G_i never has to be materialised.
class SequenceIndex {
public:
    SequenceIndex(const Graph& g, const BuildSequence& seq);

    const Graph& graph() const { return *g_; }
    const BuildSequence& sequence() const { return *seq_; }

    // G_i: the edges seq[0..i).
    Graph prefix_graph(std::size_t i) const;
    TruncatedComponent truncated(std::size_t i, int t) const;
    // Component(s) of the anchor pair in G_i without truncation.
    TruncatedComponent full_component(std::size_t i) const;

private:
    TruncatedComponent around(std::size_t i, int t) const;

    const Graph* g_;
    const BuildSequence* seq_;
    std::vector<std::size_t> rank_;  // edge id -> position in seq
};

TruncatedComponent truncated_component(const Graph& g, const BuildSequence& seq, std::size_t i, int t);

// Builds the tree/extra split and pin set for an arbitrary anchored graph.
TruncatedComponent make_component(Graph component, Vertex anchor_v, Vertex anchor_u, int radius);

}  // namespace colcount
