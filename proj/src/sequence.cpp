#include "colcount/sequence.hpp"

#include "colcount/error.hpp"

#include <algorithm>
#include <deque>

namespace colcount {

const char* to_string(SequenceVariant v)
{
    return v == SequenceVariant::Counting ? "counting" : "verification";
}

std::vector<Edge> edge_set_R(const Graph& g, int ell, std::size_t cycle_cap)
{
    if (ell < 0)
        throw Error(ErrorKind::InvalidParameter, "edge_set_R: ell must be nonnegative");
    const auto cycles = short_cycle_edges(g, ell, cycle_cap);
    std::vector<Edge> out;
    for (std::size_t id = 0; id < g.m(); ++id) {
        const auto& e = g.edges()[id];
        if (!cycles.edge_on_cycle[id] && (cycles.vertex_on_cycle[e.a] || cycles.vertex_on_cycle[e.b]))
            out.push_back(e);
    }
    return out;
}

BuildSequence counting_sequence(const Graph& g, int ell, std::size_t cycle_cap)
{
    const auto r = edge_set_R(g, ell, cycle_cap);
    BuildSequence seq;
    seq.variant = SequenceVariant::Counting;
    seq.ell = ell;
    seq.edges.reserve(g.m());
    for (const auto& e : g.edges())
        if (!std::binary_search(r.begin(), r.end(), e))
            seq.edges.push_back(e);
    seq.cutoff = seq.edges.size();
    seq.edges.insert(seq.edges.end(), r.begin(), r.end());
    return seq;
}

BuildSequence verification_sequence(const Graph& g, int ell, std::size_t cycle_cap)
{
    if (ell < 0)
        throw Error(ErrorKind::InvalidParameter, "verification_sequence: ell must be nonnegative");
    const auto cycles = short_cycle_edges(g, ell, cycle_cap);
    BuildSequence seq;
    seq.variant = SequenceVariant::Verification;
    seq.ell = ell;
    seq.edges.reserve(g.m());
    for (std::size_t id = 0; id < g.m(); ++id)
        if (cycles.edge_on_cycle[id])
            seq.edges.push_back(g.edges()[id]);
    seq.cutoff = seq.edges.size();
    for (std::size_t id = 0; id < g.m(); ++id)
        if (!cycles.edge_on_cycle[id])
            seq.edges.push_back(g.edges()[id]);
    return seq;
}

TruncatedComponent make_component(Graph component, Vertex anchor_v, Vertex anchor_u, int radius)
{
    TruncatedComponent tc;
    auto split = spanning_forest_split(component);
    tc.tree_edges = std::move(split.tree);
    tc.extra_edges = std::move(split.extra);
    for (const auto& e : tc.extra_edges) {
        tc.pin_set.push_back(e.a);
        tc.pin_set.push_back(e.b);
    }
    std::sort(tc.pin_set.begin(), tc.pin_set.end());
    tc.pin_set.erase(std::unique(tc.pin_set.begin(), tc.pin_set.end()), tc.pin_set.end());
    const auto label = connected_components(component);
    tc.disconnected = label[anchor_v] != label[anchor_u];
    tc.component = std::move(component);
    tc.anchor_v = anchor_v;
    tc.anchor_u = anchor_u;
    tc.radius = radius;
    return tc;
}

SequenceIndex::SequenceIndex(const Graph& g, const BuildSequence& seq)
    : g_(&g), seq_(&seq), rank_(g.m(), g.m())
{
    if (seq.size() != g.m())
        throw Error(ErrorKind::InvalidInput, "sequence does not match graph edge count");
    for (std::size_t pos = 0; pos < seq.size(); ++pos) {
        const auto id = g.edge_index(seq.edges[pos]);
        if (id == g.m() || rank_[id] != g.m())
            throw Error(ErrorKind::InvalidInput, "sequence is not a permutation of the graph's edges");
        rank_[id] = pos;
    }
}

Graph SequenceIndex::prefix_graph(std::size_t i) const
{
    const auto end = std::min(i, seq_->size());
    return Graph(g_->n(), {seq_->edges.begin(), seq_->edges.begin() + static_cast<std::ptrdiff_t>(end)});
}

TruncatedComponent SequenceIndex::around(std::size_t i, int t) const
{
    if (i >= seq_->size())
        throw Error(ErrorKind::InvalidParameter, "truncated_component: index out of range");
    const Edge anchor = seq_->edges[i];
    const auto& g = *g_;

    // BFS in G_i: only edges inserted before position i are usable.
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> members;
    std::deque<Vertex> queue;
    for (Vertex c : {anchor.a, anchor.b}) {
        dist[c] = 0;
        members.push_back(c);
        queue.push_back(c);
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        if (t >= 0 && dist[v] >= t)
            continue;
        const auto nbrs = g.neighbours(v);
        const auto ids = g.incident_edges(v);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            if (rank_[ids[k]] >= i || dist[nbrs[k]] >= 0)
                continue;
            dist[nbrs[k]] = dist[v] + 1;
            members.push_back(nbrs[k]);
            queue.push_back(nbrs[k]);
        }
    }
    std::sort(members.begin(), members.end());

    std::vector<Vertex> local(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t k = 0; k < members.size(); ++k)
        local[members[k]] = static_cast<Vertex>(k);
    std::vector<Edge> edges;
    for (Vertex v : members) {
        const auto nbrs = g.neighbours(v);
        const auto ids = g.incident_edges(v);
        for (std::size_t k = 0; k < nbrs.size(); ++k)
            if (v < nbrs[k] && local[nbrs[k]] >= 0 && rank_[ids[k]] < i)
                edges.push_back({local[v], local[nbrs[k]]});
    }

    auto tc = make_component(Graph(static_cast<int>(members.size()), std::move(edges)),
                             local[anchor.a], local[anchor.b], t);
    tc.to_parent = std::move(members);
    return tc;
}

TruncatedComponent SequenceIndex::truncated(std::size_t i, int t) const
{
    if (t < 1)
        throw Error(ErrorKind::InvalidParameter, "truncated_component: radius must be >= 1");
    return around(i, t);
}

TruncatedComponent SequenceIndex::full_component(std::size_t i) const
{
    return around(i, -1);
}

TruncatedComponent truncated_component(const Graph& g, const BuildSequence& seq, std::size_t i, int t)
{
    return SequenceIndex(g, seq).truncated(i, t);
}

}  // namespace colcount
