#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace colcount {

using Vertex = int;

// Undirected edge, always stored with a < b.
struct Edge {
    Vertex a = 0;
    Vertex b = 0;

    auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Vertex x, Vertex y);

// Simple undirected graph on vertices 0..n-1. Neighbour lists are sorted and
// the edge list is kept in lexicographic order, so edge ids are stable.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Throws InvalidInput on loops, duplicates or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    std::size_t m() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbours(Vertex v) const;
    // Edge ids parallel to neighbours(v).
    std::span<const std::size_t> incident_edges(Vertex v) const;
    int degree(Vertex v) const;
    int max_degree() const;

    bool has_edge(Vertex x, Vertex y) const;
    // Index into edges(), or m() when absent.
    std::size_t edge_index(Edge e) const;

    Graph without_edge(Edge e) const;
    Graph with_edge(Edge e) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void build_adjacency();

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::vector<std::size_t> adjacency_edge_;
};

// G(n, p) with p = d/n. Pairs (i, j), i < j, are visited lexicographically
// and each consumes exactly one draw of std::mt19937_64 seeded with `seed`;
// the pair is an edge when (draw >> 11) * 2^-53 < p.
Graph generate_gnp(int n, double d, std::uint64_t seed);
Graph generate_gnp_probability(int n, double p, std::uint64_t seed);

// Multi-source BFS distances, -1 for unreachable or beyond `limit`
// (limit < 0 means unbounded).
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> centre, int limit = -1);

std::vector<Vertex> ball(const Graph& g, std::span<const Vertex> centre, int t);
std::vector<Vertex> sphere(const Graph& g, std::span<const Vertex> centre, int t);

struct ShortCycles {
    // Each cycle starts at its smallest vertex; the second vertex is
    // smaller than the last, so every cycle appears once.
    std::vector<std::vector<Vertex>> cycles;
    std::vector<bool> edge_on_cycle;    // indexed by edge id
    std::vector<bool> vertex_on_cycle;  // indexed by vertex

    bool on_short_cycle(const Graph& g, Edge e) const;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

ShortCycles short_cycle_edges(const Graph& g, int ell, std::size_t cap = kDefaultCycleCap);

struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;    // local -> parent
    std::vector<Vertex> from_parent;  // parent -> local, -1 if absent
};

// Induced subgraph; `vertices` need not be sorted. Local ids follow
// ascending parent order.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Union of the components touching `seeds`. With require_single, throws
// SeedsDisconnected if the seeds lie in more than one component.
Subgraph component_of(const Graph& g, std::span<const Vertex> seeds, bool require_single = false);

// Component label per vertex, labels assigned in order of lowest vertex.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

struct TreeSplit {
    std::vector<Edge> tree;
    std::vector<Edge> extra;
};

// BFS spanning tree from vertex 0 (neighbours ascending). Throws
// InvalidInput when g is disconnected.
TreeSplit spanning_tree_split(const Graph& g);
// Same, but one BFS tree per component, each rooted at its lowest vertex.
TreeSplit spanning_forest_split(const Graph& g);

// Edge-list text format: "n m" then m lines "a b", a < b, lexicographic.
Graph read_edge_list(std::istream& in, const std::string& source = "<stream>");
void write_edge_list(std::ostream& out, const Graph& g);
Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

}  // namespace colcount
