#pragma once

#include "colcount/bigint.hpp"
#include "colcount/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace colcount::testing {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

// Uniform random labelled tree (Prüfer sequence).
Graph random_tree(int n, std::mt19937_64& rng);
// Random spanning tree plus `extra` additional random edges (capped at the
// number of non-edges).
Graph random_connected(int n, int extra, std::mt19937_64& rng);
// G(n, p) conditioned on nothing; may be disconnected.
Graph random_graph(int n, double p, std::mt19937_64& rng);

// One representative per isomorphism class of graphs on n <= 7 vertices.
std::vector<Graph> nonisomorphic_graphs(int n);

int diameter(const Graph& g);  // -1 when disconnected

// Pr[X(a) != X(b)] in the uniform proper k-colouring of g, by enumeration.
double brute_force_disagreement(const Graph& g, Vertex a, Vertex b, int k);

// Graph formed by the edges [0, i) of `edges`.
Graph prefix(int n, const std::vector<Edge>& edges, std::size_t i);

}  // namespace colcount::testing
