#include "corpus.hpp"

#include "colcount/error.hpp"
#include "colcount/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

using namespace colcount;
using namespace colcount::testing;

namespace {

std::vector<Vertex> sorted(std::vector<Vertex> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Vertex> one(Vertex v)
{
    return {v};
}

// Every vertex subset inducing a connected 2-regular subgraph on a cycle
// ordering; enumerates cycles by brute force over subsets and orderings.
std::set<std::vector<Vertex>> brute_force_cycles(const Graph& g, int ell)
{
    std::set<std::vector<Vertex>> out;
    const int n = g.n();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size < 3 || size > ell)
            continue;
        std::vector<Vertex> verts;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u)
                verts.push_back(v);
        // Fix the first vertex; try every ordering of the rest.
        std::vector<Vertex> rest(verts.begin() + 1, verts.end());
        do {
            if (rest.front() > rest.back())
                continue;
            std::vector<Vertex> cyc{verts[0]};
            cyc.insert(cyc.end(), rest.begin(), rest.end());
            bool ok = true;
            for (std::size_t i = 0; i < cyc.size() && ok; ++i)
                ok = g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
            if (ok)
                out.insert(cyc);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

}  // namespace

TEST_CASE("graph construction canonicalises and validates")
{
    const Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
    CHECK(g.degree(1) == 1);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.edge_index({1, 2}) == 1);
    CHECK(g.edge_index({0, 1}) == g.m());
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
}

TEST_CASE("adjacency is symmetric and degrees sum to twice the edge count")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(9, 0.4, rng);
        std::size_t degree_sum = 0;
        for (Vertex v = 0; v < g.n(); ++v) {
            degree_sum += static_cast<std::size_t>(g.degree(v));
            const auto nb = g.neighbours(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (Vertex w : nb)
                CHECK(g.has_edge(w, v));
        }
        CHECK(degree_sum == 2 * g.m());
    }
}

TEST_CASE("generate_gnp examples")
{
    CHECK(generate_gnp(4, 0.0, 7).m() == 0);
    CHECK(generate_gnp_probability(3, 1.0, 1) == complete_graph(3));
    const Graph g = generate_gnp(50, 3.0, 42);
    CHECK(g.m() >= 25);
    CHECK(g.m() <= 125);
    CHECK(g == generate_gnp(50, 3.0, 42));
    CHECK_THROWS_AS(generate_gnp(5, 5.0, 1), Error);
    CHECK_THROWS_AS(generate_gnp(5, -1.0, 1), Error);
}

TEST_CASE("generate_gnp matches a replay of the documented stream")
{
    const int n = 100;
    const double d = 3.0;
    std::mt19937_64 rng(9);
    std::vector<Edge> expected;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < d / n)
                expected.push_back({i, j});
    CHECK(generate_gnp(n, d, 9).edges() == expected);
}

TEST_CASE("ball and sphere examples")
{
    const Graph p = path_graph(4);
    CHECK(sorted(ball(p, one(0), 0)) == std::vector<Vertex>{0});
    CHECK(sorted(ball(p, one(0), 2)) == std::vector<Vertex>{0, 1, 2});
    const std::vector<Vertex> pair{0, 1};
    CHECK(sorted(ball(complete_graph(3), pair, 1)) == std::vector<Vertex>{0, 1, 2});
    CHECK(sorted(sphere(p, one(0), 2)) == std::vector<Vertex>{2});
    CHECK(sorted(sphere(p, one(0), 0)) == std::vector<Vertex>{0});
    CHECK(sorted(sphere(star_graph(4), one(0), 1)) == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("spheres partition the ball")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(10, 0.25, rng);
        const auto c = one(static_cast<Vertex>(rng() % 10));
        for (int t = 0; t <= 4; ++t) {
            std::vector<Vertex> uni;
            for (int s = 0; s <= t; ++s) {
                const auto sp = sphere(g, c, s);
                uni.insert(uni.end(), sp.begin(), sp.end());
            }
            const auto b = sorted(ball(g, c, t));
            CHECK(sorted(uni) == b);
            CHECK(std::set<Vertex>(uni.begin(), uni.end()).size() == uni.size());
        }
    }
}

TEST_CASE("short_cycle_edges examples")
{
    const Graph tri = complete_graph(3);
    const auto c3 = short_cycle_edges(tri, 3);
    CHECK(c3.cycles.size() == 1);
    for (std::size_t e = 0; e < tri.m(); ++e)
        CHECK(c3.edge_on_cycle[e]);
    CHECK(short_cycle_edges(tri, 2).cycles.empty());

    const Graph two(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    const auto c = short_cycle_edges(two, 3);
    CHECK(c.cycles.size() == 2);
    CHECK_FALSE(c.on_short_cycle(two, {2, 3}));
    CHECK(c.on_short_cycle(two, {4, 5}));
}

TEST_CASE("short_cycle_edges matches subset enumeration on small graphs")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Graph g = random_graph(n, 0.5, rng);
        for (int ell : {0, 3, 4, 5, 8}) {
            const auto found = short_cycle_edges(g, ell);
            const auto expected = brute_force_cycles(g, ell);
            CHECK(std::set<std::vector<Vertex>>(found.cycles.begin(), found.cycles.end()) == expected);
            CHECK(found.cycles.size() == expected.size());
        }
    }
}

TEST_CASE("short_cycle_edges fails loudly over the cap")
{
    CHECK_THROWS_AS(short_cycle_edges(complete_graph(7), 7, 10), Error);
}

TEST_CASE("component_of examples")
{
    const Graph two(4, {{0, 1}, {2, 3}});
    const auto s = component_of(two, one(0));
    CHECK(s.graph.n() == 2);
    CHECK(s.graph.m() == 1);
    CHECK(s.to_parent == std::vector<Vertex>{0, 1});
    CHECK(s.from_parent[2] == -1);

    const Graph tri_iso(4, {{0, 1}, {0, 2}, {1, 2}});
    const auto iso = component_of(tri_iso, one(3));
    CHECK(iso.graph.n() == 1);
    CHECK(iso.graph.m() == 0);

    const Graph p = path_graph(5);
    CHECK(component_of(p, one(2)).graph.n() == 5);

    const std::vector<Vertex> both{0, 2};
    CHECK_THROWS_AS(component_of(two, both, true), Error);
    CHECK(component_of(two, both, false).graph.n() == 4);
}

TEST_CASE("spanning_tree_split examples")
{
    std::mt19937_64 rng(1);
    const Graph t = random_tree(9, rng);
    const auto ts = spanning_tree_split(t);
    CHECK(ts.tree.size() == 8);
    CHECK(ts.extra.empty());

    const auto c5 = spanning_tree_split(cycle_graph(5));
    CHECK(c5.tree.size() == 4);
    CHECK(c5.extra.size() == 1);

    const auto k4 = spanning_tree_split(complete_graph(4));
    CHECK(k4.tree.size() == 3);
    CHECK(k4.extra.size() == 3);

    CHECK_THROWS_AS(spanning_tree_split(Graph(3, {{0, 1}})), Error);
}

TEST_CASE("spanning tree is a connected acyclic cover")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = random_connected(n, static_cast<int>(rng() % 6), rng);
        const auto split = spanning_tree_split(g);
        const Graph tree(n, split.tree);
        CHECK(is_connected(tree));
        CHECK(is_forest(tree));
        CHECK(split.extra.size() == g.m() - static_cast<std::size_t>(n) + 1);
    }
}

TEST_CASE("edge-list round trip and strict parsing")
{
    std::mt19937_64 rng(23);
    const Graph g = random_graph(12, 0.3, rng);
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(read_edge_list(ss) == g);

    std::stringstream empty("4 0\n");
    CHECK(read_edge_list(empty) == Graph(4));

    auto parse_error_line = [](const std::string& text) -> std::string {
        std::stringstream in(text);
        try {
            read_edge_list(in, "f");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Parse);
            return e.what();
        }
        return "";
    };
    CHECK(parse_error_line("3 2\n0 1\n1 x\n").find("f:3") != std::string::npos);
    CHECK(parse_error_line("3 2\n1 2\n0 1\n").find("f:3") != std::string::npos);
    CHECK(parse_error_line("3 1\n2 1\n").find("f:2") != std::string::npos);
    CHECK(parse_error_line("3 2\n0 1\n").find("f:") != std::string::npos);
    CHECK(parse_error_line("3 1\n0 3\n").find("f:2") != std::string::npos);
    CHECK(parse_error_line("").find("f:1") != std::string::npos);
}

TEST_CASE("load_edge_list reports missing files as I/O errors")
{
    try {
        load_edge_list("/nonexistent/graph.txt");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Io);
        CHECK(std::string(e.what()).find("/nonexistent/graph.txt") != std::string::npos);
    }
}
