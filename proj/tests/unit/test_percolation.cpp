#include "corpus.hpp"

#include "colcount/error.hpp"
#include "colcount/oracles.hpp"
#include "colcount/percolation.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace colcount;
using namespace colcount::testing;

TEST_CASE("DisagreementConfig follows the degree rule")
{
    const Graph p = path_graph(3);
    const auto cfg = DisagreementConfig::from_degrees(p, 5, 0);
    CHECK(cfg.q(0) == 1.0);
    CHECK(cfg.q(1) == doctest::Approx(1.0 / 3.0));
    CHECK(cfg.q(2) == doctest::Approx(1.0 / 4.0));
    const auto tight = DisagreementConfig::from_degrees(star_graph(4), 3, 1);
    CHECK(tight.q(0) == 1.0);
    CHECK_THROWS_AS(DisagreementConfig(0, {1.0, 0.0}), Error);
}

TEST_CASE("path_disagreement_probability examples")
{
    const Graph p = path_graph(3);
    const auto cfg = DisagreementConfig::from_degrees(p, 5, 0);
    const std::vector<Vertex> root{0};
    CHECK(path_disagreement_probability(p, cfg, root) == 1.0);
    // Interior degrees 2 with s = 5 give 1/3 each.
    const DisagreementConfig thirds(0, {1.0, 1.0 / 3, 1.0 / 3}, 5);
    const std::vector<Vertex> all{0, 1, 2};
    CHECK(path_disagreement_probability(p, thirds, all) == doctest::Approx(1.0 / 9.0));
    const auto hub = DisagreementConfig::from_degrees(star_graph(4), 3, 1);
    const std::vector<Vertex> via_hub{1, 0, 2};
    CHECK(path_disagreement_probability(star_graph(4), hub, via_hub) == doctest::Approx(1.0 / 2.0));

    const std::vector<Vertex> repeat{0, 1, 0};
    CHECK_THROWS_AS(path_disagreement_probability(p, cfg, repeat), Error);
    const std::vector<Vertex> wrong_start{1, 2};
    CHECK_THROWS_AS(path_disagreement_probability(p, cfg, wrong_start), Error);
    const std::vector<Vertex> jump{0, 2};
    CHECK_THROWS_AS(path_disagreement_probability(p, cfg, jump), Error);
}

TEST_CASE("percolation_probability_exact examples")
{
    const Graph p = path_graph(3);
    const DisagreementConfig thirds(0, {1.0, 1.0 / 3, 1.0 / 3}, 5);
    const std::vector<Vertex> root{0}, end{2};
    CHECK(percolation_probability_exact(p, thirds, root) == 1.0);
    CHECK(percolation_probability_exact(p, thirds, end) == doctest::Approx(1.0 / 9.0));
    const Graph split(4, {{0, 1}, {2, 3}});
    const auto cfg = DisagreementConfig::from_degrees(split, 3, 0);
    const std::vector<Vertex> other{3};
    CHECK(percolation_probability_exact(split, cfg, other) == 0.0);
    const Graph big = path_graph(30);
    const std::vector<Vertex> far{29};
    CHECK_THROWS_AS(percolation_probability_exact(big, DisagreementConfig::from_degrees(big, 5, 0), far), Error);
}

TEST_CASE("exact percolation matches a union over simple paths on a cycle")
{
    // On C_4 rooted at 0 with target {2}: two disjoint routes 0-1-2, 0-3-2.
    const Graph c4 = cycle_graph(4);
    const auto cfg = DisagreementConfig::from_degrees(c4, 5, 0);  // q = 1/3 off the root
    const double route = (1.0 / 3) * (1.0 / 3);
    const double expected = 1.0 / 3 * (1 - (1 - 1.0 / 3) * (1 - 1.0 / 3));
    const std::vector<Vertex> target{2};
    CHECK(percolation_probability_exact(c4, cfg, target) == doctest::Approx(expected));
    CHECK(expected < 2 * route);
}

TEST_CASE("percolation_probability_mc examples")
{
    const Graph p = path_graph(3);
    const DisagreementConfig ones(0, {1.0, 1.0, 1.0});
    const std::vector<Vertex> end{2};
    CHECK(percolation_probability_mc(p, ones, end, 1000, 1).estimate == 1.0);
    const Graph split(4, {{0, 1}, {2, 3}});
    const std::vector<Vertex> other{3};
    CHECK(percolation_probability_mc(split, DisagreementConfig::from_degrees(split, 3, 0), other, 1000, 1).estimate ==
          0.0);
    const DisagreementConfig thirds(0, {1.0, 1.0 / 3, 1.0 / 3}, 5);
    const auto mc = percolation_probability_mc(p, thirds, end, 1'000'000, 2024, 4);
    CHECK(std::abs(mc.estimate - 1.0 / 9.0) <= 0.002);
    CHECK_THROWS_AS(percolation_probability_mc(p, thirds, end, 0, 1), Error);
}

TEST_CASE("Monte Carlo is independent of the thread count")
{
    const Graph c = cycle_graph(8);
    const auto cfg = DisagreementConfig::from_degrees(c, 3, 0);
    const std::vector<Vertex> target{4};
    const auto a = percolation_probability_mc(c, cfg, target, 300'000, 77, 1);
    const auto b = percolation_probability_mc(c, cfg, target, 300'000, 77, 8);
    CHECK(a.hits == b.hits);
    CHECK(a.estimate == b.estimate);
}

TEST_CASE("exact and Monte Carlo percolation agree within four standard errors")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 8);
        const Graph g = random_connected(n, static_cast<int>(rng() % 4), rng);
        const int s = 3 + static_cast<int>(rng() % 3);
        const auto cfg = DisagreementConfig::from_degrees(g, s, 0);
        const std::vector<Vertex> target{n - 1};
        const double exact = percolation_probability_exact(g, cfg, target);
        const auto mc = percolation_probability_mc(g, cfg, target, 1'000'000, 100 + trial, 4);
        const double se = std::sqrt(std::max(exact * (1 - exact), 1e-12) / 1e6);
        CHECK(std::abs(mc.estimate - exact) <= 4 * se + 1e-9);
    }
}

TEST_CASE("q never increases when edges are removed")
{
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected(8, 3, rng);
        const Edge e = g.edges()[rng() % g.m()];
        const Graph h = g.without_edge(e);
        for (int s = 2; s <= 6; ++s) {
            const auto full = DisagreementConfig::from_degrees(g, s, 0);
            const auto less = DisagreementConfig::from_degrees(h, s, 0);
            for (Vertex v = 0; v < g.n(); ++v)
                CHECK(less.q(v) <= full.q(v));
        }
    }
}

TEST_CASE("coupling_map_T examples")
{
    const Graph iso(3);
    const Colouring xi{0, 0, 1};
    CHECK(coupling_map_T(iso, 0, 0, 1, xi, 3) == Colouring{1, 0, 1});
    const Graph edge = path_graph(2);
    CHECK(coupling_map_T(edge, 0, 0, 1, Colouring{0, 1}, 3) == Colouring{1, 0});
    CHECK(coupling_map_T(edge, 0, 0, 2, Colouring{0, 1}, 3) == Colouring{2, 1});
    CHECK_THROWS_AS(coupling_map_T(edge, 0, 0, 1, Colouring{0, 0}, 3), Error);
    CHECK_THROWS_AS(coupling_map_T(edge, 0, 1, 2, Colouring{0, 1}, 3), Error);
    CHECK_THROWS_AS(coupling_map_T(edge, 0, 0, 0, Colouring{0, 1}, 3), Error);
}

TEST_CASE("coupling_map_T is an involution with proper output")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = random_connected(6, static_cast<int>(rng() % 4), rng);
        for (const auto& xi : enumerate_proper_colourings(g, 4)) {
            const Vertex x = static_cast<Vertex>(rng() % 6);
            const int sigma = xi[x];
            const int eta = (sigma + 1 + static_cast<int>(rng() % 3)) % 4;
            const auto out = coupling_map_T(g, x, sigma, eta, xi, 4);
            CHECK(out[x] == eta);
            for (const auto& e : g.edges())
                CHECK(out[e.a] != out[e.b]);
            CHECK(coupling_map_T(g, x, eta, sigma, out, 4) == xi);
        }
    }
}

TEST_CASE("tv_vs_percolation_check examples")
{
    const std::vector<Vertex> none;
    const auto empty = tv_vs_percolation_check(cycle_graph(5), 0, none, 4);
    CHECK(empty.tv_max == 0.0);
    CHECK(empty.holds);

    const Graph iso(4, {{1, 2}, {2, 3}});
    const std::vector<Vertex> lam{3};
    CHECK(tv_vs_percolation_check(iso, 0, lam, 3).tv_max == 0.0);

    const std::vector<Vertex> antipodal{2, 3};
    const auto c5 = tv_vs_percolation_check(cycle_graph(5), 0, antipodal, 4);
    CHECK(c5.holds);
    CHECK(c5.tv_max > 0.0);

    CHECK(tv_vs_percolation_check(complete_graph(4), 0, lam, 3).empty_support);
}

TEST_CASE("tv_vs_percolation_sweep on small graphs")
{
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_connected(6, static_cast<int>(rng() % 3), rng);
        const auto sweep = tv_vs_percolation_sweep(g, 4, 2);
        CHECK(sweep.violations == 0);
        CHECK(sweep.checked == 6 * (1 + 6 + 15));
    }
}
