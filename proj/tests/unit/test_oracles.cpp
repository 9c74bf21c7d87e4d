#include "corpus.hpp"

#include "colcount/error.hpp"
#include "colcount/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace colcount;
using namespace colcount::testing;

TEST_CASE("brute_force_count examples")
{
    CHECK(brute_force_count(complete_graph(3), 3) == 6);
    CHECK(brute_force_count(cycle_graph(4), 3) == 18);
    CHECK(brute_force_count(Graph(5), 4) == 1024);
    CHECK(brute_force_count(complete_graph(4), 3) == 0);
    CHECK_THROWS_AS(brute_force_count(path_graph(20), 3, 1000), Error);
    CHECK_FALSE(brute_force_feasible(path_graph(20), 3, 1000));
}

TEST_CASE("enumeration visits exactly the proper colourings")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph g = random_graph(n, 0.5, rng);
        const auto all = enumerate_proper_colourings(g, 3);
        long long raw = 0;
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        const long long total = static_cast<long long>(std::pow(3, n));
        for (long long code = 0; code < total; ++code) {
            long long x = code;
            for (int v = 0; v < n; ++v, x /= 3)
                c[v] = static_cast<int>(x % 3);
            bool ok = true;
            for (const auto& e : g.edges())
                ok = ok && c[e.a] != c[e.b];
            raw += ok;
        }
        CHECK(static_cast<long long>(all.size()) == raw);
        CHECK(brute_force_count(g, 3) == raw);
    }
}

TEST_CASE("chromatic_polynomial examples")
{
    const auto tri = chromatic_polynomial(complete_graph(3));
    for (long long k = 0; k <= 6; ++k) {
        CHECK(tri.evaluate(k) == k * (k - 1) * (k - 2));
        CHECK(chromatic_polynomial(cycle_graph(4)).evaluate(k) == (k - 1) * (k - 1) * (k - 1) * (k - 1) + (k - 1));
    }
    std::mt19937_64 rng(5);
    const Graph t = random_tree(6, rng);
    const auto pt = chromatic_polynomial(t);
    CHECK(pt.degree() == 6);
    for (long long k = 0; k <= 5; ++k)
        CHECK(pt.evaluate(k) == k * (k - 1) * (k - 1) * (k - 1) * (k - 1) * (k - 1));
    CHECK_THROWS_AS(chromatic_polynomial(complete_graph(8), 16), Error);
}

TEST_CASE("chromatic polynomial agrees with enumeration")
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = random_graph(n, 0.45, rng);
        const auto p = chromatic_polynomial(g);
        CHECK(p.degree() == n);
        CHECK(p.coefficients().back() == 1);
        for (int k = 0; k <= 5; ++k)
            CHECK(p.evaluate(k) == brute_force_count(g, k));
    }
}

TEST_CASE("exact_joint_marginals examples")
{
    const Graph tri = complete_graph(3);
    const std::vector<Vertex> x{0};
    const auto uni = exact_joint_marginals(tri, {}, x, 3);
    for (int c = 0; c < 3; ++c) {
        const int cell[1] = {c};
        CHECK(uni.at(cell) == doctest::Approx(1.0 / 3.0));
    }

    const std::vector<Pin> pin{{0, 0}};
    const std::vector<Vertex> y{1};
    const auto edge = exact_joint_marginals(path_graph(2), pin, y, 3);
    CHECK(edge.probs == std::vector<double>{0.0, 0.5, 0.5});

    const std::vector<Vertex> y2{2};
    const auto path = exact_joint_marginals(path_graph(3), pin, y2, 3);
    CHECK(path.probs[0] == doctest::Approx(0.5));
    CHECK(path.probs[1] == doctest::Approx(0.25));
    CHECK(path.probs[2] == doctest::Approx(0.25));

    const std::vector<Pin> clash{{0, 0}, {1, 0}};
    CHECK(exact_joint_marginals(path_graph(2), clash, y, 3).empty_support);
}

TEST_CASE("marginal tables sum to one and are colour-equivariant")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Graph g = random_connected(n, 1, rng);
        const std::vector<Vertex> targets{n - 1, n - 2};
        const std::vector<Pin> p0{{0, 0}};
        const std::vector<Pin> p1{{0, 1}};
        const auto a = exact_joint_marginals(g, p0, targets, 4);
        const auto b = exact_joint_marginals(g, p1, targets, 4);
        double sum = 0.0;
        for (double p : a.probs) {
            CHECK(p >= 0.0);
            sum += p;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        const int swap[4] = {1, 0, 2, 3};
        for (int c0 = 0; c0 < 4; ++c0)
            for (int c1 = 0; c1 < 4; ++c1) {
                const int ca[2] = {c0, c1};
                const int cb[2] = {swap[c0], swap[c1]};
                CHECK(a.at(ca) == doctest::Approx(b.at(cb)).epsilon(1e-12));
            }
    }
}

TEST_CASE("exact_tv examples and properties")
{
    const std::vector<Vertex> y{1};
    const std::vector<Vertex> none;
    CHECK(*exact_tv(path_graph(2), 0, 0, 1, y, 3) == doctest::Approx(0.5));
    CHECK(*exact_tv(path_graph(3), 0, 0, 1, none, 3) == 0.0);
    CHECK(*exact_tv(path_graph(3), 0, 2, 2, y, 3) == 0.0);
    CHECK_FALSE(exact_tv(complete_graph(3), 0, 0, 1, y, 2).has_value());

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected(6, 2, rng);
        const std::vector<Vertex> lambda{4, 5};
        const double ab = *exact_tv(g, 0, 0, 1, lambda, 4);
        const double ba = *exact_tv(g, 0, 1, 0, lambda, 4);
        const double ac = *exact_tv(g, 0, 0, 2, lambda, 4);
        const double cb = *exact_tv(g, 0, 2, 1, lambda, 4);
        CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(ab <= ac + cb + 1e-12);
    }
}

TEST_CASE("decay_profile examples")
{
    for (const auto& r : decay_profile(star_graph(4), 0, 3, 3)) {
        if (r.t >= 2) {
            CHECK(r.sphere_size == 0);
            CHECK(r.reconstruction_tv == 0.0);
            CHECK(r.pairwise_tv == 0.0);
            CHECK(r.weighted_tv == 0.0);
        }
    }
    for (const auto& r : decay_profile(Graph(4), 0, 3, 2)) {
        CHECK(r.reconstruction_tv == 0.0);
        CHECK(r.pairwise_tv == 0.0);
        CHECK(r.weighted_tv == 0.0);
    }
    const auto c6 = decay_profile(cycle_graph(6), 0, 4, 3);
    CHECK(c6.size() == 3);
    CHECK(c6[2].sphere_size == 1);
    CHECK(c6[2].pairwise_tv > 0.0);
    for (const auto& r : c6)
        CHECK(r.pairwise_tv <= 2 * 4 * r.weighted_tv + 1e-12);
    CHECK_THROWS_AS(decay_profile(complete_graph(4), 0, 3, 1), Error);
}

TEST_CASE("pairwise decay is at most 2k times the weighted decay on random small graphs")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected(7, static_cast<int>(rng() % 3), rng);
        for (int k : {3, 4}) {
            try {
                for (const auto& r : decay_profile(g, 0, k, 3))
                    CHECK(r.pairwise_tv <= 2 * k * r.weighted_tv + 1e-12);
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::EmptySupport);
            }
        }
    }
}

TEST_CASE("greedy colouring and Glauber sampler")
{
    CHECK_THROWS_AS(greedy_colouring(complete_graph(4), 3), Error);
    const Graph c5 = cycle_graph(5);
    const auto c = glauber_sampler(c5, 4, 10, 1);
    for (const auto& e : c5.edges())
        CHECK(c[e.a] != c[e.b]);
    CHECK(c == glauber_sampler(c5, 4, 10, 1));

    const auto edge = glauber_disagreement(path_graph(2), 3, 0, 1, 1000, 10, 3);
    CHECK(edge.p_diff == 1.0);

    const auto est = glauber_disagreement(c5, 4, 0, 2, 200000, 1000, 7);
    CHECK(std::abs(est.p_diff - brute_force_disagreement(c5, 0, 2, 4)) <= 3.0 * est.std_error + 1e-3);
}
