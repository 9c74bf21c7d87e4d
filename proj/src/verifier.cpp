#include "colcount/verifier.hpp"

#include "colcount/error.hpp"
#include "colcount/estimator.hpp"
#include "colcount/marginal.hpp"
#include "colcount/parallel.hpp"
#include "colcount/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace colcount {

namespace {

int ball_radius_for(int n, double d)
{
    const double log_n = std::log(static_cast<double>(std::max(1, n)));
    const double denom = 4.0 * std::log(std::numbers::e * std::numbers::e * d / 2.0);
    return std::max(1, static_cast<int>(std::floor(log_n / denom)));
}

double a_cap(double d)
{
    return 1.0 / (4.0 * std::log(std::numbers::e * std::numbers::e * d / 2.0));
}

int default_ell(int n, double d)
{
    return static_cast<int>(std::floor(std::log(static_cast<double>(std::max(1, n))) / (10.0 * std::log(d))));
}

}  // namespace

MembershipS membership_S(const Graph& g, double d, std::optional<int> ell, std::size_t cycle_cap)
{
    if (!(d > 1.0))
        throw Error(ErrorKind::InvalidParameter, "membership_S: need d > 1");
    MembershipS m;
    const int n = g.n();
    m.d = d;
    m.ell = ell ? *ell : default_ell(n, d);
    m.ball_radius = ball_radius_for(n, d);
    m.edge_bound = 3.0 * d * n / 4.0;
    m.edge_count_ok = static_cast<double>(g.m()) <= m.edge_bound;
    m.cycle_bound = std::pow(static_cast<double>(n), 0.3);
    try {
        m.short_cycle_count = short_cycle_edges(g, m.ell, cycle_cap).cycles.size();
        m.short_cycles_ok = static_cast<double>(m.short_cycle_count) <= m.cycle_bound;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded)
            throw;
        m.cycle_cap_hit = true;
        m.short_cycle_count = cycle_cap;
        m.short_cycles_ok = false;
    }
    m.balls_ok = true;
    for (Vertex v = 0; v < n && m.balls_ok; ++v) {
        const auto members = ball(g, std::span<const Vertex>(&v, 1), m.ball_radius);
        const auto sub = induced_subgraph(g, members);
        if (sub.graph.m() > static_cast<std::size_t>(sub.graph.n())) {
            m.balls_ok = false;
            m.bad_ball_centre = v;
        }
    }
    m.in_S = m.edge_count_ok && m.short_cycles_ok && m.balls_ok;
    return m;
}

PathSum path_sum_to_sphere(const Graph& h, Vertex root, int radius, int s, std::size_t cap)
{
    if (root < 0 || root >= h.n())
        throw Error(ErrorKind::InvalidParameter, "path_sum_to_sphere: root out of range");
    if (radius < 1)
        throw Error(ErrorKind::InvalidParameter, "path_sum_to_sphere: radius must be >= 1");
    const auto dist = bfs_distances(h, std::span<const Vertex>(&root, 1), radius);
    PathSum out;
    for (int x : dist)
        out.sphere_size += x == radius;

    auto q = [&](Vertex v) {
        const int deg = h.degree(v);
        return deg >= s ? 1.0 : 1.0 / static_cast<double>(s - deg);
    };

    double sum = 0.0, comp = 0.0;
    std::vector<char> on_path(static_cast<std::size_t>(h.n()), 0);
    // Iterative DFS: frame = (vertex, next neighbour slot, product so far).
    struct Frame {
        Vertex v;
        std::size_t next;
        double prob;
    };
    std::vector<Frame> stack{{root, 0, 1.0}};
    on_path[root] = 1;
    while (!stack.empty() && !out.cap_exceeded) {
        auto& top = stack.back();
        const auto nbrs = h.neighbours(top.v);
        if (top.next == nbrs.size()) {
            on_path[top.v] = 0;
            stack.pop_back();
            continue;
        }
        const Vertex w = nbrs[top.next++];
        if (on_path[w] || dist[w] < 0)
            continue;
        const double prob = top.prob * q(w);
        if (dist[w] == radius) {
            if (++out.path_count > cap) {
                out.cap_exceeded = true;
                break;
            }
            const double t = sum + prob;
            comp += std::abs(sum) >= std::abs(prob) ? (sum - t) + prob : (prob - t) + sum;
            sum = t;
            continue;
        }
        on_path[w] = 1;
        stack.push_back({w, 0, prob});
    }
    out.bound_sum = sum + comp;
    return out;
}

VerifierReport verify_concentration(const Graph& g, double d, int k, const VerifierConfig& config)
{
    if (k < 3 || k > kMaxColours)
        throw Error(ErrorKind::InvalidParameter, "verify_concentration: k must lie in [3, 64]");
    if (!(config.epsilon1 > 0.0))
        throw Error(ErrorKind::InvalidParameter, "verify_concentration: epsilon1 must be positive");

    VerifierReport rep;
    rep.n = g.n();
    rep.d = d;
    rep.k = k;
    rep.epsilon1 = config.epsilon1;
    rep.membership = membership_S(g, d, config.ell, config.cycle_cap);
    rep.first_moment = first_moment_formula(d, k);
    const double n = static_cast<double>(std::max(1, g.n()));
    rep.threshold = std::pow(n, -config.epsilon1);
    if (!rep.membership.in_S) {
        rep.reason = "not-in-S";
        return rep;
    }

    const auto seq = verification_sequence(g, rep.membership.ell, config.cycle_cap);
    const SequenceIndex index(g, seq);
    rep.cutoff = seq.cutoff;

    rep.exact_phase.resize(seq.cutoff);
    bool exact_ok = true;
    for (std::size_t i = 0; i < seq.cutoff; ++i) {
        const auto full = index.full_component(i);
        auto& rec = rep.exact_phase[i];
        rec.edge = seq.edges[i];
        rec.component_size = full.component.n();
        if (!brute_force_feasible(full.component, k, config.enumeration_budget)) {
            exact_ok = false;
            rec.p = std::nan("");
            continue;
        }
        const BigInt before = brute_force_count(full.component, k, config.enumeration_budget);
        const BigInt after = brute_force_count(full.component.with_edge(make_edge(full.anchor_v, full.anchor_u)), k,
                                               config.enumeration_budget);
        if (before == 0)
            throw Error(ErrorKind::UncolourableComponent, "short-cycle component has no proper colouring");
        rec.p = ratio_to_double(after, before);
    }

    const double log_n = std::log(n);
    const double cap = a_cap(d);
    const std::size_t phase2 = seq.size() - seq.cutoff;
    rep.path_phase.resize(phase2);
    parallel_for(phase2, config.threads, [&](std::size_t j) {
        const Edge e = seq.edges[seq.cutoff + j];
        const Graph h = g.without_edge(e);
        auto& rec = rep.path_phase[j];
        rec.edge = e;
        const Vertex root = e.a;
        rec.distance = bfs_distances(h, std::span<const Vertex>(&root, 1))[e.b];
        rec.a = rec.distance < 0 || log_n == 0.0 ? cap : std::min(rec.distance / log_n, cap);
        rec.radius = static_cast<int>(std::floor(rec.a * log_n));
        if (rec.radius < 1) {
            rec.radius = 1;
            rec.radius_clamped = true;
        }
        const auto ps = path_sum_to_sphere(h, root, rec.radius, k, config.path_cap);
        rec.path_count = ps.path_count;
        rec.sphere_size = ps.sphere_size;
        rec.bound_sum = ps.bound_sum;
        rec.cap_exceeded = ps.cap_exceeded;
        rec.pass = !ps.cap_exceeded && ps.bound_sum <= rep.threshold;
    });

    bool all_pass = true, cap_hit = false;
    std::size_t clamped = 0;
    for (const auto& rec : rep.path_phase) {
        rep.max_bound = std::max(rep.max_bound, rec.bound_sum);
        all_pass = all_pass && rec.pass;
        cap_hit = cap_hit || rec.cap_exceeded;
        clamped += rec.radius_clamped;
    }
    if (clamped > 0)
        rep.warnings.push_back("degenerate-radius: " + std::to_string(clamped) +
                               " path-phase radii clamped to 1");
    if (rep.membership.ball_radius == 1 &&
        std::floor(log_n / (4.0 * std::log(std::numbers::e * std::numbers::e * d / 2.0))) < 1.0)
        rep.warnings.push_back("degenerate-radius: ball radius clamped to 1");

    const double k4 = std::pow(static_cast<double>(k), 4);
    rep.implied_h = 2.0 * k4 * static_cast<double>(phase2) * rep.threshold / n;

    if (!exact_ok)
        rep.reason = "exact-phase-infeasible";
    else if (cap_hit)
        rep.reason = "path-cap-exceeded";
    else if (!all_pass)
        rep.reason = "criterion-failed";
    else
        rep.reason = "certified";
    rep.verdict = rep.reason == "certified";
    return rep;
}

}  // namespace colcount
