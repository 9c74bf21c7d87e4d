#include "colcount/percolation.hpp"

#include "colcount/error.hpp"
#include "colcount/parallel.hpp"
#include "colcount/rng.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace colcount {

DisagreementConfig DisagreementConfig::from_degrees(const Graph& g, int s, Vertex root)
{
    if (root < 0 || root >= g.n())
        throw Error(ErrorKind::InvalidParameter, "disagreement config: root out of range");
    std::vector<double> q(static_cast<std::size_t>(g.n()), 1.0);
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) < s)
            q[v] = 1.0 / static_cast<double>(s - g.degree(v));
    return DisagreementConfig(root, std::move(q), s);
}

DisagreementConfig::DisagreementConfig(Vertex root, std::vector<double> q, int s)
    : root_(root), s_(s), q_(std::move(q))
{
    if (root < 0 || static_cast<std::size_t>(root) >= q_.size())
        throw Error(ErrorKind::InvalidParameter, "disagreement config: root out of range");
    for (double p : q_)
        if (!(p > 0.0 && p <= 1.0))
            throw Error(ErrorKind::InvalidParameter, "disagreement config: q(v) must lie in (0, 1]");
    q_[root] = 1.0;
}

namespace {

void check_size(const Graph& g, const DisagreementConfig& cfg)
{
    if (cfg.size() != static_cast<std::size_t>(g.n()))
        throw Error(ErrorKind::InvalidParameter, "disagreement config does not match graph size");
}

std::vector<char> membership(const Graph& g, std::span<const Vertex> set)
{
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : set) {
        if (v < 0 || v >= g.n())
            throw Error(ErrorKind::InvalidParameter, "vertex out of range");
        in[v] = 1;
    }
    return in;
}

}  // namespace

double path_disagreement_probability(const Graph& g, const DisagreementConfig& cfg, std::span<const Vertex> path)
{
    check_size(g, cfg);
    if (path.empty() || path.front() != cfg.root())
        throw Error(ErrorKind::InvalidInput, "path must start at the root");
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    double prob = 1.0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Vertex v = path[i];
        if (v < 0 || v >= g.n() || seen[v])
            throw Error(ErrorKind::InvalidInput, "path is not simple");
        if (i > 0 && !g.has_edge(path[i - 1], v))
            throw Error(ErrorKind::InvalidInput, "consecutive path vertices are not adjacent");
        seen[v] = 1;
        prob *= cfg.q(v);
    }
    return prob;
}

double percolation_probability_exact(const Graph& g, const DisagreementConfig& cfg, std::span<const Vertex> target,
                                     int cap)
{
    check_size(g, cfg);
    const auto is_target = membership(g, target);
    const Vertex root = cfg.root();
    if (is_target[root])
        return 1.0;

    const auto dist = bfs_distances(g, std::span<const Vertex>(&root, 1));
    bool reachable = false;
    std::vector<Vertex> free;
    std::vector<int> free_slot(static_cast<std::size_t>(g.n()), -1);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (dist[v] < 0)
            continue;
        reachable = reachable || is_target[v];
        if (v != root && cfg.q(v) < 1.0) {
            free_slot[v] = static_cast<int>(free.size());
            free.push_back(v);
        }
    }
    if (!reachable)
        return 0.0;
    if (static_cast<int>(free.size()) > cap)
        throw Error(ErrorKind::BudgetExceeded, "percolation_probability_exact: " + std::to_string(free.size()) +
                                                   " free vertices exceed cap " + std::to_string(cap));

    std::vector<Vertex> stack;
    std::vector<char> visited(static_cast<std::size_t>(g.n()), 0);
    double sum = 0.0, comp = 0.0;
    const std::uint64_t patterns = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        auto on = [&](Vertex v) {
            const int slot = free_slot[v];
            return slot < 0 || (mask >> slot & 1u);
        };
        std::fill(visited.begin(), visited.end(), 0);
        stack.assign(1, root);
        visited[root] = 1;
        bool hit = false;
        while (!stack.empty() && !hit) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbours(v)) {
                if (visited[w] || !on(w))
                    continue;
                if (is_target[w]) {
                    hit = true;
                    break;
                }
                visited[w] = 1;
                stack.push_back(w);
            }
        }
        if (!hit)
            continue;
        double weight = 1.0;
        for (std::size_t j = 0; j < free.size(); ++j)
            weight *= (mask >> j & 1u) ? cfg.q(free[j]) : 1.0 - cfg.q(free[j]);
        // Neumaier summation
        const double t = sum + weight;
        comp += std::abs(sum) >= std::abs(weight) ? (sum - t) + weight : (weight - t) + sum;
        sum = t;
    }
    return sum + comp;
}

McEstimate percolation_probability_mc(const Graph& g, const DisagreementConfig& cfg, std::span<const Vertex> target,
                                      std::uint64_t samples, std::uint64_t seed, unsigned threads)
{
    check_size(g, cfg);
    if (samples == 0)
        throw Error(ErrorKind::InvalidParameter, "percolation_probability_mc: need at least one sample");
    const auto is_target = membership(g, target);
    const Vertex root = cfg.root();

    constexpr std::uint64_t kShard = 1u << 16;
    const std::uint64_t shards = (samples + kShard - 1) / kShard;
    std::vector<std::uint64_t> shard_hits(static_cast<std::size_t>(shards), 0);

    parallel_for(static_cast<std::size_t>(shards), threads, [&](std::size_t s) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(s))));
        const std::uint64_t begin = s * kShard;
        const std::uint64_t count = std::min(kShard, samples - begin);
        // stamp[v] == epoch marks v as decided in this sample
        std::vector<std::uint64_t> stamp(static_cast<std::size_t>(g.n()), 0);
        std::vector<char> state(static_cast<std::size_t>(g.n()), 0);
        std::vector<Vertex> stack;
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::uint64_t epoch = i + 1;
            if (is_target[root]) {
                ++hits;
                continue;
            }
            stamp[root] = epoch;
            state[root] = 1;
            stack.assign(1, root);
            bool hit = false;
            while (!stack.empty() && !hit) {
                const Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : g.neighbours(v)) {
                    if (stamp[w] == epoch)
                        continue;
                    stamp[w] = epoch;
                    state[w] = bernoulli(rng, cfg.q(w));
                    if (!state[w])
                        continue;
                    if (is_target[w]) {
                        hit = true;
                        break;
                    }
                    stack.push_back(w);
                }
            }
            hits += hit;
        }
        shard_hits[s] = hits;
    });

    McEstimate est;
    est.samples = samples;
    for (auto h : shard_hits)
        est.hits += h;
    est.estimate = static_cast<double>(est.hits) / static_cast<double>(samples);
    est.half_width_95 = 1.96 * std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
    return est;
}

Colouring coupling_map_T(const Graph& g, Vertex x, int sigma, int eta, const Colouring& xi, int k)
{
    if (static_cast<int>(xi.size()) != g.n())
        throw Error(ErrorKind::InvalidInput, "coupling_map_T: colouring size mismatch");
    if (x < 0 || x >= g.n())
        throw Error(ErrorKind::InvalidInput, "coupling_map_T: vertex out of range");
    if (sigma == eta || sigma < 0 || sigma >= k || eta < 0 || eta >= k)
        throw Error(ErrorKind::InvalidInput, "coupling_map_T: need distinct colours sigma, eta in [0, k)");
    for (int c : xi)
        if (c < 0 || c >= k)
            throw Error(ErrorKind::InvalidInput, "coupling_map_T: colour out of range");
    for (const auto& e : g.edges())
        if (xi[e.a] == xi[e.b])
            throw Error(ErrorKind::InvalidInput, "coupling_map_T: colouring is not proper");
    if (xi[x] != sigma)
        throw Error(ErrorKind::InvalidInput, "coupling_map_T: xi(x) must equal sigma");

    Colouring out = xi;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<Vertex> stack{x};
    seen[x] = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        out[v] = xi[v] == sigma ? eta : sigma;
        for (Vertex w : g.neighbours(v)) {
            if (!seen[w] && (xi[w] == sigma || xi[w] == eta)) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return out;
}

namespace {

// counts[c][A]: colourings with x = c and lambda-assignment A.
double max_tv_from_colourings(const std::vector<Colouring>& colourings, Vertex x, std::span<const Vertex> lambda,
                              int k)
{
    std::map<std::vector<int>, std::vector<double>> joint;
    std::vector<double> x_count(static_cast<std::size_t>(k), 0.0);
    std::vector<int> key(lambda.size());
    for (const auto& col : colourings) {
        for (std::size_t i = 0; i < lambda.size(); ++i)
            key[i] = col[lambda[i]];
        auto& row = joint[key];
        if (row.empty())
            row.assign(static_cast<std::size_t>(k), 0.0);
        row[col[x]] += 1.0;
        x_count[col[x]] += 1.0;
    }
    double best = 0.0;
    for (int s = 0; s < k; ++s) {
        for (int e = s + 1; e < k; ++e) {
            if (x_count[s] == 0.0 || x_count[e] == 0.0)
                continue;
            double l1 = 0.0;
            for (const auto& [assignment, row] : joint)
                l1 += std::abs(row[s] / x_count[s] - row[e] / x_count[e]);
            best = std::max(best, 0.5 * l1);
        }
    }
    return best;
}

}  // namespace

TvPercolationCheck tv_vs_percolation_check(const Graph& g, Vertex x, std::span<const Vertex> lambda, int k,
                                           std::uint64_t budget)
{
    if (x < 0 || x >= g.n())
        throw Error(ErrorKind::InvalidParameter, "tv_vs_percolation_check: vertex out of range");
    TvPercolationCheck out;
    const auto colourings = enumerate_proper_colourings(g, k, budget);
    if (colourings.empty()) {
        out.empty_support = true;
        return out;
    }
    out.tv_max = max_tv_from_colourings(colourings, x, lambda, k);
    out.perc = percolation_probability_exact(g, DisagreementConfig::from_degrees(g, k, x), lambda);
    out.holds = out.tv_max <= out.perc + 1e-12;
    return out;
}

TvPercolationSweep tv_vs_percolation_sweep(const Graph& g, int k, int max_lambda, std::uint64_t budget)
{
    TvPercolationSweep out;
    out.worst_margin = -1.0;
    const auto colourings = enumerate_proper_colourings(g, k, budget);
    if (colourings.empty()) {
        out.empty_support = true;
        return out;
    }

    std::vector<std::vector<Vertex>> subsets{{}};
    for (int size = 1; size <= max_lambda; ++size) {
        std::vector<Vertex> pick;
        auto rec = [&](auto&& self, Vertex from) -> void {
            if (static_cast<int>(pick.size()) == size) {
                subsets.push_back(pick);
                return;
            }
            for (Vertex v = from; v < g.n(); ++v) {
                pick.push_back(v);
                self(self, v + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }

    for (Vertex x = 0; x < g.n(); ++x) {
        const auto cfg = DisagreementConfig::from_degrees(g, k, x);
        for (const auto& lambda : subsets) {
            const double tv = max_tv_from_colourings(colourings, x, lambda, k);
            const double perc = percolation_probability_exact(g, cfg, lambda);
            ++out.checked;
            out.worst_margin = std::max(out.worst_margin, tv - perc);
            if (tv > perc + 1e-12)
                ++out.violations;
        }
    }
    return out;
}

}  // namespace colcount
