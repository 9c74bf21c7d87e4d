#include "colcount/oracles.hpp"

#include "colcount/error.hpp"
#include "colcount/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <map>

namespace colcount {

namespace {

void check_k(int k)
{
    if (k < 0 || k > 64)
        throw Error(ErrorKind::InvalidParameter, "colour count must lie in [0, 64]");
}

// Vertices in BFS order, component by component.
std::vector<Vertex> bfs_order(const Graph& g)
{
    std::vector<Vertex> order;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < g.n(); ++root) {
        if (seen[root])
            continue;
        seen[root] = 1;
        queue.push_back(root);
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (Vertex w : g.neighbours(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    return order;
}

double power(double base, std::size_t exp)
{
    return std::pow(base, static_cast<double>(exp));
}

class Backtracker {
public:
    Backtracker(const Graph& g, int k, std::span<const Pin> pins)
        : g_(g), k_(k), colour_(static_cast<std::size_t>(g.n()), -1), fixed_(static_cast<std::size_t>(g.n()), 0)
    {
        for (const auto& [v, c] : pins) {
            if (v < 0 || v >= g.n() || c < 0 || c >= k)
                throw Error(ErrorKind::InvalidParameter, "pin out of range");
            if (fixed_[v] && colour_[v] != c)
                conflict_ = true;
            fixed_[v] = 1;
            colour_[v] = c;
        }
        for (const auto& [v, c] : pins)
            for (Vertex w : g.neighbours(v))
                if (fixed_[w] && colour_[w] == c)
                    conflict_ = true;
        for (Vertex v : bfs_order(g))
            if (!fixed_[v])
                order_.push_back(v);
    }

    std::size_t free_count() const { return order_.size(); }

    template <class F>
    void run(F&& visit)
    {
        if (conflict_)
            return;
        descend(0, visit);
    }

private:
    bool allowed(Vertex v, int c) const
    {
        for (Vertex w : g_.neighbours(v))
            if (colour_[w] == c)
                return false;
        return true;
    }

    template <class F>
    void descend(std::size_t pos, F& visit)
    {
        if (pos == order_.size()) {
            visit(colour_);
            return;
        }
        const Vertex v = order_[pos];
        for (int c = 0; c < k_; ++c) {
            if (!allowed(v, c))
                continue;
            colour_[v] = c;
            descend(pos + 1, visit);
        }
        colour_[v] = -1;
    }

    const Graph& g_;
    int k_;
    Colouring colour_;
    std::vector<char> fixed_;
    std::vector<Vertex> order_;
    bool conflict_ = false;
};

}  // namespace

void for_each_proper_colouring(const Graph& g, int k, std::span<const Pin> pins,
                               const std::function<void(const Colouring&)>& visit, std::uint64_t budget)
{
    check_k(k);
    Backtracker bt(g, k, pins);
    if (power(k, bt.free_count()) > static_cast<double>(budget))
        throw Error(ErrorKind::BudgetExceeded, "enumeration of " + std::to_string(k) + "^" +
                                                   std::to_string(bt.free_count()) + " assignments exceeds budget " +
                                                   std::to_string(budget));
    bt.run(visit);
}

std::vector<Colouring> enumerate_proper_colourings(const Graph& g, int k, std::uint64_t budget)
{
    std::vector<Colouring> out;
    for_each_proper_colouring(g, k, {}, [&](const Colouring& c) { out.push_back(c); }, budget);
    return out;
}

bool brute_force_feasible(const Graph& g, int k, std::uint64_t budget)
{
    int count = 0;
    const auto label = connected_components(g, &count);
    std::vector<std::size_t> sizes(static_cast<std::size_t>(count), 0);
    for (int l : label)
        ++sizes[l];
    double work = 0.0;
    for (auto s : sizes)
        if (s > 1)
            work += power(k, s);
    return work <= static_cast<double>(budget);
}

BigInt brute_force_count(const Graph& g, int k, std::uint64_t budget)
{
    check_k(k);
    if (!brute_force_feasible(g, k, budget))
        throw Error(ErrorKind::BudgetExceeded,
                    "brute_force_count: exhaustive enumeration exceeds budget " + std::to_string(budget));
    int count = 0;
    const auto label = connected_components(g, &count);
    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < g.n(); ++v)
        members[label[v]].push_back(v);

    BigInt total = 1;
    for (const auto& comp : members) {
        if (comp.size() == 1) {
            total *= k;
            continue;
        }
        const auto sub = induced_subgraph(g, comp);
        std::uint64_t n = 0;
        Backtracker bt(sub.graph, k, {});
        bt.run([&](const Colouring&) { ++n; });
        total *= n;
        if (total == 0)
            break;
    }
    return total;
}

ChromaticPolynomial::ChromaticPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    while (coeffs_.size() > 1 && coeffs_.back() == 0)
        coeffs_.pop_back();
    if (coeffs_.empty())
        coeffs_.push_back(0);
}

BigInt ChromaticPolynomial::evaluate(long long x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

namespace {

class DeletionContraction {
public:
    DeletionContraction(int n, std::uint64_t budget) : n_(n), budget_(budget) {}

    // Adds P(G) * sign into acc, where G has `active` vertices and
    // adjacency masks `adj`.
    void expand(std::vector<std::uint64_t> adj, std::uint64_t active, int sign, std::vector<BigInt>& acc)
    {
        if (++steps_ > budget_)
            throw Error(ErrorKind::BudgetExceeded,
                        "chromatic_polynomial: more than " + std::to_string(budget_) + " deletion-contraction steps");
        int a = -1;
        for (int v = 0; v < n_; ++v)
            if ((active >> v & 1u) && adj[v]) {
                a = v;
                break;
            }
        if (a < 0) {
            acc[static_cast<std::size_t>(std::popcount(active))] += sign;
            return;
        }
        // a is the lowest vertex with an edge, so all its neighbours exceed it
        const int b = std::countr_zero(adj[a]);
        const std::uint64_t bit_a = std::uint64_t{1} << a, bit_b = std::uint64_t{1} << b;

        auto contracted = adj;
        contracted[a] = (adj[a] | adj[b]) & ~bit_a & ~bit_b;
        contracted[b] = 0;
        for (int w = 0; w < n_; ++w) {
            if (w == a || w == b)
                continue;
            if (contracted[w] & bit_b) {
                contracted[w] &= ~bit_b;
                contracted[w] |= bit_a;
            }
        }

        adj[a] &= ~bit_b;
        adj[b] &= ~bit_a;
        expand(std::move(adj), active, sign, acc);
        expand(std::move(contracted), active & ~bit_b, -sign, acc);
    }

private:
    int n_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
};

}  // namespace

ChromaticPolynomial chromatic_polynomial(const Graph& g, std::uint64_t budget)
{
    if (g.n() > 64)
        throw Error(ErrorKind::InfeasibleSize, "chromatic_polynomial: at most 64 vertices supported");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.n()), 0);
    for (const auto& e : g.edges()) {
        adj[e.a] |= std::uint64_t{1} << e.b;
        adj[e.b] |= std::uint64_t{1} << e.a;
    }
    const std::uint64_t active = g.n() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n()) - 1);
    std::vector<BigInt> acc(static_cast<std::size_t>(g.n()) + 1, 0);
    DeletionContraction(g.n(), budget).expand(std::move(adj), active, 1, acc);
    return ChromaticPolynomial(std::move(acc));
}

std::size_t MarginalTable::index(std::span<const int> colours) const
{
    std::size_t idx = 0;
    for (int c : colours)
        idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(c);
    return idx;
}

MarginalTable exact_joint_marginals(const Graph& g, std::span<const Pin> pins, std::span<const Vertex> targets, int k,
                                    std::uint64_t budget)
{
    check_k(k);
    if (k == 0)
        throw Error(ErrorKind::InvalidParameter, "exact_joint_marginals: need k >= 1");
    MarginalTable table;
    table.targets.assign(targets.begin(), targets.end());
    table.k = k;
    for (Vertex v : targets)
        if (v < 0 || v >= g.n())
            throw Error(ErrorKind::InvalidParameter, "exact_joint_marginals: target out of range");
    if (power(k, targets.size()) > static_cast<double>(budget))
        throw Error(ErrorKind::BudgetExceeded, "exact_joint_marginals: target table too large");

    std::size_t cells = 1;
    for (std::size_t i = 0; i < targets.size(); ++i)
        cells *= static_cast<std::size_t>(k);
    std::vector<std::uint64_t> counts(cells, 0);
    std::uint64_t support = 0;
    for_each_proper_colouring(
        g, k, pins,
        [&](const Colouring& col) {
            std::size_t idx = 0;
            for (Vertex v : targets)
                idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(col[v]);
            ++counts[idx];
            ++support;
        },
        budget);

    table.support = support;
    table.empty_support = support == 0;
    table.probs.assign(cells, 0.0);
    if (support > 0)
        for (std::size_t i = 0; i < cells; ++i)
            table.probs[i] = static_cast<double>(counts[i]) / static_cast<double>(support);
    return table;
}

std::optional<double> exact_tv(const Graph& g, Vertex x, int sigma, int eta, std::span<const Vertex> lambda, int k,
                               std::uint64_t budget)
{
    const Pin pin_s[] = {{x, sigma}};
    const Pin pin_e[] = {{x, eta}};
    const auto a = exact_joint_marginals(g, pin_s, lambda, k, budget);
    const auto b = sigma == eta ? a : exact_joint_marginals(g, pin_e, lambda, k, budget);
    if (a.empty_support || b.empty_support)
        return std::nullopt;
    double l1 = 0.0;
    for (std::size_t i = 0; i < a.probs.size(); ++i)
        l1 += std::abs(a.probs[i] - b.probs[i]);
    return 0.5 * l1;
}

std::vector<DecayRecord> decay_profile(const Graph& g, Vertex x, int k, int t_max, std::uint64_t budget)
{
    if (x < 0 || x >= g.n())
        throw Error(ErrorKind::InvalidParameter, "decay_profile: vertex out of range");
    if (t_max < 1)
        throw Error(ErrorKind::InvalidParameter, "decay_profile: t_max must be >= 1");
    const auto colourings = enumerate_proper_colourings(g, k, budget);
    if (colourings.empty())
        throw Error(ErrorKind::EmptySupport, "decay_profile: graph has no proper colouring");
    const double total = static_cast<double>(colourings.size());
    const std::vector<Vertex> centre{x};

    std::vector<DecayRecord> out;
    for (int t = 1; t <= t_max; ++t) {
        const auto shell = sphere(g, centre, t);
        // joint counts n(A, c) over sphere assignments A and colours c of x
        std::map<std::vector<int>, std::vector<double>> joint;
        std::vector<double> x_count(static_cast<std::size_t>(k), 0.0);
        std::vector<int> key(shell.size());
        for (const auto& col : colourings) {
            for (std::size_t i = 0; i < shell.size(); ++i)
                key[i] = col[shell[i]];
            auto& row = joint[key];
            if (row.empty())
                row.assign(static_cast<std::size_t>(k), 0.0);
            row[col[x]] += 1.0;
            x_count[col[x]] += 1.0;
        }

        DecayRecord rec;
        rec.t = t;
        rec.sphere_size = shell.size();
        for (int c = 0; c < k; ++c) {
            if (x_count[c] == 0.0)
                continue;
            double l1 = 0.0;
            for (const auto& [assignment, row] : joint) {
                double mass = 0.0;
                for (double v : row)
                    mass += v;
                l1 += std::abs(mass / total - row[c] / x_count[c]);
            }
            rec.reconstruction_tv = std::max(rec.reconstruction_tv, 0.5 * l1);
            for (int c2 = c + 1; c2 < k; ++c2) {
                if (x_count[c2] == 0.0)
                    continue;
                double pair_l1 = 0.0;
                for (const auto& [assignment, row] : joint)
                    pair_l1 += std::abs(row[c] / x_count[c] - row[c2] / x_count[c2]);
                rec.pairwise_tv = std::max(rec.pairwise_tv, 0.5 * pair_l1);
            }
        }
        for (const auto& [assignment, row] : joint) {
            double mass = 0.0;
            for (double v : row)
                mass += v;
            double l1 = 0.0;
            for (int c = 0; c < k; ++c)
                l1 += std::abs(row[c] / mass - x_count[c] / total);
            rec.weighted_tv += (mass / total) * 0.5 * l1;
        }
        out.push_back(rec);
    }
    return out;
}

Colouring greedy_colouring(const Graph& g, int k)
{
    check_k(k);
    Colouring col(static_cast<std::size_t>(g.n()), -1);
    for (Vertex v = 0; v < g.n(); ++v) {
        std::uint64_t used = 0;
        for (Vertex w : g.neighbours(v))
            if (col[w] >= 0)
                used |= std::uint64_t{1} << col[w];
        int c = 0;
        while (c < k && (used >> c & 1u))
            ++c;
        if (c == k)
            throw Error(ErrorKind::InitFailed, "greedy colouring failed at vertex " + std::to_string(v));
        col[v] = c;
    }
    return col;
}

namespace {

void heat_bath_sweep(const Graph& g, int k, Colouring& col, std::mt19937_64& rng, std::vector<int>& free)
{
    for (Vertex v = 0; v < g.n(); ++v) {
        std::uint64_t used = 0;
        for (Vertex w : g.neighbours(v))
            used |= std::uint64_t{1} << col[w];
        free.clear();
        for (int c = 0; c < k; ++c)
            if (!(used >> c & 1u))
                free.push_back(c);
        // free is never empty: col[v] itself is unused by neighbours
        col[v] = free[uniform_below(rng, free.size())];
    }
}

}  // namespace

Colouring glauber_sampler(const Graph& g, int k, std::uint64_t sweeps, std::uint64_t seed)
{
    auto col = greedy_colouring(g, k);
    std::mt19937_64 rng(seed);
    std::vector<int> free;
    for (std::uint64_t s = 0; s < sweeps; ++s)
        heat_bath_sweep(g, k, col, rng, free);
    return col;
}

GlauberEstimate glauber_disagreement(const Graph& g, int k, Vertex v, Vertex u, std::uint64_t sweeps,
                                     std::uint64_t burn_in, std::uint64_t seed)
{
    if (v < 0 || v >= g.n() || u < 0 || u >= g.n())
        throw Error(ErrorKind::InvalidParameter, "glauber_disagreement: vertex out of range");
    if (sweeps == 0)
        throw Error(ErrorKind::InvalidParameter, "glauber_disagreement: need at least one sweep");
    auto col = greedy_colouring(g, k);
    std::mt19937_64 rng(seed);
    std::vector<int> free;
    for (std::uint64_t s = 0; s < burn_in; ++s)
        heat_bath_sweep(g, k, col, rng, free);

    const std::uint64_t batches = std::min<std::uint64_t>(50, sweeps);
    const std::uint64_t per_batch = sweeps / batches;
    std::vector<double> batch_mean;
    std::uint64_t hits = 0, taken = 0, batch_hits = 0, in_batch = 0;
    for (std::uint64_t s = 0; s < sweeps; ++s) {
        heat_bath_sweep(g, k, col, rng, free);
        const bool differ = col[v] != col[u];
        hits += differ;
        ++taken;
        batch_hits += differ;
        if (++in_batch == per_batch && batch_mean.size() < batches) {
            batch_mean.push_back(static_cast<double>(batch_hits) / static_cast<double>(per_batch));
            batch_hits = 0;
            in_batch = 0;
        }
    }

    GlauberEstimate est;
    est.sweeps = taken;
    est.p_diff = static_cast<double>(hits) / static_cast<double>(taken);
    if (batch_mean.size() > 1) {
        double mean = 0.0;
        for (double b : batch_mean)
            mean += b;
        mean /= static_cast<double>(batch_mean.size());
        double var = 0.0;
        for (double b : batch_mean)
            var += (b - mean) * (b - mean);
        var /= static_cast<double>(batch_mean.size() - 1);
        est.std_error = std::sqrt(var / static_cast<double>(batch_mean.size()));
    }
    return est;
}

}  // namespace colcount
