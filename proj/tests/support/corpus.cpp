#include "corpus.hpp"

#include "colcount/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace colcount::testing {

Graph path_graph(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph cycle_graph(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, e);
}

Graph complete_graph(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.push_back({i, j});
    return Graph(n, e);
}

Graph star_graph(int leaves)
{
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i)
        e.push_back({0, i});
    return Graph(leaves + 1, e);
}

Graph random_tree(int n, std::mt19937_64& rng)
{
    if (n <= 1)
        return Graph(n);
    if (n == 2)
        return Graph(2, {{0, 1}});
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (auto& x : pruefer)
        x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : pruefer)
        ++degree[x];
    std::vector<Edge> edges;
    for (int x : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1) {
                edges.push_back(make_edge(leaf, x));
                --degree[leaf];
                --degree[x];
                break;
            }
        }
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            last.push_back(v);
    edges.push_back(make_edge(last[0], last[1]));
    std::sort(edges.begin(), edges.end());
    return Graph(n, edges);
}

Graph random_connected(int n, int extra, std::mt19937_64& rng)
{
    const Graph tree = random_tree(n, rng);
    std::vector<Edge> edges = tree.edges();
    std::vector<Edge> missing;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!tree.has_edge(i, j))
                missing.push_back({i, j});
    for (int e = 0; e < extra && !missing.empty(); ++e) {
        const auto pick = rng() % missing.size();
        edges.push_back(missing[pick]);
        missing.erase(missing.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    std::sort(edges.begin(), edges.end());
    return Graph(n, edges);
}

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
                edges.push_back({i, j});
    return Graph(n, edges);
}

std::vector<Graph> nonisomorphic_graphs(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<int> pair_id(static_cast<std::size_t>(n * n));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        pair_id[pairs[p].first * n + pairs[p].second] = static_cast<int>(p);
        pair_id[pairs[p].second * n + pairs[p].first] = static_cast<int>(p);
    }
    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::uint32_t canon = ~std::uint32_t{0};
        for (const auto& pi : perms) {
            std::uint32_t image = 0;
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if (mask >> p & 1u)
                    image |= std::uint32_t{1} << pair_id[pi[pairs[p].first] * n + pi[pairs[p].second]];
            canon = std::min(canon, image);
            if (canon < mask)
                break;
        }
        if (canon < mask || !seen.insert(canon).second)
            continue;
        std::vector<Edge> edges;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (mask >> p & 1u)
                edges.push_back({pairs[p].first, pairs[p].second});
        out.emplace_back(n, edges);
    }
    return out;
}

int diameter(const Graph& g)
{
    int best = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto dist = bfs_distances(g, std::span<const Vertex>(&v, 1));
        for (int x : dist) {
            if (x < 0)
                return -1;
            best = std::max(best, x);
        }
    }
    return best;
}

double brute_force_disagreement(const Graph& g, Vertex a, Vertex b, int k)
{
    std::uint64_t diff = 0, total = 0;
    for_each_proper_colouring(g, k, {}, [&](const Colouring& c) {
        ++total;
        diff += c[a] != c[b];
    });
    return static_cast<double>(diff) / static_cast<double>(total);
}

Graph prefix(int n, const std::vector<Edge>& edges, std::size_t i)
{
    std::vector<Edge> part(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(i));
    std::sort(part.begin(), part.end());
    return Graph(n, part);
}

}  // namespace colcount::testing
