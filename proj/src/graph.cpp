#include "colcount/graph.hpp"

#include "colcount/error.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace colcount {

Edge make_edge(Vertex x, Vertex y)
{
    return x < y ? Edge{x, y} : Edge{y, x};
}

Graph::Graph(int n) : n_(n)
{
    if (n < 0)
        throw Error(ErrorKind::InvalidParameter, "graph: negative vertex count");
    build_adjacency();
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
{
    if (n < 0)
        throw Error(ErrorKind::InvalidParameter, "graph: negative vertex count");
    for (auto& e : edges_) {
        e = make_edge(e.a, e.b);
        if (e.a == e.b)
            throw Error(ErrorKind::InvalidInput, "graph: self-loop at vertex " + std::to_string(e.a));
        if (e.a < 0 || e.b >= n)
            throw Error(ErrorKind::InvalidInput, "graph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error(ErrorKind::InvalidInput, "graph: duplicate edge");
    build_adjacency();
}

void Graph::build_adjacency()
{
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[static_cast<std::size_t>(e.a) + 1];
        ++offsets_[static_cast<std::size_t>(e.b) + 1];
    }
    for (std::size_t v = 0; v < static_cast<std::size_t>(n_); ++v)
        offsets_[v + 1] += offsets_[v];

    adjacency_.assign(offsets_.back(), 0);
    adjacency_edge_.assign(offsets_.back(), 0);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t id = 0; id < edges_.size(); ++id) {
        const auto& e = edges_[id];
        adjacency_[fill[e.a]] = e.b;
        adjacency_edge_[fill[e.a]++] = id;
        adjacency_[fill[e.b]] = e.a;
        adjacency_edge_[fill[e.b]++] = id;
    }
    for (Vertex v = 0; v < n_; ++v) {
        const auto lo = offsets_[v], hi = offsets_[v + 1];
        std::vector<std::pair<Vertex, std::size_t>> tmp;
        tmp.reserve(hi - lo);
        for (auto i = lo; i < hi; ++i)
            tmp.emplace_back(adjacency_[i], adjacency_edge_[i]);
        std::sort(tmp.begin(), tmp.end());
        for (auto i = lo; i < hi; ++i) {
            adjacency_[i] = tmp[i - lo].first;
            adjacency_edge_[i] = tmp[i - lo].second;
        }
    }
}

std::span<const Vertex> Graph::neighbours(Vertex v) const
{
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const std::size_t> Graph::incident_edges(Vertex v) const
{
    return {adjacency_edge_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

int Graph::degree(Vertex v) const
{
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
}

int Graph::max_degree() const
{
    int best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

bool Graph::has_edge(Vertex x, Vertex y) const
{
    return edge_index(make_edge(x, y)) != edges_.size();
}

std::size_t Graph::edge_index(Edge e) const
{
    e = make_edge(e.a, e.b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return edges_.size();
    return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::without_edge(Edge e) const
{
    auto copy = edges_;
    auto it = std::find(copy.begin(), copy.end(), make_edge(e.a, e.b));
    if (it != copy.end())
        copy.erase(it);
    return Graph(n_, std::move(copy));
}

Graph Graph::with_edge(Edge e) const
{
    auto copy = edges_;
    copy.push_back(e);
    return Graph(n_, std::move(copy));
}

Graph generate_gnp_probability(int n, double p, std::uint64_t seed)
{
    if (n < 0)
        throw Error(ErrorKind::InvalidParameter, "gnp: n must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(ErrorKind::InvalidParameter, "gnp: p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p)
                edges.push_back({i, j});
        }
    }
    return Graph(n, std::move(edges));
}

Graph generate_gnp(int n, double d, std::uint64_t seed)
{
    if (n <= 0)
        throw Error(ErrorKind::InvalidParameter, "gnp: n must be positive");
    if (!(d >= 0.0) || d >= n)
        throw Error(ErrorKind::InvalidParameter, "gnp: need 0 <= d < n");
    return generate_gnp_probability(n, d / n, seed);
}

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> centre, int limit)
{
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::deque<Vertex> queue;
    for (Vertex c : centre) {
        if (c < 0 || c >= g.n())
            throw Error(ErrorKind::InvalidInput, "bfs: centre vertex out of range");
        if (dist[c] != 0) {
            dist[c] = 0;
            queue.push_back(c);
        }
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        if (limit >= 0 && dist[v] >= limit)
            continue;
        for (Vertex w : g.neighbours(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<Vertex> ball(const Graph& g, std::span<const Vertex> centre, int t)
{
    const auto dist = bfs_distances(g, centre, t);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.n(); ++v)
        if (dist[v] >= 0)
            out.push_back(v);
    return out;
}

std::vector<Vertex> sphere(const Graph& g, std::span<const Vertex> centre, int t)
{
    const auto dist = bfs_distances(g, centre, t);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.n(); ++v)
        if (dist[v] == t)
            out.push_back(v);
    return out;
}

bool ShortCycles::on_short_cycle(const Graph& g, Edge e) const
{
    const auto id = g.edge_index(e);
    return id < edge_on_cycle.size() && edge_on_cycle[id];
}

namespace {

struct CycleSearch {
    const Graph& g;
    int ell;
    std::size_t cap;
    ShortCycles& out;
    std::vector<Vertex> path;
    std::vector<char> on_path;
    Vertex start = 0;

    void record()
    {
        if (out.cycles.size() >= cap)
            throw Error(ErrorKind::BudgetExceeded,
                        "short_cycle_edges: more than " + std::to_string(cap) + " cycles");
        out.cycles.push_back(path);
        for (std::size_t i = 0; i < path.size(); ++i) {
            const Vertex x = path[i];
            const Vertex y = path[(i + 1) % path.size()];
            out.edge_on_cycle[g.edge_index(make_edge(x, y))] = true;
            out.vertex_on_cycle[x] = true;
        }
    }

    void extend(Vertex v)
    {
        const int len = static_cast<int>(path.size());
        for (Vertex w : g.neighbours(v)) {
            if (w == start) {
                if (len >= 3 && path[1] < path.back())
                    record();
                continue;
            }
            if (w < start || on_path[w] || len >= ell)
                continue;
            path.push_back(w);
            on_path[w] = 1;
            extend(w);
            on_path[w] = 0;
            path.pop_back();
        }
    }
};

}  // namespace

ShortCycles short_cycle_edges(const Graph& g, int ell, std::size_t cap)
{
    if (ell < 0)
        throw Error(ErrorKind::InvalidParameter, "short_cycle_edges: ell must be nonnegative");
    ShortCycles out;
    out.edge_on_cycle.assign(g.m(), false);
    out.vertex_on_cycle.assign(static_cast<std::size_t>(g.n()), false);
    if (ell < 3)
        return out;
    CycleSearch search{g, ell, cap, out, {}, std::vector<char>(static_cast<std::size_t>(g.n()), 0)};
    for (Vertex s = 0; s < g.n(); ++s) {
        search.start = s;
        search.path = {s};
        search.on_path[s] = 1;
        search.extend(s);
        search.on_path[s] = 0;
    }
    return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    Subgraph sub;
    sub.from_parent.assign(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (v < 0 || v >= g.n())
            throw Error(ErrorKind::InvalidInput, "induced_subgraph: vertex out of range");
        sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
        sub.to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (Vertex v : sorted)
        for (Vertex w : g.neighbours(v))
            if (v < w && sub.from_parent[w] >= 0)
                edges.push_back({sub.from_parent[v], sub.from_parent[w]});
    sub.graph = Graph(static_cast<int>(sorted.size()), std::move(edges));
    return sub;
}

std::vector<int> connected_components(const Graph& g, int* count)
{
    std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (label[s] >= 0)
            continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbours(v)) {
                if (label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    if (count)
        *count = next;
    return label;
}

bool is_connected(const Graph& g)
{
    int count = 0;
    connected_components(g, &count);
    return count <= 1;
}

bool is_forest(const Graph& g)
{
    int count = 0;
    connected_components(g, &count);
    return static_cast<long>(g.m()) == static_cast<long>(g.n()) - count;
}

Subgraph component_of(const Graph& g, std::span<const Vertex> seeds, bool require_single)
{
    if (seeds.empty())
        throw Error(ErrorKind::InvalidParameter, "component_of: seeds must be nonempty");
    const auto label = connected_components(g);
    std::vector<int> wanted;
    for (Vertex s : seeds) {
        if (s < 0 || s >= g.n())
            throw Error(ErrorKind::InvalidInput, "component_of: seed out of range");
        wanted.push_back(label[s]);
    }
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    if (require_single && wanted.size() > 1)
        throw Error(ErrorKind::SeedsDisconnected, "component_of: seeds span several components");
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.n(); ++v)
        if (std::binary_search(wanted.begin(), wanted.end(), label[v]))
            members.push_back(v);
    return induced_subgraph(g, members);
}

TreeSplit spanning_forest_split(const Graph& g)
{
    TreeSplit split;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<char> is_tree(g.m(), 0);
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < g.n(); ++root) {
        if (seen[root])
            continue;
        seen[root] = 1;
        queue.push_back(root);
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            const auto nbrs = g.neighbours(v);
            const auto ids = g.incident_edges(v);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                if (!seen[nbrs[i]]) {
                    seen[nbrs[i]] = 1;
                    is_tree[ids[i]] = 1;
                    queue.push_back(nbrs[i]);
                }
            }
        }
    }
    for (std::size_t id = 0; id < g.m(); ++id)
        (is_tree[id] ? split.tree : split.extra).push_back(g.edges()[id]);
    return split;
}

TreeSplit spanning_tree_split(const Graph& g)
{
    if (!is_connected(g))
        throw Error(ErrorKind::InvalidInput, "spanning_tree_split: graph is disconnected");
    return spanning_forest_split(g);
}

Graph read_edge_list(std::istream& in, const std::string& source)
{
    auto fail = [&](std::size_t line, const std::string& why) {
        throw Error(ErrorKind::Parse, source + ":" + std::to_string(line) + ": " + why);
    };

    std::string text;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, text)) {
            ++line_no;
            if (!text.empty() && text.back() == '\r')
                text.pop_back();
            if (text.find_first_not_of(" \t") != std::string::npos)
                return true;
        }
        return false;
    };

    if (!next_line())
        fail(line_no + 1, "missing header line 'n m'");
    long long n = -1, m = -1;
    {
        std::istringstream header(text);
        std::string extra;
        if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0)
            fail(line_no, "header must be two nonnegative integers 'n m'");
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line())
            fail(line_no + 1, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
        std::istringstream row(text);
        long long a = -1, b = -1;
        std::string extra;
        if (!(row >> a >> b) || (row >> extra))
            fail(line_no, "edge line must be two integers 'a b'");
        if (a < 0 || b >= n || a >= b)
            fail(line_no, "edge must satisfy 0 <= a < b < n");
        const Edge e{static_cast<Vertex>(a), static_cast<Vertex>(b)};
        if (!edges.empty() && !(edges.back() < e))
            fail(line_no, "edges must be strictly increasing in lexicographic order");
        edges.push_back(e);
    }
    if (next_line())
        fail(line_no, "unexpected content after the last edge");
    return Graph(static_cast<int>(n), std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& e : g.edges())
        out << e.a << ' ' << e.b << '\n';
}

Graph load_edge_list(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open '" + path + "' for reading");
    return read_edge_list(in, path);
}

void save_edge_list(const std::string& path, const Graph& g)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
    write_edge_list(out, g);
    out.flush();
    if (!out)
        throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace colcount
