#include "colcount/marginal.hpp"

#include "colcount/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <tuple>

namespace colcount {

ColourList::ColourList(int n, int k) : k_(k)
{
    if (k < 1 || k > kMaxColours)
        throw Error(ErrorKind::InvalidParameter, "colour count must lie in [1, 64]");
    const ColourMask full = k == 64 ? ~ColourMask{0} : ((ColourMask{1} << k) - 1);
    allowed_.assign(static_cast<std::size_t>(n), full);
}

int ColourList::count(Vertex v) const
{
    return std::popcount(allowed_[v]);
}

void ColourList::set(Vertex v, ColourMask mask)
{
    const ColourMask full = k_ == 64 ? ~ColourMask{0} : ((ColourMask{1} << k_) - 1);
    allowed_[v] = mask & full;
}

void ColourList::pin(Vertex v, int c)
{
    if (c < 0 || c >= k_)
        throw Error(ErrorKind::InvalidParameter, "colour out of range");
    allowed_[v] &= ColourMask{1} << c;
}

void ColourList::forbid(Vertex v, int c)
{
    allowed_[v] &= ~(ColourMask{1} << c);
}

namespace {

// Rooted BFS layout of a forest; roots are the lowest vertex of each tree
// and children are visited in ascending order.
class ForestDp {
public:
    explicit ForestDp(const Graph& forest) : n_(forest.n()), parent_(static_cast<std::size_t>(n_), -1)
    {
        if (!is_forest(forest))
            throw Error(ErrorKind::InvalidInput, "forest DP: graph contains a cycle");
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::deque<Vertex> queue;
        for (Vertex root = 0; root < n_; ++root) {
            if (seen[root])
                continue;
            seen[root] = 1;
            queue.push_back(root);
            while (!queue.empty()) {
                const Vertex v = queue.front();
                queue.pop_front();
                order_.push_back(v);
                for (Vertex w : forest.neighbours(v)) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        parent_[w] = v;
                        queue.push_back(w);
                    }
                }
            }
        }
    }

    BigInt run(const ColourList& lists)
    {
        const int k = lists.k();
        cnt_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k));
        for (Vertex v = 0; v < n_; ++v)
            for (int c = 0; c < k; ++c)
                cnt_[idx(v, c, k)] = lists.allows(v, c) ? 1 : 0;

        BigInt result = 1;
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
            const Vertex v = *it;
            total_ = 0;
            for (int c = 0; c < k; ++c)
                total_ += cnt_[idx(v, c, k)];
            if (total_ == 0)
                return 0;
            const Vertex p = parent_[v];
            if (p < 0) {
                result *= total_;
                continue;
            }
            // Σ_{c' != c} cnt[v][c'] = total - cnt[v][c]
            for (int c = 0; c < k; ++c) {
                auto& slot = cnt_[idx(p, c, k)];
                if (slot != 0)
                    slot *= total_ - cnt_[idx(v, c, k)];
            }
        }
        return result;
    }

private:
    static std::size_t idx(Vertex v, int c, int k)
    {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(k) + static_cast<std::size_t>(c);
    }

    int n_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> order_;
    std::vector<BigInt> cnt_;
    BigInt total_;
};

void check_lists(const Graph& g, const ColourList& lists)
{
    if (lists.size() != g.n())
        throw Error(ErrorKind::InvalidParameter, "colour list size does not match vertex count");
}

}  // namespace

BigInt forest_count(const Graph& forest, const ColourList& lists)
{
    check_lists(forest, lists);
    return ForestDp(forest).run(lists);
}

BigInt tree_count(const Graph& tree, const ColourList& lists)
{
    if (!is_connected(tree) || !is_forest(tree))
        throw Error(ErrorKind::InvalidInput, "tree_count: input is not a tree");
    return forest_count(tree, lists);
}

namespace {

// Table over the colours of `scope` (ascending vertex ids), each variable
// ranging over its own domain; the last scope variable varies fastest.
struct Factor {
    std::vector<Vertex> scope;
    std::vector<BigInt> table;
};

// Weighted colouring count of the graph restricted to `alive` vertices:
// every vertex carries a weight per colour and adjacent vertices must
// differ. Vertices of degree <= 1 are folded into their neighbour first;
// what remains is summed out by variable elimination, smallest resulting
// table first.
class Eliminator {
public:
    Eliminator(const Graph& g, const ColourList& lists, std::uint64_t budget)
        : g_(g), k_(lists.k()), budget_(budget), alive_(static_cast<std::size_t>(g.n()), 1),
          degree_(static_cast<std::size_t>(g.n()), 0), weight_(static_cast<std::size_t>(g.n()))
    {
        for (Vertex v = 0; v < g.n(); ++v) {
            degree_[v] = g.degree(v);
            weight_[v].assign(static_cast<std::size_t>(k_), 0);
            for (int c = 0; c < k_; ++c)
                if (lists.allows(v, c))
                    weight_[v][c] = 1;
        }
    }

    BigInt run()
    {
        if (!absorb_singletons() || !peel())
            return 0;
        return eliminate_core();
    }

private:
    BigInt weight_sum(Vertex v) const
    {
        BigInt s = 0;
        for (const auto& w : weight_[v])
            s += w;
        return s;
    }

    void remove(Vertex v)
    {
        alive_[v] = 0;
        for (Vertex w : g_.neighbours(v))
            if (alive_[w])
                --degree_[w];
    }

    // A vertex with one admissible colour fixes that colour; it leaves the
    // graph after forbidding the colour at its neighbours.
    bool absorb_singletons()
    {
        std::deque<Vertex> queue;
        auto admissible = [&](Vertex v) {
            int count = 0;
            for (const auto& w : weight_[v])
                count += w != 0;
            return count;
        };
        for (Vertex v = 0; v < g_.n(); ++v)
            if (admissible(v) <= 1)
                queue.push_back(v);
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            if (!alive_[v])
                continue;
            int colour = -1;
            for (int c = 0; c < k_; ++c)
                if (weight_[v][c] != 0)
                    colour = c;
            if (colour < 0)
                return false;
            scalar_ *= weight_[v][colour];
            remove(v);
            for (Vertex w : g_.neighbours(v)) {
                if (!alive_[w] || weight_[w][colour] == 0)
                    continue;
                weight_[w][colour] = 0;
                if (admissible(w) <= 1)
                    queue.push_back(w);
            }
        }
        return true;
    }

    bool peel()
    {
        std::deque<Vertex> queue;
        for (Vertex v = 0; v < g_.n(); ++v)
            if (alive_[v] && degree_[v] <= 1)
                queue.push_back(v);
        BigInt s;
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            if (!alive_[v] || degree_[v] > 1)
                continue;
            s = weight_sum(v);
            if (s == 0)
                return false;
            Vertex parent = -1;
            for (Vertex w : g_.neighbours(v))
                if (alive_[w])
                    parent = w;
            remove(v);
            if (parent < 0) {
                scalar_ *= s;
                continue;
            }
            // Σ_{c' != c} w[v][c'] = s - w[v][c]
            for (int c = 0; c < k_; ++c) {
                auto& slot = weight_[parent][c];
                if (slot != 0)
                    slot *= s - weight_[v][c];
            }
            if (degree_[parent] <= 1)
                queue.push_back(parent);
        }
        return true;
    }

    BigInt eliminate_core()
    {
        std::vector<Vertex> core;
        for (Vertex v = 0; v < g_.n(); ++v)
            if (alive_[v])
                core.push_back(v);
        if (core.empty())
            return scalar_;

        domain_.assign(static_cast<std::size_t>(g_.n()), {});
        for (Vertex v : core) {
            for (int c = 0; c < k_; ++c)
                if (weight_[v][c] != 0)
                    domain_[v].push_back(c);
            if (domain_[v].empty())
                return 0;
        }

        std::vector<Factor> factors;
        for (Vertex v : core) {
            Factor f{{v}, {}};
            for (int c : domain_[v])
                f.table.push_back(weight_[v][c]);
            factors.push_back(std::move(f));
        }
        for (const auto& e : g_.edges()) {
            if (!alive_[e.a] || !alive_[e.b])
                continue;
            Factor f{{e.a, e.b}, {}};
            for (int ca : domain_[e.a])
                for (int cb : domain_[e.b])
                    f.table.push_back(ca != cb ? 1 : 0);
            factors.push_back(std::move(f));
        }

        std::vector<char> pending(static_cast<std::size_t>(g_.n()), 0);
        for (Vertex v : core)
            pending[v] = 1;
        std::vector<char> live_factor(factors.size(), 1);
        BigInt result = scalar_;
        double work = 0.0;

        for (std::size_t round = 0; round < core.size(); ++round) {
            // Pick the variable whose elimination yields the smallest table.
            Vertex best = -1;
            double best_size = 0.0;
            std::vector<Vertex> best_scope;
            for (Vertex v : core) {
                if (!pending[v])
                    continue;
                std::vector<Vertex> scope;
                for (std::size_t f = 0; f < factors.size(); ++f)
                    if (live_factor[f] && contains(factors[f].scope, v))
                        scope.insert(scope.end(), factors[f].scope.begin(), factors[f].scope.end());
                std::sort(scope.begin(), scope.end());
                scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
                scope.erase(std::find(scope.begin(), scope.end(), v));
                double size = 1.0;
                for (Vertex w : scope)
                    size *= static_cast<double>(domain_[w].size());
                if (best < 0 || size < best_size) {
                    best = v;
                    best_size = size;
                    best_scope = std::move(scope);
                }
            }

            std::vector<std::size_t> involved;
            for (std::size_t f = 0; f < factors.size(); ++f)
                if (live_factor[f] && contains(factors[f].scope, best))
                    involved.push_back(f);
            work += best_size * static_cast<double>(domain_[best].size()) * static_cast<double>(involved.size());
            if (work > static_cast<double>(budget_))
                throw Error(ErrorKind::BudgetExceeded,
                            "component_count: eliminating " + std::to_string(core.size()) + " core vertices needs " +
                                "more than " + std::to_string(budget_) + " table operations (table over " +
                                std::to_string(best_scope.size()) + " variables)");

            Factor merged = sum_out(factors, involved, best, best_scope);
            for (std::size_t f : involved)
                live_factor[f] = 0;
            pending[best] = 0;
            if (merged.scope.empty()) {
                result *= merged.table[0];
                if (result == 0)
                    return 0;
            } else {
                factors.push_back(std::move(merged));
                live_factor.push_back(1);
            }
        }
        return result;
    }

    static bool contains(const std::vector<Vertex>& scope, Vertex v)
    {
        return std::find(scope.begin(), scope.end(), v) != scope.end();
    }

    Factor sum_out(const std::vector<Factor>& factors, const std::vector<std::size_t>& involved, Vertex x,
                   const std::vector<Vertex>& scope) const
    {
        // Joint variable order: scope..., x. strides[f][j] maps digit j to
        // factor f's table index.
        std::vector<Vertex> vars = scope;
        vars.push_back(x);
        std::vector<std::vector<std::size_t>> strides;
        for (std::size_t f : involved) {
            const auto& fs = factors[f].scope;
            std::vector<std::size_t> st(vars.size(), 0);
            std::size_t stride = 1;
            for (std::size_t j = fs.size(); j-- > 0;) {
                const auto pos = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), fs[j]) - vars.begin());
                st[pos] = stride;
                stride *= domain_[fs[j]].size();
            }
            strides.push_back(std::move(st));
        }

        std::size_t out_size = 1;
        for (Vertex v : scope)
            out_size *= domain_[v].size();
        Factor out{scope, std::vector<BigInt>(out_size)};
        const std::size_t dx = domain_[x].size();
        std::vector<std::size_t> digit(vars.size(), 0);
        std::vector<std::size_t> base(involved.size(), 0);
        BigInt prod;
        for (std::size_t cell = 0; cell < out_size; ++cell) {
            for (std::size_t f = 0; f < involved.size(); ++f) {
                base[f] = 0;
                for (std::size_t j = 0; j + 1 < vars.size(); ++j)
                    base[f] += digit[j] * strides[f][j];
            }
            BigInt& acc = out.table[cell];
            for (std::size_t cx = 0; cx < dx; ++cx) {
                bool zero = false;
                for (std::size_t f = 0; f < involved.size() && !zero; ++f) {
                    const BigInt& value = factors[involved[f]].table[base[f] + cx * strides[f].back()];
                    if (value == 0)
                        zero = true;
                    else if (f == 0)
                        prod = value;
                    else
                        prod *= value;
                }
                if (!zero)
                    acc += prod;
            }
            for (std::size_t j = scope.size(); j-- > 0;) {
                if (++digit[j] < domain_[scope[j]].size())
                    break;
                digit[j] = 0;
            }
        }
        return out;
    }

    const Graph& g_;
    int k_;
    std::uint64_t budget_;
    std::vector<char> alive_;
    std::vector<int> degree_;
    std::vector<std::vector<BigInt>> weight_;
    std::vector<std::vector<int>> domain_;
    BigInt scalar_ = 1;
};

}  // namespace

BigInt component_count(const TruncatedComponent& tc, const ColourList& lists, std::uint64_t budget)
{
    check_lists(tc.component, lists);
    return Eliminator(tc.component, lists, budget).run();
}

BigInt JointTable::total() const
{
    return BigInt(k) * same + BigInt(k) * BigInt(k - 1) * diff;
}

JointTable joint_table(const TruncatedComponent& tc, int k, std::uint64_t budget)
{
    if (k < 2)
        throw Error(ErrorKind::InvalidParameter, "joint_table: need k >= 2");
    if (tc.anchor_v == tc.anchor_u)
        throw Error(ErrorKind::InvalidInput, "joint_table: anchors must be distinct");
    JointTable jt;
    jt.k = k;
    ColourList lists(tc.component.n(), k);
    lists.pin(tc.anchor_v, 0);
    auto same_lists = lists;
    same_lists.pin(tc.anchor_u, 0);
    jt.same = component_count(tc, same_lists, budget);
    lists.pin(tc.anchor_u, 1);
    jt.diff = component_count(tc, lists, budget);
    if (jt.same == 0 && jt.diff == 0)
        throw Error(ErrorKind::UncolourableComponent,
                    "component on " + std::to_string(tc.component.n()) + " vertices has no proper " +
                        std::to_string(k) + "-colouring");
    return jt;
}

double disagreement_probability(const JointTable& jt)
{
    const BigInt num = BigInt(jt.k - 1) * jt.diff;
    const BigInt den = jt.same + num;
    if (den == 0)
        throw Error(ErrorKind::UncolourableComponent, "disagreement_probability: empty colouring set");
    return ratio_to_double(num, den);
}

CijBound cij_bound(const JointTable& jt)
{
    if (jt.same == 0 || jt.diff == 0)
        return {std::numeric_limits<double>::infinity(), true};
    const BigInt& smallest = jt.same < jt.diff ? jt.same : jt.diff;
    const double inv = ratio_to_double(jt.total(), smallest);
    return {inv * inv, false};
}

}  // namespace colcount
