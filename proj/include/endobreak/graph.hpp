#ifndef ENDOBREAK_GRAPH_HPP
#define ENDOBREAK_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace endobreak {

/// Default cap on the order of generated graphs. Searches downstream are
/// exponential, so generators fail loudly instead of producing inputs that
/// will never finish. Callers that know what they are doing pass a larger cap.
inline constexpr int kDefaultOrderCap = 64;

/// Finite simple undirected graph. Vertices are 0..order()-1. Immutable after
/// construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
        if (order < 0)
            throw std::invalid_argument("graph order must be nonnegative");
        Graph g;
        g.order_ = order;
        g.adj_.assign(order, {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= order || v < 0 || v >= order)
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("loops are not allowed");
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nbrs : g.adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
        g.build_bits();
        return g;
    }

    int order() const { return order_; }

    int edge_count() const {
        int twice = 0;
        for (const auto& nbrs : adj_) twice += static_cast<int>(nbrs.size());
        return twice / 2;
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    int max_degree() const {
        int d = 0;
        for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
        return d;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    /// Number of 64-bit words per adjacency row.
    int mask_words() const { return words_; }

    /// Adjacency row of v as a bitset (words_ machine words).
    const std::uint64_t* neighbor_mask(int v) const {
        check_vertex(v);
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }

    bool operator==(const Graph& other) const {
        return order_ == other.order_ && adj_ == other.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order_)
            throw std::out_of_range("vertex index out of range");
    }

    void build_bits() {
        words_ = order_ == 0 ? 1 : (order_ + 63) / 64;
        bits_.assign(static_cast<std::size_t>(std::max(order_, 1)) * words_, 0);
        for (int u = 0; u < order_; ++u)
            for (int v : adj_[u])
                bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }

    int order_ = 0;
    int words_ = 1;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

namespace detail {
inline void check_cap(long long order, int cap, const char* what) {
    if (order > cap)
        throw std::invalid_argument(std::string(what) + ": order exceeds cap");
}
}  // namespace detail

inline Graph make_complete(int n, int cap = kDefaultOrderCap) {
    if (n < 1) throw std::invalid_argument("make_complete: n must be >= 1");
    detail::check_cap(n, cap, "make_complete");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph make_cycle(int n, int cap = kDefaultOrderCap) {
    if (n < 3) throw std::invalid_argument("make_cycle: n must be >= 3");
    detail::check_cap(n, cap, "make_cycle");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph make_path(int n, int cap = kDefaultOrderCap) {
    if (n < 1) throw std::invalid_argument("make_path: n must be >= 1");
    detail::check_cap(n, cap, "make_path");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

inline Graph make_complete_bipartite(int m, int n, int cap = kDefaultOrderCap) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("make_complete_bipartite: parts must be >= 1");
    detail::check_cap(static_cast<long long>(m) + n, cap, "make_complete_bipartite");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
    return Graph::from_edges(m + n, edges);
}

/// k-fold Cartesian power. Vertices are k-tuples over the base vertex set,
/// encoded in mixed radix with the first coordinate most significant; two
/// tuples are adjacent when they differ in exactly one coordinate and are
/// adjacent there.
inline Graph cartesian_power(const Graph& base, int k, int cap = kDefaultOrderCap) {
    if (k < 1) throw std::invalid_argument("cartesian_power: k must be >= 1");
    if (base.order() == 0) throw std::invalid_argument("cartesian_power: base is empty");
    long long order = 1;
    for (int i = 0; i < k; ++i) {
        order *= base.order();
        if (order > cap)
            throw std::invalid_argument("cartesian_power: order exceeds cap");
    }
    int n = static_cast<int>(order);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> digits(k);
    for (int v = 0; v < n; ++v) {
        int x = v;
        for (int i = k - 1; i >= 0; --i) {
            digits[i] = x % base.order();
            x /= base.order();
        }
        long long stride = 1;
        for (int i = k - 1; i >= 0; --i) {
            for (int w : base.neighbors(digits[i]))
                if (w > digits[i])
                    edges.emplace_back(v, v + static_cast<int>((w - digits[i]) * stride));
            stride *= base.order();
        }
    }
    return Graph::from_edges(n, edges);
}

inline Graph make_hypercube(int k, int cap = kDefaultOrderCap) {
    if (k < 1) throw std::invalid_argument("make_hypercube: k must be >= 1");
    return cartesian_power(make_complete(2, cap), k, cap);
}

inline Graph prufer_decode(int n, const std::vector<int>& prufer);

/// Uniformly random labeled tree via a random Pruefer sequence. Deterministic
/// for a fixed seed.
inline Graph random_tree(int n, std::uint64_t seed, int cap = kDefaultOrderCap) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    detail::check_cap(n, cap, "random_tree");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::vector<int> prufer(n - 2);
    for (auto& p : prufer) p = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return prufer_decode(n, prufer);
}

/// Decodes a Pruefer sequence of length n-2 into the corresponding tree.
inline Graph prufer_decode(int n, const std::vector<int>& prufer) {
    if (n < 3 || static_cast<int>(prufer.size()) != n - 2)
        throw std::invalid_argument("prufer_decode: sequence length must be n-2, n >= 3");
    std::vector<int> deg(n, 1);
    for (int p : prufer) {
        if (p < 0 || p >= n) throw std::invalid_argument("prufer_decode: entry out of range");
        ++deg[p];
    }
    std::vector<std::pair<int, int>> edges;
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    for (int p : prufer) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, p);
        if (--deg[p] == 1) leaves.push(p);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

/// Shortest-path length from u to v, or nullopt if unreachable.
inline std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw std::out_of_range("distance: vertex out of range");
    if (u == v) return 0;
    std::vector<int> dist(g.order(), -1);
    dist[u] = 0;
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x)) {
            if (dist[y] != -1) continue;
            dist[y] = dist[x] + 1;
            if (y == v) return dist[y];
            q.push(y);
        }
    }
    return std::nullopt;
}

inline std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
    }
    return count == g.order();
}

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

}  // namespace endobreak

#endif
