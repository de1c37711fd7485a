#ifndef ENDOBREAK_CONSTRUCTIONS_HPP
#define ENDOBREAK_CONSTRUCTIONS_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "endobreak/breaking.hpp"
#include "endobreak/endo.hpp"
#include "endobreak/graph.hpp"

namespace endobreak {

/// 2-coloring of C_{2k} with exactly vertices 0, 1, 3 black (color 1); for
/// k >= 3 this breaks every nontrivial endomorphism. C_4 needs 3 colors and
/// is rejected.
inline Coloring even_cycle_coloring(int k) {
    if (k < 3)
        throw std::invalid_argument(
            "even_cycle_coloring: k must be >= 3 (C_4 has D_e(C_4) = 3, no 2-coloring works)");
    Coloring c;
    c.palette_size = 2;
    c.colors.assign(2 * k, 0);
    c.colors[0] = c.colors[1] = c.colors[3] = 1;
    return c;
}

/// 2-coloring of P_n in which any two vertices at distance 2 get distinct
/// colors and the reversal is broken. Periodic pattern 1122 (as 0011),
/// except n == 2 (mod 4) where the period is 1221: the plain truncation would
/// be a palindrome there and the reversal would survive.
inline Coloring path_coloring(int n) {
    if (n < 2)
        throw std::invalid_argument("path_coloring: n must be >= 2 (P_1 is rigid, D_e = 1)");
    static constexpr int pat1122[4] = {0, 0, 1, 1};
    static constexpr int pat1221[4] = {0, 1, 1, 0};
    const int* pat = (n % 4 == 2) ? pat1221 : pat1122;
    Coloring c;
    c.palette_size = 2;
    c.colors.reserve(n);
    for (int i = 0; i < n; ++i) c.colors.push_back(pat[i % 4]);
    return c;
}

/// The fold sending pendant vertex a across its support b to the least-index
/// other neighbor c of b; identity elsewhere. A nontrivial endomorphism with
/// motion exactly 1.
inline VertexMap pendant_fold(const Graph& t, int a) {
    if (!is_tree(t)) throw std::invalid_argument("pendant_fold: graph is not a tree");
    if (t.order() < 3) throw std::invalid_argument("pendant_fold: tree must have >= 3 vertices");
    if (a < 0 || a >= t.order() || t.degree(a) != 1)
        throw std::invalid_argument("pendant_fold: a is not a pendant vertex");
    int b = t.neighbors(a)[0];
    int c = -1;
    for (int w : t.neighbors(b))
        if (w != a) {
            c = w;
            break;
        }
    if (c == -1) throw std::invalid_argument("pendant_fold: support vertex has no other neighbor");
    VertexMap f = identity_map(t.order());
    f[a] = c;
    return f;
}

enum class TreeLemmaStatus { Holds, Vacuous, Fails };

struct Dist2Verdict {
    TreeLemmaStatus status = TreeLemmaStatus::Fails;
    std::optional<std::pair<int, int>> witness;  // x < y, dist(x,y) = 2, f[x] = f[y]
};

namespace detail {
inline bool map_is_injective(const VertexMap& f) {
    std::vector<char> hit(f.size(), 0);
    for (int img : f) {
        if (hit[img]) return false;
        hit[img] = 1;
    }
    return true;
}
}  // namespace detail

/// For a non-automorphism endomorphism of a finite tree there must be two
/// vertices at distance 2 with the same image; returns the lexicographically
/// first such pair. Automorphisms give a vacuous verdict.
inline Dist2Verdict check_dist2_identification(const Graph& t, const VertexMap& f) {
    if (!is_tree(t)) throw std::invalid_argument("check_dist2_identification: not a tree");
    if (!is_endomorphism(t, f))
        throw std::invalid_argument("check_dist2_identification: map is not an endomorphism");
    if (detail::map_is_injective(f)) return {TreeLemmaStatus::Vacuous, std::nullopt};
    // dist(x,y) = 2 iff x, y share a neighbor and are non-adjacent; in a tree
    // non-adjacent common-neighbor pairs are exactly the distance-2 pairs.
    for (int x = 0; x < t.order(); ++x)
        for (int y = x + 1; y < t.order(); ++y) {
            if (f[x] != f[y] || t.has_edge(x, y)) continue;
            for (int z : t.neighbors(x))
                if (t.has_edge(z, y)) return {TreeLemmaStatus::Holds, std::make_pair(x, y)};
        }
    return {TreeLemmaStatus::Fails, std::nullopt};
}

/// The fixed points of a tree endomorphism must induce a connected (possibly
/// empty) subgraph.
inline TreeLemmaStatus check_fixed_points_connected(const Graph& t, const VertexMap& f) {
    if (!is_tree(t)) throw std::invalid_argument("check_fixed_points_connected: not a tree");
    if (!is_endomorphism(t, f))
        throw std::invalid_argument("check_fixed_points_connected: map is not an endomorphism");
    std::vector<int> fixed = fixed_points(f);
    if (fixed.size() <= 1) return TreeLemmaStatus::Holds;
    std::vector<char> in_fixed(t.order(), 0);
    for (int v : fixed) in_fixed[v] = 1;
    std::vector<int> stack{fixed[0]};
    std::vector<char> seen(t.order(), 0);
    seen[fixed[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : t.neighbors(x))
            if (in_fixed[y] && !seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == fixed.size() ? TreeLemmaStatus::Holds : TreeLemmaStatus::Fails;
}

}  // namespace endobreak

#endif
