#ifndef ENDOBREAK_ENDO_HPP
#define ENDOBREAK_ENDO_HPP

#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "endobreak/graph.hpp"

namespace endobreak {

/// Total map V -> V, image[v] being the image of vertex v.
using VertexMap = std::vector<int>;

/// Default ceiling on full endomorphism enumerations; hitting it is reported
/// as truncation, never as an exact count.
inline constexpr std::uint64_t kDefaultEndoLimit = 10'000'000;

enum class EnumStatus {
    Complete,   // every map was yielded
    Truncated,  // the enumeration limit was hit
    Stopped,    // the visitor asked to stop
};

class TruncatedError : public std::runtime_error {
public:
    explicit TruncatedError(const std::string& msg) : std::runtime_error(msg) {}
};

inline VertexMap identity_map(int n) {
    VertexMap f(n);
    std::iota(f.begin(), f.end(), 0);
    return f;
}

inline bool is_identity(const VertexMap& f) {
    for (int v = 0; v < static_cast<int>(f.size()); ++v)
        if (f[v] != v) return false;
    return true;
}

namespace detail {
inline void validate_map(const Graph& g, const VertexMap& f) {
    if (static_cast<int>(f.size()) != g.order())
        throw std::invalid_argument("vertex map length does not match graph order");
    for (int img : f)
        if (img < 0 || img >= g.order())
            throw std::out_of_range("vertex map image out of range");
}
}  // namespace detail

/// True iff every edge uv maps to an edge image[u]image[v].
inline bool is_endomorphism(const Graph& g, const VertexMap& f) {
    detail::validate_map(g, f);
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            if (!g.has_edge(f[u], f[v])) return false;
        }
    return true;
}

inline int motion_of(const VertexMap& f) {
    int moved = 0;
    for (int v = 0; v < static_cast<int>(f.size()); ++v)
        if (f[v] != v) ++moved;
    return moved;
}

inline std::vector<int> fixed_points(const VertexMap& f) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(f.size()); ++v)
        if (f[v] == v) out.push_back(v);
    return out;
}

/// Partition of V into orbits of a vertex map: the equivalence closure of
/// v ~ image[v], i.e. the connected components of the functional graph.
struct OrbitPartition {
    std::vector<std::vector<int>> blocks;  // ordered by smallest member
    std::vector<int> block_of;
};

inline OrbitPartition orbit_partition(const VertexMap& f) {
    const int n = static_cast<int>(f.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int v = 0; v < n; ++v) {
        if (f[v] < 0 || f[v] >= n)
            throw std::out_of_range("vertex map image out of range");
        int a = find(v), b = find(f[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    OrbitPartition part;
    part.block_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (part.block_of[r] == -1) {
            part.block_of[r] = static_cast<int>(part.blocks.size());
            part.blocks.emplace_back();
        }
        part.block_of[v] = part.block_of[r];
        part.blocks[part.block_of[v]].push_back(v);
    }
    return part;
}

/// o(phi) = sum over orbits of (size - 1) = order - number of orbits.
inline int orbit_norm_of(const VertexMap& f) {
    return static_cast<int>(f.size()) - static_cast<int>(orbit_partition(f).blocks.size());
}

namespace detail {

struct SearchContext {
    const Graph* g;
    int n, words;
    std::vector<std::vector<int>> earlier;  // neighbors with smaller index
    std::vector<std::uint64_t> full;        // all-vertices mask

    explicit SearchContext(const Graph& graph)
        : g(&graph), n(graph.order()), words(graph.mask_words()), earlier(n) {
        for (int v = 0; v < n; ++v)
            for (int u : graph.neighbors(v))
                if (u < v) earlier[v].push_back(u);
        full.assign(words, 0);
        for (int v = 0; v < n; ++v)
            full[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    // Candidate images for v given the images of its earlier neighbors.
    void candidates(int v, const VertexMap& image, std::uint64_t* out) const {
        if (earlier[v].empty()) {
            std::copy(full.begin(), full.end(), out);
            return;
        }
        const std::uint64_t* m = g->neighbor_mask(image[earlier[v][0]]);
        std::copy(m, m + words, out);
        for (std::size_t i = 1; i < earlier[v].size(); ++i) {
            const std::uint64_t* m2 = g->neighbor_mask(image[earlier[v][i]]);
            for (int w = 0; w < words; ++w) out[w] &= m2[w];
        }
    }
};

}  // namespace detail

/// Visits every endomorphism of g exactly once, in lexicographic order of the
/// image sequence. The visitor returns false to stop early. At most `limit`
/// maps are yielded; exceeding the limit is reported as Truncated.
template <typename Fn>
EnumStatus for_each_endomorphism(const Graph& g, Fn&& fn,
                                 std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) {
    const int n = g.order();
    VertexMap image(n, -1);
    if (n == 0) {
        if (limit == 0) return EnumStatus::Truncated;
        return fn(static_cast<const VertexMap&>(image)) ? EnumStatus::Complete
                                                        : EnumStatus::Stopped;
    }
    detail::SearchContext ctx(g);
    std::vector<std::uint64_t> candbuf(static_cast<std::size_t>(n) * ctx.words);
    std::uint64_t count = 0;
    EnumStatus status = EnumStatus::Complete;
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == n) {
            if (count == limit) {
                status = EnumStatus::Truncated;
                return false;
            }
            ++count;
            if (!fn(static_cast<const VertexMap&>(image))) {
                status = EnumStatus::Stopped;
                return false;
            }
            return true;
        }
        std::uint64_t* cand = candbuf.data() + static_cast<std::size_t>(v) * ctx.words;
        ctx.candidates(v, image, cand);
        for (int w = 0; w < ctx.words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                image[v] = (w << 6) + b;
                if (!self(self, v + 1)) return false;
            }
        }
        image[v] = -1;
        return true;
    };
    dfs(dfs, 0);
    return status;
}

/// Visits every automorphism (bijective endomorphism; for finite graphs the
/// inverse is automatically an endomorphism) in lexicographic image order.
template <typename Fn>
EnumStatus for_each_automorphism(const Graph& g, Fn&& fn) {
    const int n = g.order();
    VertexMap image(n, -1);
    if (n == 0)
        return fn(static_cast<const VertexMap&>(image)) ? EnumStatus::Complete
                                                        : EnumStatus::Stopped;
    detail::SearchContext ctx(g);
    // Degree-class masks: an automorphism preserves degrees.
    std::vector<std::uint64_t> degmask(static_cast<std::size_t>(n) * ctx.words, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (g.degree(u) == g.degree(v))
                degmask[static_cast<std::size_t>(v) * ctx.words + (u >> 6)] |=
                    std::uint64_t{1} << (u & 63);
    std::vector<std::uint64_t> used(ctx.words, 0);
    std::vector<std::uint64_t> candbuf(static_cast<std::size_t>(n) * ctx.words);
    EnumStatus status = EnumStatus::Complete;
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == n)
            return fn(static_cast<const VertexMap&>(image))
                       ? true
                       : (status = EnumStatus::Stopped, false);
        std::uint64_t* cand = candbuf.data() + static_cast<std::size_t>(v) * ctx.words;
        ctx.candidates(v, image, cand);
        const std::uint64_t* dm = degmask.data() + static_cast<std::size_t>(v) * ctx.words;
        for (int w = 0; w < ctx.words; ++w) cand[w] &= dm[w] & ~used[w];
        for (int w = 0; w < ctx.words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                image[v] = (w << 6) + b;
                used[w] |= std::uint64_t{1} << b;
                bool go = self(self, v + 1);
                used[w] &= ~(std::uint64_t{1} << b);
                if (!go) return false;
            }
        }
        image[v] = -1;
        return true;
    };
    dfs(dfs, 0);
    return status;
}

struct EndoCount {
    std::uint64_t value = 0;
    bool truncated = false;
};

inline EndoCount count_endomorphisms(const Graph& g, std::uint64_t limit = kDefaultEndoLimit) {
    EndoCount c;
    EnumStatus st = for_each_endomorphism(
        g,
        [&](const VertexMap&) {
            ++c.value;
            return true;
        },
        limit);
    c.truncated = (st == EnumStatus::Truncated);
    return c;
}

inline std::vector<VertexMap> enumerate_endomorphisms(const Graph& g,
                                                      std::uint64_t limit = kDefaultEndoLimit,
                                                      EnumStatus* status_out = nullptr) {
    std::vector<VertexMap> maps;
    EnumStatus st = for_each_endomorphism(
        g,
        [&](const VertexMap& f) {
            maps.push_back(f);
            return true;
        },
        limit);
    if (status_out) *status_out = st;
    return maps;
}

inline std::uint64_t count_automorphisms(const Graph& g) {
    std::uint64_t count = 0;
    for_each_automorphism(g, [&](const VertexMap&) {
        ++count;
        return true;
    });
    return count;
}

inline std::vector<VertexMap> enumerate_automorphisms(const Graph& g) {
    std::vector<VertexMap> maps;
    for_each_automorphism(g, [&](const VertexMap& f) {
        maps.push_back(f);
        return true;
    });
    return maps;
}

/// True iff End(G) = Aut(G). Undecided (nullopt) when the search would exceed
/// the visit limit.
inline std::optional<bool> is_core(const Graph& g, std::uint64_t limit = kDefaultEndoLimit) {
    bool found_proper = false;
    EnumStatus st = for_each_endomorphism(
        g,
        [&](const VertexMap& f) {
            std::vector<char> hit(f.size(), 0);
            for (int img : f) {
                if (hit[img]) {
                    found_proper = true;
                    return false;
                }
                hit[img] = 1;
            }
            return true;
        },
        limit);
    if (found_proper) return false;
    if (st == EnumStatus::Truncated) return std::nullopt;
    return true;
}

/// True iff End(G) = {id}. The empty and one-vertex graphs are rigid.
inline bool is_rigid(const Graph& g) {
    bool nontrivial = false;
    for_each_endomorphism(g, [&](const VertexMap& f) {
        if (!is_identity(f)) {
            nontrivial = true;
            return false;
        }
        return true;
    });
    return !nontrivial;
}

struct MotionResult {
    int motion = 0;
    VertexMap witness;  // lexicographically least map attaining the motion
};

namespace detail {

// Memo for the motion search: per depth, images of the assigned vertices that
// still have unassigned neighbors determine all feasible extensions. A state
// revisited with at least as many moved vertices cannot do better.
class MotionMemo {
public:
    MotionMemo(const Graph& g) : tables_(g.order() + 1) {
        const int n = g.order();
        std::vector<int> maxnbr(n, -1);
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) maxnbr[v] = std::max(maxnbr[v], u);
        relevant_.resize(n + 1);
        for (int d = 1; d <= n; ++d)
            for (int u = 0; u < d; ++u)
                if (maxnbr[u] >= d) relevant_[d].push_back(u);
    }

    // Returns true if a dominating visit was already recorded. Only states
    // with moved >= 1 participate (the identity completion is excluded from
    // the search, so an all-fixed prefix must not dominate anything).
    bool check_and_store(int depth, const VertexMap& image, int moved) {
        if (moved < 1) return false;
        std::string key;
        key.reserve(relevant_[depth].size() * 2);
        for (int u : relevant_[depth]) {
            key.push_back(static_cast<char>(image[u] & 0xff));
            key.push_back(static_cast<char>((image[u] >> 8) & 0xff));
        }
        auto [it, inserted] = tables_[depth].try_emplace(std::move(key), moved);
        if (inserted) return false;
        if (it->second <= moved) return true;
        it->second = moved;
        return false;
    }

private:
    std::vector<std::vector<int>> relevant_;
    std::vector<std::unordered_map<std::string, int>> tables_;
};

}  // namespace detail

/// Minimum motion over nontrivial endomorphisms, with the lexicographically
/// least witness. Returns nullopt when the graph is rigid. Branch and bound:
/// branch on the first moved vertex, prefer fixing later vertices, prune once
/// the moved count meets the incumbent, and fold together search states that
/// agree on every image still visible to unassigned vertices.
inline std::optional<MotionResult> endomorphism_motion(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return std::nullopt;
    detail::SearchContext ctx(g);
    detail::MotionMemo memo(g);
    std::vector<std::uint64_t> candbuf(static_cast<std::size_t>(n + 1) * ctx.words);
    VertexMap image(n, -1);
    int incumbent = std::numeric_limits<int>::max();

    auto dfs = [&](auto&& self, int v, int moved) -> void {
        if (moved >= incumbent) return;
        if (v == n) {
            incumbent = moved;
            return;
        }
        if (memo.check_and_store(v, image, moved)) return;
        std::uint64_t* cand = candbuf.data() + static_cast<std::size_t>(v) * ctx.words;
        ctx.candidates(v, image, cand);
        // Fixing v first reaches a good incumbent quickly.
        if ((cand[v >> 6] >> (v & 63)) & 1) {
            image[v] = v;
            self(self, v + 1, moved);
        }
        for (int w = 0; w < ctx.words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                int c = (w << 6) + b;
                if (c == v) continue;
                image[v] = c;
                self(self, v + 1, moved + 1);
            }
        }
        image[v] = -1;
    };

    for (int k = 0; k < n && incumbent > 1; ++k) {
        // Vertices before the first moved one are fixed.
        for (int j = 0; j < k; ++j) image[j] = j;
        std::uint64_t* cand = candbuf.data() + static_cast<std::size_t>(n) * ctx.words;
        ctx.candidates(k, image, cand);
        for (int w = 0; w < ctx.words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                int c = (w << 6) + b;
                if (c == k) continue;
                image[k] = c;
                dfs(dfs, k + 1, 1);
            }
        }
        for (int j = 0; j <= k && j < n; ++j) image[j] = -1;
    }
    if (incumbent == std::numeric_limits<int>::max()) return std::nullopt;

    // Second pass: lexicographically least nontrivial endomorphism within the
    // optimal motion budget. Plain ascending DFS; the first completion wins.
    detail::MotionMemo memo2(g);
    const int budget = incumbent;
    std::fill(image.begin(), image.end(), -1);
    VertexMap witness;
    auto lex = [&](auto&& self, int v, int moved) -> bool {
        if (moved > budget) return true;
        if (v == n) {
            if (moved == 0) return true;  // identity, keep searching
            witness = image;
            return false;
        }
        if (memo2.check_and_store(v, image, moved)) return true;
        std::uint64_t* cand = candbuf.data() + static_cast<std::size_t>(v) * ctx.words;
        ctx.candidates(v, image, cand);
        for (int w = 0; w < ctx.words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                int c = (w << 6) + b;
                image[v] = c;
                if (!self(self, v + 1, moved + (c != v ? 1 : 0))) return false;
            }
        }
        image[v] = -1;
        return true;
    };
    lex(lex, 0, 0);
    return MotionResult{budget, std::move(witness)};
}

/// Minimum motion over nontrivial automorphisms, with the lexicographically
/// least witness; nullopt for asymmetric graphs.
inline std::optional<MotionResult> automorphism_motion(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return std::nullopt;
    int incumbent = std::numeric_limits<int>::max();
    VertexMap witness;
    for_each_automorphism(g, [&](const VertexMap& f) {
        int m = motion_of(f);
        if (m > 0 && m < incumbent) {
            incumbent = m;
            witness = f;
        }
        return true;
    });
    if (incumbent == std::numeric_limits<int>::max()) return std::nullopt;
    // The enumeration is lexicographic, but the first optimum seen is already
    // the lexicographically least map of that motion.
    // (Later maps of equal motion are lexicographically larger.)
    return MotionResult{incumbent, std::move(witness)};
}

/// o(G): minimum orbit norm over nontrivial endomorphisms. Nullopt when the
/// graph is rigid; throws TruncatedError when the enumeration limit is hit.
inline std::optional<int> endomorphism_orbit_norm(const Graph& g,
                                                  std::uint64_t limit = kDefaultEndoLimit) {
    int best = std::numeric_limits<int>::max();
    EnumStatus st = for_each_endomorphism(
        g,
        [&](const VertexMap& f) {
            if (!is_identity(f)) best = std::min(best, orbit_norm_of(f));
            return true;
        },
        limit);
    if (st == EnumStatus::Truncated)
        throw TruncatedError("endomorphism_orbit_norm: enumeration limit hit");
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

}  // namespace endobreak

#endif
