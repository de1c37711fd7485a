#ifndef ENDOBREAK_BREAKING_HPP
#define ENDOBREAK_BREAKING_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "endobreak/endo.hpp"
#include "endobreak/graph.hpp"

namespace endobreak {

/// Vertex coloring with colors 0..palette_size-1.
struct Coloring {
    std::vector<int> colors;
    int palette_size = 1;

    void validate(const Graph& g) const {
        if (static_cast<int>(colors.size()) != g.order())
            throw std::invalid_argument("coloring length does not match graph order");
        for (int c : colors)
            if (c < 0 || c >= palette_size)
                throw std::invalid_argument("color out of palette range");
    }
};

/// Canonical form: color classes renumbered in order of first occurrence.
inline Coloring canonicalize(const Coloring& c) {
    Coloring out;
    out.colors.reserve(c.colors.size());
    std::vector<int> rename(c.palette_size, -1);
    int next = 0;
    for (int col : c.colors) {
        if (rename[col] == -1) rename[col] = next++;
        out.colors.push_back(rename[col]);
    }
    out.palette_size = std::max(next, 1);
    return out;
}

inline bool preserves_coloring(const VertexMap& f, const Coloring& c) {
    if (f.size() != c.colors.size())
        throw std::invalid_argument("map and coloring lengths differ");
    for (int v = 0; v < static_cast<int>(f.size()); ++v)
        if (c.colors[v] != c.colors[f[v]]) return false;
    return true;
}

namespace detail {

// Lexicographically least nontrivial color-preserving endomorphism (or
// automorphism when injective), absent if none exists. Constrained search;
// never materializes End(G).
inline std::optional<VertexMap> find_color_preserving_map(const Graph& g, const Coloring& c,
                                                          bool injective,
                                                          bool exclude_identity) {
    c.validate(g);
    const int n = g.order();
    if (n == 0) return std::nullopt;
    SearchContext ctx(g);
    // Mask of same-colored vertices (and same degree, for automorphisms).
    std::vector<std::uint64_t> unary(static_cast<std::size_t>(n) * ctx.words, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (c.colors[u] == c.colors[v] && (!injective || g.degree(u) == g.degree(v)))
                unary[static_cast<std::size_t>(v) * ctx.words + (u >> 6)] |=
                    std::uint64_t{1} << (u & 63);
    std::vector<std::uint64_t> used(ctx.words, 0);
    std::vector<std::uint64_t> candbuf(static_cast<std::size_t>(n) * ctx.words);
    VertexMap image(n, -1);
    std::optional<VertexMap> found;
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == n) {
            if (exclude_identity && is_identity(image)) return true;
            found = image;
            return false;
        }
        std::uint64_t* cand = candbuf.data() + static_cast<std::size_t>(v) * ctx.words;
        ctx.candidates(v, image, cand);
        const std::uint64_t* un = unary.data() + static_cast<std::size_t>(v) * ctx.words;
        for (int w = 0; w < ctx.words; ++w) {
            cand[w] &= un[w];
            if (injective) cand[w] &= ~used[w];
        }
        for (int w = 0; w < ctx.words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                image[v] = (w << 6) + b;
                if (injective) used[w] |= std::uint64_t{1} << b;
                bool go = self(self, v + 1);
                if (injective) used[w] &= ~(std::uint64_t{1} << b);
                if (!go) return false;
            }
        }
        image[v] = -1;
        return true;
    };
    dfs(dfs, 0);
    return found;
}

}  // namespace detail

inline std::optional<VertexMap> find_color_preserving_endo(const Graph& g, const Coloring& c,
                                                           bool exclude_identity = true) {
    return detail::find_color_preserving_map(g, c, /*injective=*/false, exclude_identity);
}

inline std::optional<VertexMap> find_color_preserving_auto(const Graph& g, const Coloring& c,
                                                           bool exclude_identity = true) {
    return detail::find_color_preserving_map(g, c, /*injective=*/true, exclude_identity);
}

inline bool is_endo_distinguishing(const Graph& g, const Coloring& c) {
    return !find_color_preserving_endo(g, c).has_value();
}

inline bool is_auto_distinguishing(const Graph& g, const Coloring& c) {
    return !find_color_preserving_auto(g, c).has_value();
}

enum class DistMode { Automorphism, Endomorphism };

struct DistResult {
    int value = 0;
    Coloring witness;
    DistMode mode = DistMode::Endomorphism;
};

namespace detail {

// Enumerates colorings in canonical form using exactly d colors (restricted
// growth strings with maximum entry d-1), calling test on each; returns the
// first passing coloring. Distinguishing status is invariant under renaming
// colors, so only canonical forms need testing.
template <typename Test>
std::optional<Coloring> first_passing_coloring(int n, int d, Test&& test) {
    Coloring c;
    c.colors.assign(n, 0);
    c.palette_size = d;
    std::optional<Coloring> found;
    auto rec = [&](auto&& self, int v, int maxused) -> bool {
        if (v == n) {
            if (maxused != d - 1) return true;
            if (test(static_cast<const Coloring&>(c))) {
                found = c;
                return false;
            }
            return true;
        }
        // Even using every remaining vertex for a new color, d colors must
        // still be reachable.
        if (maxused + (n - v) < d - 1) return true;
        int hi = std::min(maxused + 1, d - 1);
        for (int col = 0; col <= hi; ++col) {
            c.colors[v] = col;
            if (!self(self, v + 1, std::max(maxused, col))) return false;
        }
        return true;
    };
    rec(rec, 0, 0);
    return found;
}

inline std::optional<DistResult> distinguishing_search(const Graph& g, std::optional<int> max_d,
                                                       DistMode mode) {
    const int n = g.order();
    if (n == 0) return DistResult{1, Coloring{{}, 1}, mode};
    int cap = max_d.value_or(n);  // n distinct colors always distinguish
    for (int d = 1; d <= cap; ++d) {
        auto witness = first_passing_coloring(n, d, [&](const Coloring& c) {
            return mode == DistMode::Endomorphism ? is_endo_distinguishing(g, c)
                                                  : is_auto_distinguishing(g, c);
        });
        if (witness) return DistResult{d, std::move(*witness), mode};
    }
    return std::nullopt;  // exceeds the cap
}

}  // namespace detail

/// D_e(G): least d admitting an endomorphism-distinguishing d-coloring, with
/// the lexicographically least canonical witness. Nullopt iff max_d was given
/// and exceeded.
inline std::optional<DistResult> endo_distinguishing_number(const Graph& g,
                                                            std::optional<int> max_d = {}) {
    return detail::distinguishing_search(g, max_d, DistMode::Endomorphism);
}

/// D(G): same with automorphisms.
inline std::optional<DistResult> distinguishing_number(const Graph& g,
                                                       std::optional<int> max_d = {}) {
    return detail::distinguishing_search(g, max_d, DistMode::Automorphism);
}

}  // namespace endobreak

#endif
