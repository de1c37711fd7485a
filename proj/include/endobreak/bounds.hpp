#ifndef ENDOBREAK_BOUNDS_HPP
#define ENDOBREAK_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "endobreak/breaking.hpp"
#include "endobreak/endo.hpp"
#include "endobreak/graph.hpp"

namespace endobreak {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class BoundStatus {
    Holds,    // hypothesis satisfied, conclusion asserted
    Fails,    // hypothesis not satisfied, inconclusive
    Vacuous,  // degenerate input (rigid / asymmetric), nothing to bound
    Unknown,  // enumeration truncated, no verdict
};

/// Outcome of one bound check. All comparisons are exact; lhs/rhs are decimal
/// or rational renderings of the two sides.
struct BoundReport {
    std::string bound_name;
    BoundStatus status = BoundStatus::Unknown;
    std::string lhs;
    std::string rhs;
    std::string implied;  // e.g. "D_e <= 3", empty unless status == Holds/Vacuous
    std::string note;
};

inline const char* to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::Holds: return "holds";
        case BoundStatus::Fails: return "fails";
        case BoundStatus::Vacuous: return "vacuous";
        default: return "unknown";
    }
}

/// Exact sum of d^(-o(phi)) over nontrivial endomorphisms; nullopt when the
/// enumeration limit is hit.
inline std::optional<BigRational> orbit_norm_sum(const Graph& g, int d,
                                                 std::uint64_t limit = kDefaultEndoLimit) {
    BigRational sum = 0;
    EnumStatus st = for_each_endomorphism(
        g,
        [&](const VertexMap& f) {
            if (!is_identity(f)) {
                BigInt denom = boost::multiprecision::pow(BigInt(d),
                                                          static_cast<unsigned>(orbit_norm_of(f)));
                sum += BigRational(1, denom);
            }
            return true;
        },
        limit);
    if (st == EnumStatus::Truncated) return std::nullopt;
    return sum;
}

/// Checks d^(m_e/2) >= |End(G)| exactly, as d^m_e >= |End(G)|^2; when it
/// holds, D_e(G) <= d follows.
inline BoundReport motion_lemma_check(const Graph& g, int d,
                                      std::uint64_t limit = kDefaultEndoLimit) {
    if (d < 2) throw std::invalid_argument("motion_lemma_check: d must be >= 2");
    BoundReport rep;
    rep.bound_name = "endomorphism-motion";
    auto motion = endomorphism_motion(g);
    if (!motion) {
        rep.status = BoundStatus::Vacuous;
        rep.note = "rigid graph: no nontrivial endomorphism, D_e = 1";
        rep.implied = "D_e <= " + std::to_string(d);
        return rep;
    }
    EndoCount endos = count_endomorphisms(g, limit);
    if (endos.truncated) {
        rep.status = BoundStatus::Unknown;
        rep.note = "endomorphism count truncated at " + std::to_string(limit);
        return rep;
    }
    BigInt lhs = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(motion->motion));
    BigInt rhs = BigInt(endos.value) * BigInt(endos.value);
    rep.lhs = lhs.str() + " (= " + std::to_string(d) + "^" + std::to_string(motion->motion) + ")";
    rep.rhs = rhs.str() + " (= |End|^2, |End| = " + std::to_string(endos.value) + ")";
    rep.status = lhs >= rhs ? BoundStatus::Holds : BoundStatus::Fails;
    if (rep.status == BoundStatus::Holds) rep.implied = "D_e <= " + std::to_string(d);
    return rep;
}

/// Checks sum over nontrivial endomorphisms of d^(-o(phi)) < 1; when it
/// holds, D_e(G) <= d follows.
inline BoundReport orbit_norm_lemma_check(const Graph& g, int d,
                                          std::uint64_t limit = kDefaultEndoLimit) {
    if (d < 2) throw std::invalid_argument("orbit_norm_lemma_check: d must be >= 2");
    BoundReport rep;
    rep.bound_name = "orbit-norm";
    auto sum = orbit_norm_sum(g, d, limit);
    if (!sum) {
        rep.status = BoundStatus::Unknown;
        rep.note = "endomorphism enumeration truncated at " + std::to_string(limit);
        return rep;
    }
    // always num/den, even for integral values, so the field parses uniformly
    rep.lhs = boost::multiprecision::numerator(*sum).str() + "/" +
              boost::multiprecision::denominator(*sum).str();
    rep.rhs = "1";
    rep.status = *sum < 1 ? BoundStatus::Holds : BoundStatus::Fails;
    if (rep.status == BoundStatus::Holds) rep.implied = "D_e <= " + std::to_string(d);
    return rep;
}

/// Russell-Sundaram: m(G) >= 2 log_d |Aut(G)|, checked exactly as
/// d^m(G) >= |Aut(G)|^2; when it holds, D(G) <= d follows.
inline BoundReport russell_sundaram_check(const Graph& g, int d) {
    if (d < 2) throw std::invalid_argument("russell_sundaram_check: d must be >= 2");
    BoundReport rep;
    rep.bound_name = "russell-sundaram";
    auto motion = automorphism_motion(g);
    if (!motion) {
        rep.status = BoundStatus::Vacuous;
        rep.note = "asymmetric graph: D = 1";
        rep.implied = "D <= " + std::to_string(d);
        return rep;
    }
    std::uint64_t aut = count_automorphisms(g);
    BigInt lhs = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(motion->motion));
    BigInt rhs = BigInt(aut) * BigInt(aut);
    rep.lhs = lhs.str() + " (= " + std::to_string(d) + "^" + std::to_string(motion->motion) + ")";
    rep.rhs = rhs.str() + " (= |Aut|^2, |Aut| = " + std::to_string(aut) + ")";
    rep.status = lhs >= rhs ? BoundStatus::Holds : BoundStatus::Fails;
    if (rep.status == BoundStatus::Holds) rep.implied = "D <= " + std::to_string(d);
    return rep;
}

struct McEstimate {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double point_estimate = 0.0;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}
}  // namespace detail

/// Samples random colorings (each vertex independently by the bias vector)
/// and counts those that are endomorphism distinguishing. Trial t uses an
/// mt19937_64 engine seeded with splitmix64(seed ^ splitmix64(t)), so the
/// result is bit-reproducible under any trial schedule.
inline McEstimate monte_carlo_distinguishing(const Graph& g, int d, std::uint64_t trials,
                                             std::uint64_t seed,
                                             std::vector<double> bias = {}) {
    if (d < 2) throw std::invalid_argument("monte_carlo_distinguishing: d must be >= 2");
    if (trials < 1) throw std::invalid_argument("monte_carlo_distinguishing: trials must be >= 1");
    if (bias.empty()) bias.assign(d, 1.0 / d);
    if (static_cast<int>(bias.size()) != d)
        throw std::invalid_argument("bias vector length must equal d");
    double total = 0;
    for (double p : bias) {
        if (!(p > 0.0) || !(p < 1.0))
            throw std::invalid_argument("bias entries must lie strictly between 0 and 1");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("bias entries must sum to 1");
    std::vector<double> cdf(d);
    double acc = 0;
    for (int i = 0; i < d; ++i) {
        acc += bias[i];
        cdf[i] = acc;
    }
    cdf[d - 1] = 1.0;

    McEstimate est;
    est.trials = trials;
    Coloring c;
    c.palette_size = d;
    c.colors.assign(g.order(), 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(t)));
        for (int v = 0; v < g.order(); ++v) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            int col = 0;
            while (col + 1 < d && u >= cdf[col]) ++col;
            c.colors[v] = col;
        }
        if (is_endo_distinguishing(g, c)) ++est.successes;
    }
    est.point_estimate = static_cast<double>(est.successes) / static_cast<double>(trials);
    return est;
}

}  // namespace endobreak

#endif
