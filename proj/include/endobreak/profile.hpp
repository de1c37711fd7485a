#ifndef ENDOBREAK_PROFILE_HPP
#define ENDOBREAK_PROFILE_HPP

#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "endobreak/breaking.hpp"
#include "endobreak/endo.hpp"
#include "endobreak/graph.hpp"
#include "endobreak/graph6.hpp"

namespace endobreak {

struct ProfileOptions {
    std::uint64_t max_endos = kDefaultEndoLimit;
    std::set<std::string> skip;  // JSON field names to skip
};

/// Per-graph census record: counts, flags, motions, orbit norm and the two
/// distinguishing numbers with witnesses.
struct InvariantProfile {
    std::string graph6;
    int order = 0;
    int edge_count = 0;
    std::optional<EndoCount> endo_count;
    std::optional<std::uint64_t> aut_count;
    std::optional<std::optional<bool>> core;  // inner nullopt: undecided (truncated)
    std::optional<bool> rigid;
    std::optional<std::optional<MotionResult>> endo_motion;  // inner nullopt: rigid
    std::optional<std::optional<MotionResult>> auto_motion;  // inner nullopt: asymmetric
    std::optional<std::optional<int>> orbit_norm;  // inner nullopt: rigid or truncated
    bool orbit_norm_truncated = false;
    std::optional<DistResult> dist;
    std::optional<DistResult> endo_dist;
};

inline InvariantProfile compute_profile(const Graph& g, const ProfileOptions& opts = {}) {
    auto want = [&](const char* key) { return !opts.skip.count(key); };
    InvariantProfile p;
    p.graph6 = write_graph6(g);
    p.order = g.order();
    p.edge_count = g.edge_count();
    if (want("endo_count")) p.endo_count = count_endomorphisms(g, opts.max_endos);
    if (want("aut_count")) p.aut_count = count_automorphisms(g);
    if (want("is_core")) p.core = is_core(g, opts.max_endos);
    if (want("is_rigid")) p.rigid = is_rigid(g);
    if (want("endo_motion")) p.endo_motion = endomorphism_motion(g);
    if (want("auto_motion")) p.auto_motion = automorphism_motion(g);
    if (want("endo_orbit_norm")) {
        try {
            p.orbit_norm = endomorphism_orbit_norm(g, opts.max_endos);
        } catch (const TruncatedError&) {
            p.orbit_norm = std::optional<int>{};
            p.orbit_norm_truncated = true;
        }
    }
    if (want("dist_number")) p.dist = distinguishing_number(g);
    if (want("endo_dist_number")) p.endo_dist = endo_distinguishing_number(g);
    return p;
}

/// Stable-key-order JSON rendering. Big counts are serialized as decimal
/// strings; truncated counts as "truncated@<limit>".
inline nlohmann::ordered_json profile_to_json(const InvariantProfile& p,
                                              const ProfileOptions& opts = {}) {
    using json = nlohmann::ordered_json;
    json j;
    j["graph6"] = p.graph6;
    j["order"] = p.order;
    j["edge_count"] = p.edge_count;
    if (p.endo_count)
        j["endo_count"] = p.endo_count->truncated
                              ? "truncated@" + std::to_string(opts.max_endos)
                              : std::to_string(p.endo_count->value);
    else
        j["endo_count"] = nullptr;
    j["aut_count"] = p.aut_count ? json(std::to_string(*p.aut_count)) : json(nullptr);
    j["is_core"] = (p.core && p.core->has_value()) ? json(**p.core) : json(nullptr);
    j["is_rigid"] = p.rigid ? json(*p.rigid) : json(nullptr);
    auto motion_field = [](const std::optional<std::optional<MotionResult>>& m) -> json {
        if (!m || !m->has_value()) return nullptr;
        return (*m)->motion;
    };
    j["endo_motion"] = motion_field(p.endo_motion);
    j["auto_motion"] = motion_field(p.auto_motion);
    j["endo_orbit_norm"] =
        (p.orbit_norm && p.orbit_norm->has_value()) ? json(**p.orbit_norm) : json(nullptr);
    j["dist_number"] = p.dist ? json(p.dist->value) : json(nullptr);
    j["endo_dist_number"] = p.endo_dist ? json(p.endo_dist->value) : json(nullptr);
    j["dist_witness"] = p.dist ? json(p.dist->witness.colors) : json(nullptr);
    j["endo_dist_witness"] = p.endo_dist ? json(p.endo_dist->witness.colors) : json(nullptr);
    return j;
}

}  // namespace endobreak

#endif
