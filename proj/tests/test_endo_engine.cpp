#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "endobreak/endo.hpp"
#include "endobreak/graph.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace endobreak;

TEST_CASE("is_endomorphism") {
    Graph c4 = make_cycle(4);
    CHECK(is_endomorphism(c4, {0, 1, 0, 1}));
    CHECK(is_endomorphism(c4, identity_map(4)));
    CHECK(!is_endomorphism(make_complete(3), {0, 0, 2}));
    CHECK_THROWS_AS(is_endomorphism(c4, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(is_endomorphism(c4, {0, 1, 2, 9}), std::out_of_range);
}

TEST_CASE("endomorphism counts") {
    // C_4: 8 automorphisms, 16 maps folding onto a P_3, 8 onto an edge; the
    // total also equals tr(A^4) = 2^4 + (-2)^4 = 32 and matches the oracle.
    CHECK(count_endomorphisms(make_cycle(4)).value == 32);
    CHECK(oracles::naive_endomorphisms(make_cycle(4)).size() == 32);
    // P_3: frozen from the naive oracle over all 27 total maps
    auto oracle = oracles::naive_endomorphisms(make_path(3));
    CHECK(oracle.size() == 6);
    CHECK(count_endomorphisms(make_path(3)).value == 6);
    CHECK(count_endomorphisms(make_path(2)).value == 2);
}

TEST_CASE("enumeration is lexicographic, complete, and truncation is distinct") {
    Graph c4 = make_cycle(4);
    EnumStatus st;
    auto maps = enumerate_endomorphisms(c4, kDefaultEndoLimit, &st);
    CHECK(st == EnumStatus::Complete);
    CHECK(std::is_sorted(maps.begin(), maps.end()));
    CHECK(std::adjacent_find(maps.begin(), maps.end()) == maps.end());
    auto truncated = enumerate_endomorphisms(c4, 5, &st);
    CHECK(st == EnumStatus::Truncated);
    CHECK(truncated.size() == 5);
    auto exact = enumerate_endomorphisms(c4, 32, &st);
    CHECK(st == EnumStatus::Complete);
    CHECK(exact.size() == 32);
}

TEST_CASE("oracle equivalence on all graphs with <= 4 vertices") {
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : corpus::all_labeled_graphs(n)) {
            EnumStatus st;
            auto got = enumerate_endomorphisms(g, kDefaultEndoLimit, &st);
            CHECK(st == EnumStatus::Complete);
            CHECK(got == oracles::naive_endomorphisms(g));
            CHECK(enumerate_automorphisms(g) == oracles::naive_automorphisms(g));
        }
}

TEST_CASE("automorphism groups of standard families") {
    CHECK(count_automorphisms(make_cycle(5)) == 10);
    CHECK(count_automorphisms(make_complete(4)) == 24);
    CHECK(count_automorphisms(make_path(5)) == 2);
}

TEST_CASE("Aut is contained in End and both are closed under composition") {
    for (const Graph& g : {make_cycle(5), make_path(4), make_complete_bipartite(2, 2)}) {
        auto endos = enumerate_endomorphisms(g);
        std::set<VertexMap> endo_set(endos.begin(), endos.end());
        for (const auto& a : enumerate_automorphisms(g)) CHECK(endo_set.count(a) == 1);
        for (const auto& f : endos)
            for (const auto& h : endos) {
                VertexMap comp(g.order());
                for (int v = 0; v < g.order(); ++v) comp[v] = f[h[v]];
                CHECK(endo_set.count(comp) == 1);
            }
    }
}

TEST_CASE("core and rigid classification") {
    CHECK(is_core(make_complete(5)) == true);
    CHECK(is_core(make_cycle(7)) == true);
    CHECK(is_core(make_cycle(6)) == false);
    CHECK(is_rigid(make_complete(1)));
    CHECK(is_rigid(Graph::from_edges(0, {})));
    CHECK(!is_rigid(make_path(2)));
    CHECK(!is_rigid(make_cycle(5)));
    // undecided when the search would exceed the visit limit
    CHECK(!is_core(make_complete(5), 10).has_value());
}

TEST_CASE("motion of maps") {
    CHECK(motion_of(identity_map(6)) == 0);
    CHECK(motion_of({0, 1, 2, 1}) == 1);
    CHECK(motion_of({1, 0, 2, 3}) == 2);
}

TEST_CASE("fixed points") {
    CHECK(fixed_points(identity_map(5)) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(fixed_points({0, 1, 2, 1}) == std::vector<int>{0, 1, 2});
    CHECK(fixed_points({1, 0}).empty());
}

TEST_CASE("endomorphism motion of small families") {
    auto c4 = endomorphism_motion(make_cycle(4));
    REQUIRE(c4.has_value());
    CHECK(c4->motion == 1);
    CHECK(is_endomorphism(make_cycle(4), c4->witness));
    CHECK(motion_of(c4->witness) == 1);
    CHECK(c4->witness == VertexMap{0, 1, 0, 3});  // lexicographically least

    auto c5 = endomorphism_motion(make_cycle(5));
    REQUIRE(c5.has_value());
    CHECK(c5->motion == 4);

    CHECK(!endomorphism_motion(make_complete(1)).has_value());  // rigid outcome
}

TEST_CASE("automorphism motion") {
    auto c5 = automorphism_motion(make_cycle(5));
    REQUIRE(c5.has_value());
    CHECK(c5->motion == 4);
    auto k4 = automorphism_motion(make_complete(4));
    REQUIRE(k4.has_value());
    CHECK(k4->motion == 2);
    // C_6: the reflections through opposite vertices fix 2 and move 4; frozen
    // against the permutation oracle over all 720 maps
    auto oracle = oracles::naive_automorphisms(make_cycle(6));
    int best = 6;
    for (const auto& f : oracle)
        if (motion_of(f) > 0) best = std::min(best, motion_of(f));
    CHECK(best == 4);
    auto c6 = automorphism_motion(make_cycle(6));
    REQUIRE(c6.has_value());
    CHECK(c6->motion == 4);
    CHECK(!automorphism_motion(make_complete(1)).has_value());  // asymmetric outcome
}

TEST_CASE("branch-and-bound motion equals the enumeration minimum on small connected graphs") {
    for (const Graph& g : corpus::connected_graphs_upto(5)) {
        int best = std::numeric_limits<int>::max();
        for (const auto& f : enumerate_endomorphisms(g))
            if (!is_identity(f)) best = std::min(best, motion_of(f));
        auto got = endomorphism_motion(g);
        if (best == std::numeric_limits<int>::max()) {
            CHECK(!got.has_value());
        } else {
            REQUIRE(got.has_value());
            CHECK(got->motion == best);
            CHECK(is_endomorphism(g, got->witness));
            CHECK(motion_of(got->witness) == best);
        }
    }
}

TEST_CASE("orbit partitions") {
    auto p = orbit_partition({1, 1});
    CHECK(p.blocks.size() == 1);
    CHECK(p.blocks[0] == std::vector<int>{0, 1});
    CHECK(orbit_partition(identity_map(5)).blocks.size() == 5);
    CHECK(orbit_partition({1, 2, 0}).blocks.size() == 1);
}

TEST_CASE("orbit norms") {
    CHECK(orbit_norm_of({1, 1}) == 1);
    CHECK(orbit_norm_of(identity_map(4)) == 0);
    CHECK(orbit_norm_of({1, 2, 3, 4, 0}) == 4);
    // o(G) examples
    CHECK(endomorphism_orbit_norm(make_cycle(4)) == 1);
    CHECK(!endomorphism_orbit_norm(make_complete(1)).has_value());
    CHECK_THROWS_AS(endomorphism_orbit_norm(make_cycle(6), 3), TruncatedError);
}

TEST_CASE("orbit norm dominates half the motion, small corpus") {
    for (const Graph& g : corpus::connected_graphs_upto(5))
        for (const auto& f : enumerate_endomorphisms(g))
            if (!is_identity(f)) CHECK(2 * orbit_norm_of(f) >= motion_of(f));
}

TEST_CASE("endomorphism motion never exceeds automorphism motion") {
    for (const Graph& g : corpus::connected_graphs_upto(5)) {
        auto em = endomorphism_motion(g);
        auto am = automorphism_motion(g);
        if (em && am) CHECK(em->motion <= am->motion);
    }
}

// Orbits of a finite-graph endomorphism form the unique preimage-invariant
// partition with the most blocks; the implementation uses the equivalence
// closure of v ~ image[v]. Check the two descriptions agree on small cases.
TEST_CASE("orbit partition maximizes blocks among preimage-invariant partitions") {
    auto preimage_invariant = [](const VertexMap& f, const std::vector<int>& block_of) {
        for (int v = 0; v < static_cast<int>(f.size()); ++v)
            if (block_of[v] != block_of[f[v]]) return false;
        return true;
    };
    // all set partitions of {0..n-1} as block_of arrays in RGS form
    auto all_partitions = [](int n) {
        std::vector<std::vector<int>> out;
        std::vector<int> rgs(n, 0);
        auto rec = [&](auto&& self, int i, int maxused) -> void {
            if (i == n) {
                out.push_back(rgs);
                return;
            }
            for (int b = 0; b <= maxused + 1; ++b) {
                rgs[i] = b;
                self(self, i + 1, std::max(maxused, b));
            }
        };
        rec(rec, 0, -1);
        return out;
    };
    for (int n = 2; n <= 4; ++n) {
        auto partitions = all_partitions(n);
        for (const Graph& g : corpus::connected_graphs_exactly(n))
            for (const auto& f : enumerate_endomorphisms(g)) {
                auto part = orbit_partition(f);
                CHECK(preimage_invariant(f, part.block_of));
                int max_blocks = 0;
                for (const auto& cand : partitions)
                    if (preimage_invariant(f, cand)) {
                        int blocks = *std::max_element(cand.begin(), cand.end()) + 1;
                        max_blocks = std::max(max_blocks, blocks);
                    }
                CHECK(static_cast<int>(part.blocks.size()) == max_blocks);
            }
    }
}
