// Copyright 2026 The kgc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <numeric>

#include "brute_force.hpp"
#include "kgc/error.hpp"
#include "kgc/generators.hpp"
#include "kgc/oracle.hpp"

namespace kgc {
namespace {

// Plain search over every k-multiset of geodesics, no dominance pruning.
int naive_optimum(const Graph& g, const DistanceMatrix& d, int k) {
    std::vector<VertexPath> all;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        for (auto& p : testing::all_rpaths(g, d, s)) {
            all.push_back(std::move(p));
        }
    }
    for (int radius = 0;; ++radius) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
        while (true) {
            std::vector<VertexPath> pick;
            for (auto i : idx) {
                pick.push_back(all[i]);
            }
            if (testing::naive_family_eccentricity(d, pick) <= radius) {
                return radius;
            }
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == all.size()) {
                --pos;
            }
            if (pos < 0) {
                break;
            }
            ++idx[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < k; ++q) {
                idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(pos)];
            }
        }
    }
}

TEST(ExactOptimum, Examples) {
    const Graph p5 = path_graph(5);
    EXPECT_EQ(exact_optimum(p5, apsp(p5), 1).optimum, 0);
    const Graph star = star_graph(5);
    EXPECT_EQ(exact_optimum(star, apsp(star), 2).optimum, 1);
    const Graph c8 = cycle_graph(8);
    EXPECT_EQ(exact_optimum(c8, apsp(c8), 1).optimum, 2);
}

TEST(ExactOptimum, WitnessVerifiesAndMatchesNaiveSearch) {
    for (const Graph& g : testing::small_corpus(40, 7, 71)) {
        const DistanceMatrix d = apsp(g);
        for (int k = 1; k <= std::min(2, g.num_vertices()); ++k) {
            const OracleResult r = exact_optimum(g, d, k);
            EXPECT_LE(static_cast<int>(r.witness.size()), k);
            for (const auto& p : r.witness) {
                EXPECT_TRUE(is_isometric(d, p));
            }
            EXPECT_EQ(family_eccentricity(g, r.witness), r.optimum);
            EXPECT_EQ(r.optimum, naive_optimum(g, d, k)) << serialize_graph(g) << "k=" << k;
        }
    }
}

TEST(ExactOptimum, DeduplicatesByVertexSet) {
    // C4 has 4 vertices, 4 edges and 4 two-edge geodesics, each with a distinct vertex set.
    const Graph c4 = cycle_graph(4);
    EXPECT_EQ(exact_optimum(c4, apsp(c4), 1).stats.paths_enumerated, 4U + 4U + 4U);
    // In K1,3 each leaf pair has one geodesic.
    const Graph star = star_graph(3);
    EXPECT_EQ(exact_optimum(star, apsp(star), 1).stats.paths_enumerated, 4U + 3U + 3U);
}

TEST(ExactOptimum, CapExceeded) {
    const Graph g = grid_graph(6, 6);
    OracleCaps caps;
    caps.max_paths = 50;
    EXPECT_THROW(exact_optimum(g, apsp(g), 1, caps), CapExceeded);
}

TEST(RootedRelaxation, Examples) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph t = random_tree(10, seed);
        const auto report = check_rooted_relaxation(t, apsp(t), 2, HalfInteger::from_integer(0));
        EXPECT_TRUE(report.holds);
        EXPECT_LE(report.max_slack, 0);
    }
    const Graph star = star_graph(5);
    const DistanceMatrix ds = apsp(star);
    EXPECT_TRUE(check_rooted_relaxation(star, ds, 2, 4 * four_point_delta(ds)).holds);
    const Graph grid = grid_graph(3, 3);
    const DistanceMatrix dg = apsp(grid);
    EXPECT_TRUE(check_rooted_relaxation(grid, dg, 1, 4 * four_point_delta(dg)).holds);
}

TEST(RootedRelaxation, HoldsOnCorpus) {
    for (const Graph& g : testing::small_corpus(30, 10, 72)) {
        const DistanceMatrix d = apsp(g);
        for (int k = 1; k <= std::min(3, g.num_vertices()); ++k) {
            EXPECT_TRUE(check_rooted_relaxation(g, d, k, 4 * four_point_delta(d)).holds);
        }
    }
}

TEST(SubdivisionCheck, Examples) {
    const auto p3 = check_subdivision_lemma(path_graph(3), 1, 2);
    EXPECT_TRUE(p3.holds());
    EXPECT_EQ(p3.subdivided_optimum, 0);
    EXPECT_EQ(p3.bound, 1);
    const auto star = check_subdivision_lemma(star_graph(5), 2, 2);
    EXPECT_TRUE(star.holds());
    EXPECT_EQ(star.bound, 3);
    EXPECT_LE(star.subdivided_optimum, 3);
    const auto c4 = check_subdivision_lemma(cycle_graph(4), 1, 3);
    EXPECT_TRUE(c4.holds());
    EXPECT_GT(c4.contraction_checks, 0U);
}

TEST(SubdivisionCheck, HoldsOnCorpus) {
    for (const Graph& g : testing::small_corpus(15, 6, 73)) {
        for (int ell : {2, 3}) {
            EXPECT_TRUE(check_subdivision_lemma(g, std::min(2, g.num_vertices()), ell).holds());
        }
    }
}

} // namespace
} // namespace kgc
