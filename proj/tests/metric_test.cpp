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

#include "brute_force.hpp"
#include "kgc/error.hpp"
#include "kgc/generators.hpp"
#include "kgc/metric.hpp"

namespace kgc {
namespace {

TEST(Apsp, Examples) {
    EXPECT_EQ(apsp(path_graph(3))(0, 2), 2);
    const DistanceMatrix c4 = apsp(cycle_graph(4));
    EXPECT_EQ(c4(0, 2), 2);
    EXPECT_EQ(c4(0, 1), 1);
    EXPECT_EQ(apsp(grid_graph(3, 3))(0, 8), 4);
}

TEST(Apsp, MatchesFloydWarshallAndIsAMetric) {
    for (const Graph& g : testing::small_corpus(40, 14, 11)) {
        const DistanceMatrix d = apsp(g);
        const auto fw = testing::floyd_warshall(g);
        const int n = g.num_vertices();
        for (Vertex u = 0; u < n; ++u) {
            EXPECT_EQ(d(u, u), 0);
            for (Vertex v = 0; v < n; ++v) {
                ASSERT_EQ(d(u, v), fw[u][v]);
                EXPECT_EQ(d(u, v), d(v, u));
                EXPECT_EQ(d(u, v) == 1, g.has_edge(u, v));
                for (Vertex w = 0; w < n; ++w) {
                    EXPECT_LE(d(u, w), d(u, v) + d(v, w));
                }
            }
        }
    }
}

TEST(Apsp, ThreadCountDoesNotChangeResult) {
    const Graph g = random_connected(60, 90, 4);
    const DistanceMatrix one = apsp(g, 1);
    const DistanceMatrix four = apsp(g, 4);
    for (Vertex u = 0; u < 60; ++u) {
        for (Vertex v = 0; v < 60; ++v) {
            ASSERT_EQ(one(u, v), four(u, v));
        }
    }
}

TEST(GromovProduct, Examples) {
    const DistanceMatrix p3 = apsp(path_graph(3));
    EXPECT_EQ(gromov_product(p3, 0, 2, 1), HalfInteger::from_integer(0));
    EXPECT_EQ(gromov_product(p3, 0, 1, 2), HalfInteger::from_integer(1));
    const DistanceMatrix star = apsp(star_graph(3));
    EXPECT_EQ(gromov_product(star, 1, 2, 0), HalfInteger::from_integer(0));
}

TEST(GromovProduct, NonNegativeAndComplementary) {
    for (const Graph& g : testing::small_corpus(20, 10, 12)) {
        const DistanceMatrix d = apsp(g);
        const int n = g.num_vertices();
        for (Vertex x = 0; x < n; ++x) {
            for (Vertex y = 0; y < n; ++y) {
                for (Vertex z = 0; z < n; ++z) {
                    const auto a = gromov_product(d, x, y, z);
                    const auto b = gromov_product(d, x, z, y);
                    EXPECT_GE(a.doubled(), 0);
                    EXPECT_EQ(a.doubled() + b.doubled(), 2 * d(y, z));
                }
            }
        }
    }
}

TEST(FourPointDelta, Examples) {
    EXPECT_EQ(four_point_delta(apsp(random_tree(30, 2))), HalfInteger::from_integer(0));
    // Brute force over all quadruples of C4 and C6 gives a gap of 2, i.e. delta = 1.
    EXPECT_EQ(testing::brute_delta_doubled(apsp(cycle_graph(4))), 2);
    EXPECT_EQ(testing::brute_delta_doubled(apsp(cycle_graph(6))), 2);
    EXPECT_EQ(four_point_delta(apsp(cycle_graph(4))), HalfInteger::from_integer(1));
    EXPECT_EQ(four_point_delta(apsp(cycle_graph(6))), HalfInteger::from_integer(1));
    // Corner quadruple: sums 8, 4, 4, so the gap is 4 and delta = 2.
    EXPECT_EQ(four_point_delta(apsp(grid_graph(3, 3))).doubled(), 4);
    EXPECT_EQ(testing::brute_delta_doubled(apsp(grid_graph(3, 3))), 4);
}

TEST(FourPointDelta, TreesAreZero) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 1 + static_cast<int>(seed * 7 % 45);
        EXPECT_EQ(four_point_delta(apsp(random_tree(n, seed))).doubled(), 0) << "n=" << n << " seed=" << seed;
    }
}

TEST(FourPointDelta, PrunedScanMatchesBruteForce) {
    for (const Graph& g : testing::small_corpus(60, 12, 13)) {
        const DistanceMatrix d = apsp(g);
        EXPECT_EQ(four_point_delta(d).doubled(), testing::brute_delta_doubled(d));
    }
    for (int n = 3; n <= 11; ++n) {
        const DistanceMatrix d = apsp(cycle_graph(n));
        EXPECT_EQ(four_point_delta(d).doubled(), testing::brute_delta_doubled(d));
    }
    SplitMix64 rng(14);
    for (int i = 0; i < 300; ++i) {
        const int n = 4 + static_cast<int>(rng.below(11));
        const int max_m = n * (n - 1) / 2;
        const int m = n - 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_m - n + 2)));
        const DistanceMatrix d = apsp(random_connected(n, m, rng()));
        ASSERT_EQ(four_point_delta(d).doubled(), testing::brute_delta_doubled(d));
    }
    for (auto [w, h] : {std::pair{2, 7}, std::pair{3, 4}, std::pair{4, 4}, std::pair{5, 3}}) {
        const DistanceMatrix d = apsp(grid_graph(w, h));
        EXPECT_EQ(four_point_delta(d).doubled(), testing::brute_delta_doubled(d));
    }
}

TEST(FourPointDelta, CapExceeded) {
    const DistanceMatrix d = apsp(path_graph(20));
    EXPECT_THROW(four_point_delta(d, 19), CapExceeded);
    EXPECT_NO_THROW(four_point_delta(d, 20));
}

TEST(HalfIntegerType, Arithmetic) {
    const auto h = HalfInteger::from_doubled(5);
    EXPECT_EQ(h.floor(), 2);
    EXPECT_EQ(h.ceil(), 3);
    EXPECT_EQ(h.to_string(), "2.5");
    EXPECT_EQ((2 * h + kHalf).doubled(), 11);
    EXPECT_THROW(HalfInteger::from_doubled(-1), InvalidArgument);
}

} // namespace
} // namespace kgc

namespace kgc {
namespace {

TEST(Subdivide, ScalesDistancesBetweenOriginalVertices) {
    for (const Graph& g : testing::small_corpus(25, 9, 21)) {
        const DistanceMatrix d = apsp(g);
        for (int ell : {2, 3}) {
            const DistanceMatrix dl = apsp(subdivide(g, ell));
            for (Vertex u = 0; u < g.num_vertices(); ++u) {
                for (Vertex v = 0; v < g.num_vertices(); ++v) {
                    ASSERT_EQ(dl(u, v), ell * d(u, v));
                }
            }
        }
    }
}

} // namespace
} // namespace kgc
