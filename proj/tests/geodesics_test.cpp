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
#include "kgc/geodesics.hpp"

namespace kgc {
namespace {

TEST(ShortestPath, Examples) {
    const Graph p5 = path_graph(5);
    const DistanceMatrix d5 = apsp(p5);
    EXPECT_EQ(shortest_path(p5, d5, 0, 4), (VertexPath{0, 1, 2, 3, 4}));
    const Graph c4 = cycle_graph(4);
    const DistanceMatrix dc = apsp(c4);
    EXPECT_EQ(shortest_path(c4, dc, 0, 2), (VertexPath{0, 1, 2}));
    EXPECT_EQ(shortest_path(p5, d5, 3, 3), (VertexPath{3}));
}

TEST(ShortestPath, AlwaysIsometric) {
    for (const Graph& g : testing::small_corpus(40, 12, 31)) {
        const DistanceMatrix d = apsp(g);
        for (Vertex u = 0; u < g.num_vertices(); ++u) {
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                const VertexPath p = shortest_path(g, d, u, v);
                ASSERT_TRUE(is_isometric(d, p));
                EXPECT_EQ(p.front(), u);
                EXPECT_EQ(p.back(), v);
            }
        }
    }
}

TEST(IsIsometric, Examples) {
    const DistanceMatrix d5 = apsp(path_graph(5));
    EXPECT_TRUE(is_isometric(d5, VertexPath{0, 1, 2}));
    EXPECT_TRUE(is_isometric(d5, VertexPath{3}));
    EXPECT_FALSE(is_isometric(d5, VertexPath{0, 2}));
    EXPECT_FALSE(is_isometric(d5, VertexPath{}));
    const DistanceMatrix dc = apsp(cycle_graph(4));
    EXPECT_FALSE(is_isometric(dc, VertexPath{1, 0, 2}));
    EXPECT_FALSE(is_isometric(dc, VertexPath{0, 1, 2, 3}));
}

TEST(PathThrough, Examples) {
    const Graph p5 = path_graph(5);
    const DistanceMatrix d5 = apsp(p5);
    EXPECT_EQ(path_through(p5, d5, 0, 2, 4), (VertexPath{0, 1, 2, 3, 4}));
    EXPECT_EQ(path_through(p5, d5, 2, 2, 2), (VertexPath{2}));
    const Graph star = star_graph(3);
    const DistanceMatrix ds = apsp(star);
    EXPECT_EQ(path_through(star, ds, 1, 0, 2), (VertexPath{1, 0, 2}));
    EXPECT_THROW(path_through(star, ds, 1, 2, 3), InvalidArgument);
}

TEST(PathThrough, PostconditionOnCoGeodesicTriples) {
    for (const Graph& g : testing::small_corpus(30, 12, 32)) {
        const DistanceMatrix d = apsp(g);
        const int n = g.num_vertices();
        for (Vertex r = 0; r < n; ++r) {
            for (Vertex a = 0; a < n; ++a) {
                for (Vertex b = 0; b < n; ++b) {
                    if (d(r, a) + d(a, b) != d(r, b)) {
                        continue;
                    }
                    const VertexPath p = path_through(g, d, r, a, b);
                    ASSERT_TRUE(is_isometric(d, p));
                    EXPECT_EQ(static_cast<int>(p.size()) - 1, d(r, b));
                    EXPECT_EQ(p.front(), r);
                    EXPECT_EQ(p.back(), b);
                    EXPECT_NE(std::find(p.begin(), p.end(), a), p.end());
                }
            }
        }
    }
}

TEST(ExistsCoveringRpath, Examples) {
    const Graph star = star_graph(3);
    const DistanceMatrix ds = apsp(star);
    const auto leaf_paths = testing::all_rpaths(star, ds, 1);
    EXPECT_FALSE(testing::brute_exists_covering_rpath(leaf_paths, ds, 2, 3, 0));
    EXPECT_TRUE(testing::brute_exists_covering_rpath(leaf_paths, ds, 2, 3, 1));
    EXPECT_FALSE(exists_covering_rpath(ds, 1, 2, 3, 0));
    EXPECT_TRUE(exists_covering_rpath(ds, 1, 2, 3, 1));
    const DistanceMatrix d5 = apsp(path_graph(5));
    EXPECT_TRUE(exists_covering_rpath(d5, 0, 2, 4, 0));
}

TEST(ExistsCoveringRpath, AgreesWithBruteForce) {
    for (const Graph& g : testing::small_corpus(80, 9, 33)) {
        const DistanceMatrix d = apsp(g);
        const int n = g.num_vertices();
        for (Vertex r = 0; r < n; ++r) {
            const auto rpaths = testing::all_rpaths(g, d, r);
            for (int radius = 0; radius <= d.diameter(); ++radius) {
                for (Vertex u = 0; u < n; ++u) {
                    for (Vertex w = 0; w < n; ++w) {
                        ASSERT_EQ(exists_covering_rpath(d, r, u, w, radius),
                                  testing::brute_exists_covering_rpath(rpaths, d, u, w, radius))
                            << serialize_graph(g) << "r=" << r << " u=" << u << " w=" << w << " R=" << radius;
                    }
                }
            }
        }
    }
}

TEST(RootedRegions, MatchesPairwiseTest) {
    auto corpus = testing::small_corpus(60, 14, 34);
    corpus.push_back(grid_graph(4, 4));
    corpus.push_back(cycle_graph(9));
    for (const Graph& g : corpus) {
        const DistanceMatrix d = apsp(g);
        const int n = g.num_vertices();
        BallCache balls(d);
        for (Vertex r = 0; r < n; ++r) {
            const RootedRegions regions(g, d, r);
            for (int radius = 0; radius <= d.diameter(); ++radius) {
                for (Vertex w = 0; w < n; ++w) {
                    const auto covered = regions.covered_with(w, radius);
                    for (Vertex u = 0; u < n; ++u) {
                        ASSERT_EQ(covered[static_cast<std::size_t>(u)] != 0,
                                  exists_covering_rpath(d, balls, r, u, w, radius));
                    }
                }
            }
        }
    }
}

TEST(FamilyEccentricity, Examples) {
    const Graph p5 = path_graph(5);
    EXPECT_EQ(family_eccentricity(p5, std::vector<VertexPath>{{0, 1, 2, 3, 4}}), 0);
    const Graph star = star_graph(5);
    EXPECT_EQ(family_eccentricity(star, std::vector<VertexPath>{{1, 0, 2}, {3, 0, 4}}), 1);
    const Graph c8 = cycle_graph(8);
    EXPECT_EQ(family_eccentricity(c8, std::vector<VertexPath>{{0, 1, 2, 3, 4}}), 2);
    EXPECT_THROW(family_eccentricity(c8, std::vector<VertexPath>{}), InvalidArgument);
}

TEST(FamilyEccentricity, MatchesNaiveDoubleLoop) {
    SplitMix64 rng(35);
    for (const Graph& g : testing::small_corpus(40, 14, 35)) {
        const DistanceMatrix d = apsp(g);
        const int n = g.num_vertices();
        std::vector<VertexPath> paths;
        const int count = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < count; ++i) {
            paths.push_back(shortest_path(g, d, static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))),
                                          static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)))));
        }
        EXPECT_EQ(family_eccentricity(g, paths), testing::naive_family_eccentricity(d, paths));
    }
}

TEST(EnumerateGeodesics, Examples) {
    const Graph p5 = path_graph(5);
    EXPECT_EQ(enumerate_geodesics(p5, apsp(p5), 0, 4, 10).size(), 1U);
    const Graph c4 = cycle_graph(4);
    EXPECT_EQ(enumerate_geodesics(c4, apsp(c4), 0, 2, 10), (std::vector<VertexPath>{{0, 1, 2}, {0, 3, 2}}));
    const Graph grid = grid_graph(3, 3);
    const auto lattice = enumerate_geodesics(grid, apsp(grid), 0, 8, 100);
    EXPECT_EQ(lattice.size(), 6U);  // C(4,2) monotone lattice paths
    EXPECT_TRUE(std::is_sorted(lattice.begin(), lattice.end()));
    EXPECT_THROW(enumerate_geodesics(grid, apsp(grid), 0, 8, 5), CapExceeded);
    EXPECT_EQ(enumerate_geodesics(grid, apsp(grid), 4, 4, 1), (std::vector<VertexPath>{{4}}));
}

TEST(EnumerateGeodesics, MatchesDfsOverAllRpaths) {
    for (const Graph& g : testing::small_corpus(30, 10, 36)) {
        const DistanceMatrix d = apsp(g);
        for (Vertex s = 0; s < g.num_vertices(); ++s) {
            const auto rpaths = testing::all_rpaths(g, d, s);
            for (Vertex t = 0; t < g.num_vertices(); ++t) {
                std::vector<VertexPath> expected;
                for (const auto& p : rpaths) {
                    if (p.back() == t) {
                        expected.push_back(p);
                    }
                }
                std::sort(expected.begin(), expected.end());
                ASSERT_EQ(enumerate_geodesics(g, d, s, t, 100000), expected);
            }
        }
    }
}

} // namespace
} // namespace kgc
