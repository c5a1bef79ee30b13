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

#ifndef KGC_GEODESICS_HPP_
#define KGC_GEODESICS_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "kgc/graph.hpp"
#include "kgc/metric.hpp"

namespace kgc {

/// Sequence of vertices; a single vertex is a length-0 path.
using VertexPath = std::vector<Vertex>;

/// Geodesic from u to v. From each vertex the walk moves to the smallest-id
/// neighbor that is one step closer to v.
VertexPath shortest_path(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v);

/// True iff consecutive vertices are adjacent and d(first, last) equals the path length.
bool is_isometric(const DistanceMatrix& d, std::span<const Vertex> path);

/// shortest_path(r,a) followed by shortest_path(a,b), with `a` kept once.
/// Requires d(r,a) + d(a,b) == d(r,b); throws InvalidArgument otherwise.
VertexPath path_through(const Graph& g, const DistanceMatrix& d, Vertex r, Vertex a, Vertex b);

/// min over path vertices p of d(x, p).
int distance_to_path(const DistanceMatrix& d, Vertex x, std::span<const Vertex> path);

/// Vertices within distance `radius` of `center`, ascending by id. Memoized per (center, radius).
class BallCache {
public:
    explicit BallCache(const DistanceMatrix& d) : d_(&d) {}

    const std::vector<Vertex>& ball(Vertex center, int radius);

private:
    const DistanceMatrix* d_;
    std::map<std::pair<Vertex, int>, std::vector<Vertex>> balls_;
};

/**
 * Whether some isometric path with end-vertex r comes within `radius` of both u and w.
 *
 * An r-path P within radius of u and w has nearest vertices a (to u) and b
 * (to w); both lie on one geodesic issued from r, so one of them lies between
 * r and the other. Conversely, if a in B(u) and b in B(w) satisfy
 * d(r,a) + d(a,b) = d(r,b) (or the symmetric identity), path_through(r, a, b)
 * is such an r-path. The test therefore scans pairs of ball vertices, with `a`
 * taken in order of increasing d(r,a), and stops at the first co-geodesic pair.
 */
bool exists_covering_rpath(const DistanceMatrix& d, Vertex r, Vertex u, Vertex w, int radius);
bool exists_covering_rpath(const DistanceMatrix& d, BallCache& balls, Vertex r, Vertex u, Vertex w,
                           int radius);

/**
 * Batched form of exists_covering_rpath for a fixed root.
 *
 * Precomputes the BFS layering from r. For a vertex w and radius R, the set of
 * vertices u passing exists_covering_rpath(r, u, w, R) is exactly the R-ball
 * around the region Y of vertices comparable (in the shortest-path order from
 * r) with some vertex of B_R(w): Y is the union of the geodesic ancestors and
 * descendants of B_R(w). Both closures and the final ball cost O(n + m).
 */
class RootedRegions {
public:
    RootedRegions(const Graph& g, const DistanceMatrix& d, Vertex root);

    Vertex root() const { return root_; }

    /// Marks every u with exists_covering_rpath(root, u, w, radius).
    std::vector<char> covered_with(Vertex w, int radius) const;

private:
    const Graph* g_;
    const DistanceMatrix* d_;
    Vertex root_;
    std::vector<Vertex> by_level_;  // vertices sorted by distance from root, ties by id
};

/// Largest distance from any vertex to the union of the paths (multi-source BFS).
/// Throws InvalidArgument for an empty family.
int family_eccentricity(const Graph& g, std::span<const VertexPath> paths);

/// Per-vertex distance to the union of the paths.
std::vector<int> distance_to_family(const Graph& g, std::span<const VertexPath> paths);

/// Every (s,t)-geodesic in lexicographic order. Throws CapExceeded past `cap` paths.
std::vector<VertexPath> enumerate_geodesics(const Graph& g, const DistanceMatrix& d, Vertex s, Vertex t,
                                            std::size_t cap);

} // namespace kgc

#endif // KGC_GEODESICS_HPP_
