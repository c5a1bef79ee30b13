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

#ifndef KGC_ROOTED_COVER_HPP_
#define KGC_ROOTED_COVER_HPP_

#include <optional>
#include <span>
#include <vector>

#include "kgc/geodesics.hpp"
#include "kgc/graph.hpp"
#include "kgc/metric.hpp"

namespace kgc {

/// Result of one greedy pass: a rooted cover (at most 2k-1 r-paths) or a packing of exactly 2k vertices.
struct RootedOutcome {
    std::vector<VertexPath> cover;
    std::vector<Vertex> packing;

    bool is_cover() const { return packing.empty(); }
};

/// A packing valid at `radius`, certifying that no rooted cover of size 2k-1 exists at that radius.
struct PackingWitness {
    int radius = 0;
    std::vector<Vertex> vertices;
};

struct RootSearch {
    Vertex root = 0;
    int radius = 0;
    std::vector<VertexPath> cover;
    std::optional<PackingWitness> witness;  // present iff radius > 0
    int monotonicity_violations = 0;        // only counted in linear-scan mode
};

/// Best root over all vertices; same fields as RootSearch.
using RootedSolution = RootSearch;

struct RootedOptions {
    /// Abandon a root once its lower bracket reaches the incumbent radius.
    bool prune = true;
    /// Replace the binary search by a full upward scan and count non-monotone greedy answers.
    bool linear_scan = false;
    unsigned threads = 1;
};

/**
 * Greedy cover-or-packing for a fixed root and radius.
 *
 * Repeatedly picks the remaining vertex farthest from r (smallest id on ties),
 * records shortest_path(r, v_i), and removes every remaining u for which some
 * r-path comes within `radius` of both u and v_i. Stops after 2k picks or
 * when nothing remains. Exactly 2k picks yield the packing, even if the last
 * pick emptied the set; otherwise the recorded paths form the cover.
 */
RootedOutcome cover_or_packing(const Graph& g, const DistanceMatrix& d, Vertex root, int radius, int k);

/// Same as above, reusing the BFS layering of `regions` (whose root is used).
RootedOutcome cover_or_packing(const Graph& g, const DistanceMatrix& d, const RootedRegions& regions,
                               int radius, int k);

/// True iff no r-path has both members of any pair of `vertices` within `radius`.
bool verify_packing(const DistanceMatrix& d, Vertex root, int radius, std::span<const Vertex> vertices);

/**
 * Smallest radius at which cover_or_packing returns a cover for `root`.
 *
 * Keeps a bracket (lo, hi) with a packing at lo (or lo = -1) and a cover at hi,
 * starting from hi = ecc(root) where the first pick already removes
 * everything. The packing found at hi-1 is returned as the lower-bound
 * witness; packings stay packings at every smaller radius, so the witness is
 * sound whether or not the greedy is monotone in the radius.
 *
 * With `prune_at` set, the search returns nullopt as soon as lo >= *prune_at.
 */
std::optional<RootSearch> min_radius_for_root(const Graph& g, const DistanceMatrix& d, Vertex root, int k,
                                              const RootedOptions& options = {},
                                              std::optional<int> prune_at = std::nullopt);

/// Runs min_radius_for_root over every vertex; minimal radius wins, ties go to the smallest root id.
RootedSolution best_root(const Graph& g, const DistanceMatrix& d, int k, const RootedOptions& options = {});

} // namespace kgc

#endif // KGC_ROOTED_COVER_HPP_
