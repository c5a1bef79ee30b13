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

#ifndef KGC_SOLVER_HPP_
#define KGC_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kgc/geodesics.hpp"
#include "kgc/graph.hpp"
#include "kgc/half_integer.hpp"
#include "kgc/metric.hpp"
#include "kgc/rooted_cover.hpp"
#include "kgc/shallow_pairing.hpp"

namespace kgc {

enum class GammaMode {
    kAuto,     // smallest gamma admitting a pairing
    kFromTau,  // exactly 2*tau_hat + 1/2
    kFixed,    // user value
};

struct SolveOptions {
    GammaMode gamma_mode = GammaMode::kAuto;
    HalfInteger fixed_gamma;
    /// When set, used as the thinness bound instead of 4 * four_point_delta.
    std::optional<HalfInteger> tau_hat;
    int delta_vertex_cap = kDefaultDeltaVertexCap;
    RootedOptions rooted;
    /// Return the better of the pairing result and the truncated rooted cover. Not certified.
    bool best_effort = false;
};

struct BoundReport {
    HalfInteger tau_hat;
    bool tau_supplied = false;
    /// Ceiling of R_u - tau_hat, clamped at 0; the optimum is at least this.
    std::int64_t lower = 0;
    /// Floor of R_u + 5 tau_hat + 1; the returned radius is at most this.
    std::int64_t upper = 0;
    /// Whether the pairing used gamma <= 2 tau_hat + 1/2, the regime where `upper` is guaranteed.
    bool gamma_within_bound = false;
};

struct SolveResult {
    int k = 0;
    std::vector<VertexPath> paths;
    int radius = 0;
    RootedSolution rooted;
    std::vector<Vertex> profile;
    Pairing pairing;
    BoundReport bounds;
    bool exact = false;
    bool best_effort_used = false;
};

/// Thinness bound used for certificates: 4 times the four-point delta.
HalfInteger thinness_bound(const DistanceMatrix& d, int vertex_cap = kDefaultDeltaVertexCap);

/**
 * Additive approximation of the k-geodesic center.
 *
 * 1. best_root gives a root u, its radius R_u and a u-rooted cover C_u of at most 2k-1 paths.
 * 2. The profile is u followed by the far endpoint of every path of C_u, padded with u to length 2k.
 * 3. The profile is paired at a small gamma (see GammaMode).
 * 4. The paths between paired vertices form the answer; the radius is recomputed from scratch.
 */
SolveResult solve(const Graph& g, int k, const SolveOptions& options = {});
SolveResult solve(const Graph& g, const DistanceMatrix& d, int k, const SolveOptions& options = {});

/// solve() restricted to trees, where the answer is optimal and radius == R_u.
SolveResult solve_tree(const Graph& g, int k, const SolveOptions& options = {});

} // namespace kgc

#endif // KGC_SOLVER_HPP_
