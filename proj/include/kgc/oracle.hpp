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

#ifndef KGC_ORACLE_HPP_
#define KGC_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "kgc/geodesics.hpp"
#include "kgc/graph.hpp"
#include "kgc/half_integer.hpp"
#include "kgc/metric.hpp"

namespace kgc {

struct OracleCaps {
    std::size_t max_paths = 200'000;
    std::uint64_t max_combinations = 100'000'000;  // elementary mask-OR steps
};

struct OracleStats {
    std::size_t paths_enumerated = 0;  // distinct vertex sets
    std::uint64_t combinations_tried = 0;
};

struct OracleResult {
    int optimum = 0;
    std::vector<VertexPath> witness;  // at most k paths
    OracleStats stats;
};

/**
 * Exact k-geodesic center by exhaustive search.
 *
 * All geodesics between all vertex pairs are enumerated (single vertices
 * included) and deduplicated by vertex set. For R = 0, 1, ... every path is
 * turned into the bitmask of its R-ball, dominated masks are dropped, and a
 * depth-limited branch and bound over the remaining masks looks for k masks
 * whose union is V. The first feasible R is the optimum; the search at R-1
 * having failed is the optimality proof. Throws CapExceeded past `caps`.
 */
OracleResult exact_optimum(const Graph& g, const DistanceMatrix& d, int k, const OracleCaps& caps = {});

struct RootedRelaxationReport {
    int optimum = 0;
    HalfInteger tau_hat;
    /// Largest family_eccentricity(C*_r) - R* over the witness endpoints r.
    int max_slack = 0;
    bool holds = false;  // every rooted relaxation within R* + tau_hat
};

/// For every endpoint r of the optimal witness, rebuilds the family {shortest_path(r, x)} over the
/// other endpoints and checks that its eccentricity stays within R* + tau_hat.
RootedRelaxationReport check_rooted_relaxation(const Graph& g, const DistanceMatrix& d, int k,
                                               HalfInteger tau_hat, const OracleCaps& caps = {});

struct SubdivisionReport {
    int ell = 1;
    int optimum = 0;             // R* of g
    int subdivided_optimum = 0;  // R* of g subdivided
    std::int64_t bound = 0;      // optimum * ell + floor(ell / 2)
    bool cover_bound_holds = false;
    std::size_t contraction_checks = 0;
    std::size_t contraction_failures = 0;

    bool holds() const { return cover_bound_holds && contraction_failures == 0; }
};

/**
 * Checks the subdivided optimum against optimum * ell + floor(ell/2), and the
 * contraction property: for a geodesic P of the subdivision between original
 * vertices and an original vertex w at distance t from P, the original-vertex
 * trace G(P) is a geodesic of g and d_g(w, G(P)) <= floor(t / ell). The
 * geodesics checked are shortest_path between every pair of original vertices.
 */
SubdivisionReport check_subdivision_lemma(const Graph& g, int k, int ell, const OracleCaps& caps = {});

} // namespace kgc

#endif // KGC_ORACLE_HPP_
