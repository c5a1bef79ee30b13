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

#ifndef KGC_SHALLOW_PAIRING_HPP_
#define KGC_SHALLOW_PAIRING_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kgc/geodesics.hpp"
#include "kgc/graph.hpp"
#include "kgc/half_integer.hpp"
#include "kgc/metric.hpp"

namespace kgc {

/// Even-length vertex sequence; repeated vertices are distinct positions.
class Profile {
public:
    explicit Profile(std::vector<Vertex> vertices);

    std::span<const Vertex> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }

private:
    std::vector<Vertex> vertices_;
};

using PositionPair = std::pair<int, int>;

/// Partition of profile positions into pairs, with an apex v such that (x|y)_v <= gamma for every pair.
struct Pairing {
    std::vector<PositionPair> positions;     // i < j, sorted by i
    std::vector<std::pair<Vertex, Vertex>> pairs;  // the vertices at those positions
    Vertex apex = 0;
    HalfInteger gamma;
};

/// Adjacency over profile positions, neighbor lists ascending.
using PositionGraph = std::vector<std::vector<int>>;

/// Profile members y (other than `position` itself) with (x|y)_u >= 2*tau_hat + 1, where x = profile[position].
std::vector<Vertex> fiber(const DistanceMatrix& d, Vertex u, std::size_t position, const Profile& profile,
                          HalfInteger tau_hat);

/// Positions i != j adjacent iff (profile[i] | profile[j])_apex <= gamma.
PositionGraph pairing_graph(const DistanceMatrix& d, Vertex apex, const Profile& profile, HalfInteger gamma);

/// Lexicographically least perfect matching of `h`, or nullopt when none exists.
/// Existence is decided by Edmonds' blossom algorithm; the lexicographic order comes
/// from matching the smallest free position to its smallest feasible partner.
std::optional<std::vector<PositionPair>> perfect_matching(const PositionGraph& h);

/// First apex in id order whose pairing graph at `gamma` has a perfect matching.
std::optional<Pairing> find_shallow_pairing(const DistanceMatrix& d, const Profile& profile, HalfInteger gamma);

/// Tries gamma = 0, 1/2, 1, ... and returns the first success (always by gamma = diameter).
Pairing min_gamma_pairing(const DistanceMatrix& d, const Profile& profile);

/// One shortest_path per pair; a pair {u,u} yields the single-vertex path [u].
std::vector<VertexPath> paths_of_pairing(const Graph& g, const DistanceMatrix& d, const Pairing& pairing);

/// Sum of d(v, x) over the profile.
std::int64_t total_distance(const DistanceMatrix& d, const Profile& profile, Vertex v);

/// Sum of d(x, y) over the pairs.
std::int64_t pairing_distance(const DistanceMatrix& d, std::span<const std::pair<Vertex, Vertex>> pairs);
inline std::int64_t pairing_distance(const DistanceMatrix& d, const Pairing& pairing) {
    return pairing_distance(d, pairing.pairs);
}

} // namespace kgc

#endif // KGC_SHALLOW_PAIRING_HPP_
