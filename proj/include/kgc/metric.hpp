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

#ifndef KGC_METRIC_HPP_
#define KGC_METRIC_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "kgc/graph.hpp"
#include "kgc/half_integer.hpp"

namespace kgc {

/// All-pairs hop distances of a connected graph, stored row-major.
class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<int> table) : n_(n), d_(std::move(table)) {}

    int size() const { return n_; }

    int operator()(Vertex u, Vertex v) const {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }

    std::span<const int> row(Vertex u) const {
        return {d_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n_),
                static_cast<std::size_t>(n_)};
    }

    int eccentricity(Vertex u) const;
    int diameter() const;

private:
    int n_;
    std::vector<int> d_;
};

/// One BFS per source. `threads` > 1 splits sources across workers; the result does not depend on it.
DistanceMatrix apsp(const Graph& g, unsigned threads = 1);

/// Hop distances from one source.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// (x|y)_z = (d(x,z) + d(z,y) - d(x,y)) / 2, exact.
inline HalfInteger gromov_product(const DistanceMatrix& d, Vertex x, Vertex y, Vertex z) {
    return HalfInteger::from_doubled(d(x, z) + d(z, y) - d(x, y));
}

/// Doubled four-point value of one quadruple: largest pair sum minus the second largest.
int quadruple_gap(const DistanceMatrix& d, Vertex a, Vertex b, Vertex c, Vertex e);

inline constexpr int kDefaultDeltaVertexCap = 512;

/**
 * Four-point hyperbolicity: the least delta such that for every quadruple the
 * two larger of the three pair sums differ by at most 2*delta.
 *
 * Only far-apart pairs are scanned, by decreasing distance. For a quadruple
 * whose largest sum is d(a,b) + d(c,e), the gap is at most
 * 2 min(d(a,b), d(c,e)), so the scan stops once twice the current pair
 * distance no longer exceeds the best gap. Worst case stays quartic;
 * instances with more than `vertex_cap` vertices are refused with CapExceeded.
 */
HalfInteger four_point_delta(const DistanceMatrix& d, int vertex_cap = kDefaultDeltaVertexCap);

} // namespace kgc

#endif // KGC_METRIC_HPP_
