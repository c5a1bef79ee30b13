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

#include "kgc/metric.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "kgc/error.hpp"

namespace kgc {

int DistanceMatrix::eccentricity(Vertex u) const {
    const auto r = row(u);
    return *std::max_element(r.begin(), r.end());
}

int DistanceMatrix::diameter() const {
    return *std::max_element(d_.begin(), d_.end());
}

namespace {

void bfs_into(const Graph& g, Vertex source, std::span<int> dist, std::vector<Vertex>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(source);
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        const int next = dist[static_cast<std::size_t>(v)] + 1;
        for (Vertex w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = next;
                queue.push_back(w);
            }
        }
    }
}

} // namespace

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()));
    std::vector<Vertex> queue;
    bfs_into(g, source, dist, queue);
    return dist;
}

DistanceMatrix apsp(const Graph& g, unsigned threads) {
    const int n = g.num_vertices();
    const auto un = static_cast<std::size_t>(n);
    std::vector<int> table(un * un);
    std::atomic<int> next{0};
    auto worker = [&] {
        std::vector<Vertex> queue;
        queue.reserve(un);
        for (int s = next++; s < n; s = next++) {
            bfs_into(g, s, std::span<int>(table.data() + static_cast<std::size_t>(s) * un, un), queue);
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    return DistanceMatrix(n, std::move(table));
}

int quadruple_gap(const DistanceMatrix& d, Vertex a, Vertex b, Vertex c, Vertex e) {
    std::array<int, 3> sums{d(a, b) + d(c, e), d(a, c) + d(b, e), d(a, e) + d(b, c)};
    std::sort(sums.begin(), sums.end());
    return sums[2] - sums[1];
}

HalfInteger four_point_delta(const DistanceMatrix& d, int vertex_cap) {
    const int n = d.size();
    if (n > vertex_cap) {
        throw CapExceeded("four-point hyperbolicity: " + std::to_string(n) +
                          " vertices exceeds the cap of " + std::to_string(vertex_cap));
    }
    std::vector<std::vector<Vertex>> adjacent(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (d(u, v) == 1) {
                adjacent[static_cast<std::size_t>(u)].push_back(v);
            }
        }
    }
    // (u, v) is far-apart when no neighbor of either end is farther from the other end.
    // Some quadruple attaining the maximum has both pairs of its largest sum far-apart.
    const auto far_apart = [&](Vertex u, Vertex v) {
        const int duv = d(u, v);
        for (Vertex w : adjacent[static_cast<std::size_t>(u)]) {
            if (d(w, v) > duv) {
                return false;
            }
        }
        for (Vertex w : adjacent[static_cast<std::size_t>(v)]) {
            if (d(u, w) > duv) {
                return false;
            }
        }
        return true;
    };
    struct Pair {
        int dist;
        Vertex u;
        Vertex v;
    };
    std::vector<Pair> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (far_apart(u, v)) {
                pairs.push_back({d(u, v), u, v});
            }
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.dist > b.dist; });

    // A quadruple's gap is at most twice the smaller distance of its largest-sum pairing.
    int best = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Pair& p = pairs[i];
        if (2 * p.dist <= best) {
            break;
        }
        for (std::size_t j = 0; j < i; ++j) {
            const Pair& q = pairs[j];
            best = std::max(best, quadruple_gap(d, p.u, p.v, q.u, q.v));
        }
    }
    return HalfInteger::from_doubled(best);
}

} // namespace kgc
