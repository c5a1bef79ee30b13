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

#include "kgc/geodesics.hpp"

#include <algorithm>
#include <limits>

#include "kgc/error.hpp"

namespace kgc {

VertexPath shortest_path(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
    VertexPath path{u};
    path.reserve(static_cast<std::size_t>(d(u, v)) + 1);
    Vertex cur = u;
    while (cur != v) {
        const int want = d(cur, v) - 1;
        for (Vertex w : g.neighbors(cur)) {
            if (d(w, v) == want) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

bool is_isometric(const DistanceMatrix& d, std::span<const Vertex> path) {
    if (path.empty()) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (d(path[i], path[i + 1]) != 1) {
            return false;
        }
    }
    return static_cast<std::size_t>(d(path.front(), path.back())) == path.size() - 1;
}

VertexPath path_through(const Graph& g, const DistanceMatrix& d, Vertex r, Vertex a, Vertex b) {
    if (d(r, a) + d(a, b) != d(r, b)) {
        throw InvalidArgument("path_through: vertex " + std::to_string(a) + " is not on a geodesic from " +
                              std::to_string(r) + " to " + std::to_string(b));
    }
    VertexPath path = shortest_path(g, d, r, a);
    const VertexPath tail = shortest_path(g, d, a, b);
    path.insert(path.end(), tail.begin() + 1, tail.end());
    return path;
}

int distance_to_path(const DistanceMatrix& d, Vertex x, std::span<const Vertex> path) {
    int best = std::numeric_limits<int>::max();
    for (Vertex p : path) {
        best = std::min(best, d(x, p));
    }
    return best;
}

const std::vector<Vertex>& BallCache::ball(Vertex center, int radius) {
    auto [it, inserted] = balls_.try_emplace({center, radius});
    if (inserted) {
        const auto row = d_->row(center);
        for (Vertex v = 0; v < d_->size(); ++v) {
            if (row[static_cast<std::size_t>(v)] <= radius) {
                it->second.push_back(v);
            }
        }
    }
    return it->second;
}

namespace {

bool co_geodesic(const DistanceMatrix& d, Vertex r, Vertex a, Vertex b) {
    const int ra = d(r, a);
    const int rb = d(r, b);
    const int ab = d(a, b);
    return ra + ab == rb || rb + ab == ra;
}

bool scan_balls(const DistanceMatrix& d, Vertex r, std::span<const Vertex> ball_u,
                std::span<const Vertex> ball_w) {
    std::vector<Vertex> by_root(ball_u.begin(), ball_u.end());
    std::stable_sort(by_root.begin(), by_root.end(),
                     [&](Vertex x, Vertex y) { return d(r, x) < d(r, y); });
    for (Vertex a : by_root) {
        for (Vertex b : ball_w) {
            if (co_geodesic(d, r, a, b)) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

bool exists_covering_rpath(const DistanceMatrix& d, Vertex r, Vertex u, Vertex w, int radius) {
    BallCache balls(d);
    return exists_covering_rpath(d, balls, r, u, w, radius);
}

bool exists_covering_rpath(const DistanceMatrix& d, BallCache& balls, Vertex r, Vertex u, Vertex w,
                           int radius) {
    if (radius < 0) {
        return false;
    }
    const auto& ball_u = balls.ball(u, radius);
    const auto& ball_w = balls.ball(w, radius);
    return scan_balls(d, r, ball_u, ball_w);
}

RootedRegions::RootedRegions(const Graph& g, const DistanceMatrix& d, Vertex root)
    : g_(&g), d_(&d), root_(root) {
    if (!g.contains(root)) {
        throw InvalidArgument("root " + std::to_string(root) + " out of range");
    }
    const int n = g.num_vertices();
    by_level_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        by_level_[static_cast<std::size_t>(v)] = v;
    }
    const auto row = d.row(root);
    std::stable_sort(by_level_.begin(), by_level_.end(), [&](Vertex a, Vertex b) {
        return row[static_cast<std::size_t>(a)] < row[static_cast<std::size_t>(b)];
    });
}

std::vector<char> RootedRegions::covered_with(Vertex w, int radius) const {
    const int n = g_->num_vertices();
    const auto un = static_cast<std::size_t>(n);
    std::vector<char> covered(un, 0);
    if (radius < 0) {
        return covered;
    }
    const auto from_root = d_->row(root_);
    const auto from_w = d_->row(w);
    auto level = [&](Vertex v) { return from_root[static_cast<std::size_t>(v)]; };

    // Descendants of the ball: reachable by stepping away from the root.
    std::vector<char> down(un, 0);
    for (Vertex x : by_level_) {
        const auto ux = static_cast<std::size_t>(x);
        if (from_w[ux] <= radius) {
            down[ux] = 1;
            continue;
        }
        for (Vertex p : g_->neighbors(x)) {
            if (level(p) + 1 == level(x) && down[static_cast<std::size_t>(p)]) {
                down[ux] = 1;
                break;
            }
        }
    }
    // Ancestors of the ball: reachable by stepping towards the root.
    std::vector<char> up(un, 0);
    for (auto it = by_level_.rbegin(); it != by_level_.rend(); ++it) {
        const Vertex x = *it;
        const auto ux = static_cast<std::size_t>(x);
        if (from_w[ux] <= radius) {
            up[ux] = 1;
            continue;
        }
        for (Vertex c : g_->neighbors(x)) {
            if (level(c) == level(x) + 1 && up[static_cast<std::size_t>(c)]) {
                up[ux] = 1;
                break;
            }
        }
    }

    std::vector<int> dist(un, -1);
    std::vector<Vertex> queue;
    queue.reserve(un);
    for (Vertex v = 0; v < n; ++v) {
        const auto uv = static_cast<std::size_t>(v);
        if (down[uv] || up[uv]) {
            dist[uv] = 0;
            queue.push_back(v);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        const int next = dist[static_cast<std::size_t>(v)] + 1;
        if (next > radius) {
            continue;
        }
        for (Vertex x : g_->neighbors(v)) {
            if (dist[static_cast<std::size_t>(x)] < 0) {
                dist[static_cast<std::size_t>(x)] = next;
                queue.push_back(x);
            }
        }
    }
    for (std::size_t v = 0; v < un; ++v) {
        covered[v] = dist[v] >= 0 ? 1 : 0;
    }
    return covered;
}

std::vector<int> distance_to_family(const Graph& g, std::span<const VertexPath> paths) {
    const auto un = static_cast<std::size_t>(g.num_vertices());
    std::vector<int> dist(un, -1);
    std::vector<Vertex> queue;
    queue.reserve(un);
    for (const auto& path : paths) {
        for (Vertex v : path) {
            if (!g.contains(v)) {
                throw InvalidArgument("path vertex " + std::to_string(v) + " out of range");
            }
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = 0;
                queue.push_back(v);
            }
        }
    }
    if (queue.empty()) {
        throw InvalidArgument("family_eccentricity: empty path family");
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (Vertex w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int family_eccentricity(const Graph& g, std::span<const VertexPath> paths) {
    const auto dist = distance_to_family(g, paths);
    return *std::max_element(dist.begin(), dist.end());
}

std::vector<VertexPath> enumerate_geodesics(const Graph& g, const DistanceMatrix& d, Vertex s, Vertex t,
                                            std::size_t cap) {
    if (cap < 1) {
        throw InvalidArgument("enumerate_geodesics: cap must be >= 1");
    }
    std::vector<VertexPath> out;
    VertexPath current{s};
    // Iterative DFS over the geodesic DAG towards t; neighbor lists are sorted,
    // so paths come out in lexicographic order.
    std::vector<std::size_t> cursor{0};
    while (!cursor.empty()) {
        const Vertex v = current.back();
        if (v == t) {
            if (out.size() == cap) {
                throw CapExceeded("more than " + std::to_string(cap) + " geodesics between " +
                                  std::to_string(s) + " and " + std::to_string(t));
            }
            out.push_back(current);
            current.pop_back();
            cursor.pop_back();
            continue;
        }
        const auto nbrs = g.neighbors(v);
        auto& i = cursor.back();
        const int want = d(v, t) - 1;
        while (i < nbrs.size() && d(nbrs[i], t) != want) {
            ++i;
        }
        if (i == nbrs.size()) {
            current.pop_back();
            cursor.pop_back();
            continue;
        }
        current.push_back(nbrs[i++]);
        cursor.push_back(0);
    }
    return out;
}

} // namespace kgc
