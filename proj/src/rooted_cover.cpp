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

#include "kgc/rooted_cover.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "kgc/error.hpp"

namespace kgc {

namespace {

void check_k(const Graph& g, int k) {
    if (k < 1 || k > g.num_vertices()) {
        throw InvalidArgument("k must be in 1.." + std::to_string(g.num_vertices()) + ", got " +
                              std::to_string(k));
    }
}

} // namespace

RootedOutcome cover_or_packing(const Graph& g, const DistanceMatrix& d, Vertex root, int radius, int k) {
    const RootedRegions regions(g, d, root);
    return cover_or_packing(g, d, regions, radius, k);
}

RootedOutcome cover_or_packing(const Graph& g, const DistanceMatrix& d, const RootedRegions& regions,
                               int radius, int k) {
    check_k(g, k);
    if (radius < 0) {
        throw InvalidArgument("radius must be non-negative, got " + std::to_string(radius));
    }
    const Vertex root = regions.root();
    const auto from_root = d.row(root);
    const auto un = static_cast<std::size_t>(g.num_vertices());
    std::vector<char> remaining(un, 1);
    std::size_t left = un;
    std::vector<Vertex> picks;
    std::vector<VertexPath> cover;

    while (left > 0 && static_cast<int>(picks.size()) < 2 * k) {
        Vertex pick = -1;
        for (Vertex v = 0; v < static_cast<Vertex>(un); ++v) {
            if (remaining[static_cast<std::size_t>(v)] &&
                (pick < 0 || from_root[static_cast<std::size_t>(v)] > from_root[static_cast<std::size_t>(pick)])) {
                pick = v;
            }
        }
        picks.push_back(pick);
        cover.push_back(shortest_path(g, d, root, pick));
        const auto removed = regions.covered_with(pick, radius);
        for (std::size_t v = 0; v < un; ++v) {
            if (remaining[v] && removed[v]) {
                remaining[v] = 0;
                --left;
            }
        }
    }

    RootedOutcome out;
    if (static_cast<int>(picks.size()) == 2 * k) {
        std::sort(picks.begin(), picks.end());
        out.packing = std::move(picks);
    } else {
        out.cover = std::move(cover);
    }
    return out;
}

bool verify_packing(const DistanceMatrix& d, Vertex root, int radius, std::span<const Vertex> vertices) {
    BallCache balls(d);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (exists_covering_rpath(d, balls, root, vertices[i], vertices[j], radius)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<RootSearch> min_radius_for_root(const Graph& g, const DistanceMatrix& d, Vertex root, int k,
                                              const RootedOptions& options, std::optional<int> prune_at) {
    check_k(g, k);
    const RootedRegions regions(g, d, root);
    RootSearch result;
    result.root = root;

    if (options.linear_scan) {
        // Upward scan to the eccentricity, noting any packing seen above a cover.
        const int top = d.eccentricity(root);
        std::optional<int> first_cover;
        std::vector<Vertex> last_packing;
        for (int radius = 0; radius <= top; ++radius) {
            auto outcome = cover_or_packing(g, d, regions, radius, k);
            if (outcome.is_cover()) {
                if (!first_cover) {
                    first_cover = radius;
                    result.radius = radius;
                    result.cover = std::move(outcome.cover);
                    if (radius > 0) {
                        result.witness = PackingWitness{radius - 1, last_packing};
                    }
                }
            } else if (first_cover) {
                ++result.monotonicity_violations;
            } else {
                last_packing = std::move(outcome.packing);
            }
        }
        return result;
    }

    int lo = -1;
    int hi = d.eccentricity(root);
    std::vector<VertexPath> cover_at_hi;
    std::vector<Vertex> packing_at_lo;
    while (hi - lo > 1) {
        if (prune_at && lo >= *prune_at) {
            return std::nullopt;
        }
        const int mid = lo + (hi - lo) / 2;
        auto outcome = cover_or_packing(g, d, regions, mid, k);
        if (outcome.is_cover()) {
            hi = mid;
            cover_at_hi = std::move(outcome.cover);
        } else {
            lo = mid;
            packing_at_lo = std::move(outcome.packing);
        }
    }
    if (prune_at && lo >= *prune_at) {
        return std::nullopt;
    }
    if (cover_at_hi.empty()) {
        auto outcome = cover_or_packing(g, d, regions, hi, k);
        if (!outcome.is_cover()) {
            throw std::logic_error("greedy returned a packing at the root eccentricity");
        }
        cover_at_hi = std::move(outcome.cover);
    }
    result.radius = hi;
    result.cover = std::move(cover_at_hi);
    if (hi > 0) {
        result.witness = PackingWitness{lo, std::move(packing_at_lo)};
    }
    return result;
}

RootedSolution best_root(const Graph& g, const DistanceMatrix& d, int k, const RootedOptions& options) {
    check_k(g, k);
    const int n = g.num_vertices();
    std::vector<std::optional<RootSearch>> per_root(static_cast<std::size_t>(n));
    std::atomic<int> incumbent{n + 1};
    std::atomic<int> next{0};

    auto worker = [&] {
        for (int r = next++; r < n; r = next++) {
            std::optional<int> bound;
            if (options.prune && !options.linear_scan) {
                bound = incumbent.load();
            }
            auto found = min_radius_for_root(g, d, r, k, options, bound);
            if (found) {
                int seen = incumbent.load();
                while (found->radius < seen && !incumbent.compare_exchange_weak(seen, found->radius)) {
                }
            }
            per_root[static_cast<std::size_t>(r)] = std::move(found);
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    std::optional<RootSearch> best;
    for (auto& candidate : per_root) {
        if (candidate && (!best || candidate->radius < best->radius)) {
            best = std::move(candidate);
        }
    }
    return std::move(*best);
}

} // namespace kgc
