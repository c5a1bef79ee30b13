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

#include "kgc/solver.hpp"

#include <algorithm>

#include "kgc/error.hpp"

namespace kgc {

HalfInteger thinness_bound(const DistanceMatrix& d, int vertex_cap) {
    return 4 * four_point_delta(d, vertex_cap);
}

namespace {

std::vector<Vertex> build_profile(Vertex root, const std::vector<VertexPath>& cover, int k) {
    std::vector<Vertex> profile{root};
    for (const auto& path : cover) {
        profile.push_back(path.front() == root ? path.back() : path.front());
    }
    profile.resize(static_cast<std::size_t>(2 * k), root);
    return profile;
}

std::vector<VertexPath> unique_paths(std::vector<VertexPath> paths) {
    std::vector<VertexPath> out;
    for (auto& p : paths) {
        if (std::find(out.begin(), out.end(), p) == out.end()) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

// Best k-subset of the rooted cover: exhaustive while the subset count is small, greedy beyond.
std::vector<VertexPath> truncate_cover(const Graph& g, const std::vector<VertexPath>& cover, int k) {
    const auto size = cover.size();
    const auto want = static_cast<std::size_t>(k);
    if (size <= want) {
        return cover;
    }
    double subsets = 1;
    for (std::size_t i = 0; i < want; ++i) {
        subsets = subsets * static_cast<double>(size - i) / static_cast<double>(i + 1);
    }
    std::vector<VertexPath> best;
    int best_ecc = g.num_vertices() + 1;
    if (subsets <= 20000) {
        std::vector<char> take(size, 0);
        std::fill(take.begin(), take.begin() + static_cast<std::ptrdiff_t>(want), 1);
        do {
            std::vector<VertexPath> pick;
            for (std::size_t i = 0; i < size; ++i) {
                if (take[i]) {
                    pick.push_back(cover[i]);
                }
            }
            const int ecc = family_eccentricity(g, pick);
            if (ecc < best_ecc) {
                best_ecc = ecc;
                best = std::move(pick);
            }
        } while (std::prev_permutation(take.begin(), take.end()));
        return best;
    }
    std::vector<char> used(size, 0);
    for (std::size_t step = 0; step < want; ++step) {
        std::size_t arg = 0;
        int arg_ecc = g.num_vertices() + 1;
        for (std::size_t i = 0; i < size; ++i) {
            if (used[i]) {
                continue;
            }
            best.push_back(cover[i]);
            const int ecc = family_eccentricity(g, best);
            best.pop_back();
            if (ecc < arg_ecc) {
                arg_ecc = ecc;
                arg = i;
            }
        }
        used[arg] = 1;
        best.push_back(cover[arg]);
    }
    return best;
}

} // namespace

SolveResult solve(const Graph& g, int k, const SolveOptions& options) {
    if (k < 1 || k > g.num_vertices()) {
        throw InvalidArgument("k must be in 1.." + std::to_string(g.num_vertices()) + ", got " +
                              std::to_string(k));
    }
    const DistanceMatrix d = apsp(g, options.rooted.threads);
    return solve(g, d, k, options);
}

SolveResult solve(const Graph& g, const DistanceMatrix& d, int k, const SolveOptions& options) {
    if (k < 1 || k > g.num_vertices()) {
        throw InvalidArgument("k must be in 1.." + std::to_string(g.num_vertices()) + ", got " +
                              std::to_string(k));
    }
    SolveResult result;
    result.k = k;
    result.bounds.tau_supplied = options.tau_hat.has_value();
    result.bounds.tau_hat = options.tau_hat ? *options.tau_hat : thinness_bound(d, options.delta_vertex_cap);
    const HalfInteger tau_hat = result.bounds.tau_hat;
    const HalfInteger pairing_bound = 2 * tau_hat + kHalf;

    result.rooted = best_root(g, d, k, options.rooted);
    result.profile = build_profile(result.rooted.root, result.rooted.cover, k);
    const Profile profile(result.profile);

    switch (options.gamma_mode) {
    case GammaMode::kAuto:
        result.pairing = min_gamma_pairing(d, profile);
        break;
    case GammaMode::kFromTau:
    case GammaMode::kFixed: {
        const HalfInteger gamma = options.gamma_mode == GammaMode::kFixed ? options.fixed_gamma : pairing_bound;
        auto found = find_shallow_pairing(d, profile, gamma);
        if (!found) {
            throw InvalidArgument("no shallow pairing of the profile at gamma = " + gamma.to_string());
        }
        result.pairing = std::move(*found);
        break;
    }
    }

    result.paths = unique_paths(paths_of_pairing(g, d, result.pairing));
    result.radius = family_eccentricity(g, result.paths);

    if (options.best_effort) {
        auto truncated = truncate_cover(g, result.rooted.cover, k);
        const int truncated_radius = family_eccentricity(g, truncated);
        if (truncated_radius < result.radius) {
            result.paths = std::move(truncated);
            result.radius = truncated_radius;
            result.best_effort_used = true;
        }
    }

    const std::int64_t r_u = result.rooted.radius;
    result.bounds.lower = std::max<std::int64_t>(0, r_u - tau_hat.floor());
    result.bounds.upper = r_u + (5 * tau_hat.doubled() + 2) / 2;
    result.bounds.gamma_within_bound = result.pairing.gamma <= pairing_bound;
    return result;
}

SolveResult solve_tree(const Graph& g, int k, const SolveOptions& options) {
    if (!g.is_tree()) {
        throw InvalidArgument("solve_tree: graph with " + std::to_string(g.num_vertices()) + " vertices and " +
                              std::to_string(g.num_edges()) + " edges is not a tree");
    }
    SolveResult result = solve(g, k, options);
    if (result.radius != result.rooted.radius) {
        throw std::logic_error("solve_tree: radius " + std::to_string(result.radius) + " differs from R_u " +
                               std::to_string(result.rooted.radius));
    }
    result.exact = true;
    return result;
}

} // namespace kgc
