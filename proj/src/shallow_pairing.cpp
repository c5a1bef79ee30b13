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

#include "kgc/shallow_pairing.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "kgc/error.hpp"

namespace kgc {

Profile::Profile(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2 || vertices_.size() % 2 != 0) {
        throw InvalidArgument("profile length must be even and >= 2, got " + std::to_string(vertices_.size()));
    }
}

std::vector<Vertex> fiber(const DistanceMatrix& d, Vertex u, std::size_t position, const Profile& profile,
                          HalfInteger tau_hat) {
    if (position >= profile.size()) {
        throw InvalidArgument("fiber: position out of range");
    }
    const std::int64_t threshold = 2 * tau_hat.doubled() + 2;  // doubled value of 2*tau + 1
    const Vertex x = profile[position];
    std::vector<Vertex> out;
    for (std::size_t j = 0; j < profile.size(); ++j) {
        if (j != position && gromov_product(d, x, profile[j], u).doubled() >= threshold) {
            out.push_back(profile[j]);
        }
    }
    return out;
}

PositionGraph pairing_graph(const DistanceMatrix& d, Vertex apex, const Profile& profile, HalfInteger gamma) {
    const std::size_t size = profile.size();
    PositionGraph h(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            if (gromov_product(d, profile[i], profile[j], apex) <= gamma) {
                h[i].push_back(static_cast<int>(j));
                h[j].push_back(static_cast<int>(i));
            }
        }
    }
    for (auto& list : h) {
        std::sort(list.begin(), list.end());
    }
    return h;
}

namespace {

using MatchingGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

// Perfect matching on the positions still marked free.
bool has_perfect_matching(const PositionGraph& h, const std::vector<char>& free) {
    std::vector<int> index(h.size(), -1);
    int count = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (free[i]) {
            index[i] = count++;
        }
    }
    if (count % 2 != 0) {
        return false;
    }
    if (count == 0) {
        return true;
    }
    MatchingGraph mg(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!free[i]) {
            continue;
        }
        if (std::none_of(h[i].begin(), h[i].end(), [&](int j) { return free[static_cast<std::size_t>(j)]; })) {
            return false;
        }
        for (int j : h[i]) {
            if (static_cast<std::size_t>(j) > i && free[static_cast<std::size_t>(j)]) {
                boost::add_edge(static_cast<std::size_t>(index[i]),
                                static_cast<std::size_t>(index[static_cast<std::size_t>(j)]), mg);
            }
        }
    }
    std::vector<boost::graph_traits<MatchingGraph>::vertex_descriptor> mate(static_cast<std::size_t>(count));
    boost::edmonds_maximum_cardinality_matching(mg, mate.data());
    return 2 * boost::matching_size(mg, mate.data()) == static_cast<std::size_t>(count);
}

} // namespace

std::optional<std::vector<PositionPair>> perfect_matching(const PositionGraph& h) {
    std::vector<char> free(h.size(), 1);
    if (!has_perfect_matching(h, free)) {
        return std::nullopt;
    }
    std::vector<PositionPair> matching;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!free[i]) {
            continue;
        }
        free[i] = 0;
        bool placed = false;
        for (int j : h[i]) {
            const auto uj = static_cast<std::size_t>(j);
            if (!free[uj]) {
                continue;
            }
            free[uj] = 0;
            if (has_perfect_matching(h, free)) {
                matching.emplace_back(static_cast<int>(i), j);
                placed = true;
                break;
            }
            free[uj] = 1;
        }
        if (!placed) {
            throw std::logic_error("perfect_matching: lost a matching that was known to exist");
        }
    }
    return matching;
}

namespace {

Pairing make_pairing(const Profile& profile, std::vector<PositionPair> positions, Vertex apex,
                     HalfInteger gamma) {
    Pairing p;
    p.pairs.reserve(positions.size());
    for (auto [i, j] : positions) {
        p.pairs.emplace_back(profile[static_cast<std::size_t>(i)], profile[static_cast<std::size_t>(j)]);
    }
    p.positions = std::move(positions);
    p.apex = apex;
    p.gamma = gamma;
    return p;
}

} // namespace

std::optional<Pairing> find_shallow_pairing(const DistanceMatrix& d, const Profile& profile, HalfInteger gamma) {
    for (Vertex v = 0; v < d.size(); ++v) {
        if (auto m = perfect_matching(pairing_graph(d, v, profile, gamma))) {
            return make_pairing(profile, std::move(*m), v, gamma);
        }
    }
    return std::nullopt;
}

Pairing min_gamma_pairing(const DistanceMatrix& d, const Profile& profile) {
    const std::int64_t top = 2 * static_cast<std::int64_t>(d.diameter());
    for (std::int64_t doubled = 0; doubled <= top; ++doubled) {
        if (auto p = find_shallow_pairing(d, profile, HalfInteger::from_doubled(doubled))) {
            return std::move(*p);
        }
    }
    throw std::logic_error("min_gamma_pairing: no pairing at gamma = diameter");
}

std::vector<VertexPath> paths_of_pairing(const Graph& g, const DistanceMatrix& d, const Pairing& pairing) {
    std::vector<VertexPath> paths;
    paths.reserve(pairing.pairs.size());
    for (auto [x, y] : pairing.pairs) {
        paths.push_back(shortest_path(g, d, x, y));
    }
    return paths;
}

std::int64_t total_distance(const DistanceMatrix& d, const Profile& profile, Vertex v) {
    std::int64_t sum = 0;
    for (Vertex x : profile.vertices()) {
        sum += d(v, x);
    }
    return sum;
}

std::int64_t pairing_distance(const DistanceMatrix& d, std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::int64_t sum = 0;
    for (auto [x, y] : pairs) {
        sum += d(x, y);
    }
    return sum;
}

} // namespace kgc
