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

#include "kgc/generators.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "kgc/error.hpp"

namespace kgc {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) {
        throw InvalidArgument("SplitMix64::below requires a positive bound");
    }
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
        x = (*this)();
    } while (x >= limit);
    return x % bound;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw InvalidArgument(what);
    }
}

Graph make_path(int n) {
    require(n >= 1, "path(n) requires n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
    require(n >= 3, "cycle(n) requires n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph::from_edges(n, edges);
}

Graph make_star(int leaves) {
    require(leaves >= 0, "star(leaves) requires leaves >= 0");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) {
        edges.emplace_back(0, i);
    }
    return Graph::from_edges(leaves + 1, edges);
}

Graph make_grid(int width, int height) {
    require(width >= 1 && height >= 1, "grid(w,h) requires w, h >= 1");
    require(static_cast<long long>(width) * height <= (1 << 26), "grid too large");
    std::vector<Edge> edges;
    auto id = [width](int x, int y) { return y * width + x; };
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            if (x + 1 < width) {
                edges.emplace_back(id(x, y), id(x + 1, y));
            }
            if (y + 1 < height) {
                edges.emplace_back(id(x, y), id(x, y + 1));
            }
        }
    }
    return Graph::from_edges(width * height, edges);
}

// Uniform labelled tree via a random Pruefer sequence.
std::vector<Edge> pruefer_tree_edges(int n, SplitMix64& rng) {
    std::vector<Edge> edges;
    if (n == 2) {
        edges.emplace_back(0, 1);
    }
    if (n <= 2) {
        return edges;
    }
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (auto& c : code) {
        c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    }
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) {
        ++degree[static_cast<std::size_t>(c)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            leaves.push(v);
        }
    }
    for (int c : code) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, c);
        if (--degree[static_cast<std::size_t>(c)] == 1) {
            leaves.push(c);
        }
    }
    const int a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return edges;
}

Graph make_random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "random_tree(n) requires n >= 1");
    SplitMix64 rng(seed);
    return Graph::from_edges(n, pruefer_tree_edges(n, rng));
}

Graph make_random_connected(int n, int m, std::uint64_t seed) {
    require(n >= 1, "random_connected(n,m) requires n >= 1");
    require(m >= n - 1, "random_connected(n,m) requires m >= n-1 for connectivity");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    require(m <= max_edges, "random_connected(n,m) requires m <= n(n-1)/2");
    SplitMix64 rng(seed);
    SplitMix64 tree_rng = rng.split();
    std::vector<Edge> edges = pruefer_tree_edges(n, tree_rng);
    std::set<Edge> present;
    for (auto [u, v] : edges) {
        present.emplace(std::min(u, v), std::max(u, v));
    }
    const int extra = m - (n - 1);
    if (extra > max_edges / 2) {
        // Dense request: sample uniformly from the explicit complement.
        std::vector<Edge> absent;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (!present.count({u, v})) {
                    absent.emplace_back(u, v);
                }
            }
        }
        for (int i = 0; i < extra; ++i) {
            const auto j = i + static_cast<std::size_t>(rng.below(absent.size() - static_cast<std::size_t>(i)));
            std::swap(absent[static_cast<std::size_t>(i)], absent[j]);
            edges.push_back(absent[static_cast<std::size_t>(i)]);
        }
    } else {
        while (static_cast<int>(edges.size()) < m) {
            const auto u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const auto v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (u == v) {
                continue;
            }
            const Edge e{std::min(u, v), std::max(u, v)};
            if (present.insert(e).second) {
                edges.push_back(e);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

Graph generate(const GeneratorSpec& spec) {
    return std::visit(overloaded{
                          [](const PathSpec& s) { return make_path(s.n); },
                          [](const CycleSpec& s) { return make_cycle(s.n); },
                          [](const StarSpec& s) { return make_star(s.leaves); },
                          [](const GridSpec& s) { return make_grid(s.width, s.height); },
                          [](const RandomTreeSpec& s) { return make_random_tree(s.n, s.seed); },
                          [](const RandomConnectedSpec& s) {
                              return make_random_connected(s.n, s.m, s.seed);
                          },
                      },
                      spec);
}

std::string describe(const GeneratorSpec& spec) {
    return std::visit(
        overloaded{
            [](const PathSpec& s) { return "path(" + std::to_string(s.n) + ")"; },
            [](const CycleSpec& s) { return "cycle(" + std::to_string(s.n) + ")"; },
            [](const StarSpec& s) { return "star(" + std::to_string(s.leaves) + ")"; },
            [](const GridSpec& s) {
                return "grid(" + std::to_string(s.width) + "," + std::to_string(s.height) + ")";
            },
            [](const RandomTreeSpec& s) {
                return "random_tree(" + std::to_string(s.n) + ",seed=" + std::to_string(s.seed) + ")";
            },
            [](const RandomConnectedSpec& s) {
                return "random_connected(" + std::to_string(s.n) + "," + std::to_string(s.m) +
                       ",seed=" + std::to_string(s.seed) + ")";
            },
        },
        spec);
}

} // namespace kgc
