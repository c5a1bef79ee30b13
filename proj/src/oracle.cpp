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

#include "kgc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "kgc/error.hpp"

namespace kgc {

namespace {

// Fixed-width bitsets over V(G), stored back to back.
class MaskTable {
public:
    explicit MaskTable(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {}

    std::size_t words() const { return words_; }
    std::size_t size() const { return bits_.size() / words_; }

    std::uint64_t* add() {
        bits_.resize(bits_.size() + words_, 0);
        return bits_.data() + bits_.size() - words_;
    }
    const std::uint64_t* operator[](std::size_t i) const { return bits_.data() + i * words_; }
    std::uint64_t* operator[](std::size_t i) { return bits_.data() + i * words_; }

    static void set(std::uint64_t* m, Vertex v) {
        m[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
    }
    static bool test(const std::uint64_t* m, Vertex v) {
        return (m[static_cast<std::size_t>(v) / 64] >> (static_cast<std::size_t>(v) % 64)) & 1U;
    }

    int popcount(std::size_t i) const {
        int c = 0;
        for (std::size_t w = 0; w < words_; ++w) {
            c += std::popcount((*this)[i][w]);
        }
        return c;
    }
    bool subset(std::size_t a, std::size_t b) const {
        for (std::size_t w = 0; w < words_; ++w) {
            if ((*this)[a][w] & ~(*this)[b][w]) {
                return false;
            }
        }
        return true;
    }
    bool equal(std::size_t a, std::size_t b) const {
        return std::equal((*this)[a], (*this)[a] + words_, (*this)[b]);
    }
    int n() const { return n_; }

private:
    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

struct CoverSearch {
    const MaskTable& masks;
    const std::vector<std::vector<std::size_t>>& containing;  // mask ids per vertex, by popcount desc
    int k;
    int max_pop;
    std::uint64_t cap;
    std::uint64_t steps = 0;
    std::vector<std::size_t> chosen;

    bool run(std::vector<std::uint64_t>& covered, int depth) {
        const int n = masks.n();
        int uncovered = 0;
        Vertex first = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!MaskTable::test(covered.data(), v)) {
                if (first < 0) {
                    first = v;
                }
                ++uncovered;
            }
        }
        if (first < 0) {
            return true;
        }
        if (depth == k || uncovered > (k - depth) * max_pop) {
            return false;
        }
        std::vector<std::uint64_t> next(covered.size());
        for (std::size_t id : containing[static_cast<std::size_t>(first)]) {
            if (++steps > cap) {
                throw CapExceeded("exact_optimum: more than " + std::to_string(cap) + " combination steps");
            }
            for (std::size_t w = 0; w < covered.size(); ++w) {
                next[w] = covered[w] | masks[id][w];
            }
            chosen.push_back(id);
            if (run(next, depth + 1)) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

OracleResult exact_optimum(const Graph& g, const DistanceMatrix& d, int k, const OracleCaps& caps) {
    const int n = g.num_vertices();
    if (k < 1 || k > n) {
        throw InvalidArgument("k must be in 1.." + std::to_string(n) + ", got " + std::to_string(k));
    }
    OracleResult result;

    // Distinct geodesic vertex sets, each with its lexicographically first geodesic.
    MaskTable vertex_sets(n);
    std::vector<VertexPath> paths;
    std::map<std::vector<std::uint64_t>, std::size_t> seen;
    std::size_t raw = 0;
    auto record = [&](VertexPath path) {
        std::vector<std::uint64_t> key(vertex_sets.words(), 0);
        for (Vertex v : path) {
            MaskTable::set(key.data(), v);
        }
        if (seen.emplace(key, paths.size()).second) {
            std::copy(key.begin(), key.end(), vertex_sets.add());
            paths.push_back(std::move(path));
        }
    };
    for (Vertex u = 0; u < n; ++u) {
        record({u});
        for (Vertex v = u + 1; v < n; ++v) {
            if (raw >= caps.max_paths) {
                throw CapExceeded("exact_optimum: more than " + std::to_string(caps.max_paths) + " geodesics");
            }
            auto found = enumerate_geodesics(g, d, u, v, caps.max_paths - raw);
            raw += found.size();
            for (auto& p : found) {
                record(std::move(p));
            }
        }
    }
    result.stats.paths_enumerated = paths.size();

    for (int radius = 0;; ++radius) {
        MaskTable balls(n);
        for (Vertex v = 0; v < n; ++v) {
            std::uint64_t* m = balls.add();
            for (Vertex x = 0; x < n; ++x) {
                if (d(v, x) <= radius) {
                    MaskTable::set(m, x);
                }
            }
        }
        MaskTable coverage(n);
        for (const auto& path : paths) {
            std::uint64_t* m = coverage.add();
            for (Vertex v : path) {
                for (std::size_t w = 0; w < coverage.words(); ++w) {
                    m[w] |= balls[static_cast<std::size_t>(v)][w];
                }
            }
        }

        // Keep masks not strictly contained in another (first index among equals).
        std::vector<std::size_t> order(coverage.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> pop(coverage.size());
        for (std::size_t i = 0; i < coverage.size(); ++i) {
            pop[i] = coverage.popcount(i);
        }
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pop[a] > pop[b]; });
        std::vector<std::size_t> kept;
        for (std::size_t i : order) {
            bool dominated = false;
            for (std::size_t j : kept) {
                if (coverage.subset(i, j)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) {
                kept.push_back(i);
            }
        }

        std::vector<std::vector<std::size_t>> containing(static_cast<std::size_t>(n));
        for (std::size_t id : kept) {
            for (Vertex v = 0; v < n; ++v) {
                if (MaskTable::test(coverage[id], v)) {
                    containing[static_cast<std::size_t>(v)].push_back(id);
                }
            }
        }
        CoverSearch search{coverage, containing, k, kept.empty() ? 0 : pop[kept.front()],
                           caps.max_combinations - result.stats.combinations_tried, 0, {}};
        std::vector<std::uint64_t> covered(coverage.words(), 0);
        const bool found = search.run(covered, 0);
        result.stats.combinations_tried += search.steps;
        if (found) {
            result.optimum = radius;
            for (std::size_t id : search.chosen) {
                result.witness.push_back(paths[id]);
            }
            return result;
        }
    }
}

RootedRelaxationReport check_rooted_relaxation(const Graph& g, const DistanceMatrix& d, int k,
                                               HalfInteger tau_hat, const OracleCaps& caps) {
    const OracleResult exact = exact_optimum(g, d, k, caps);
    RootedRelaxationReport report;
    report.optimum = exact.optimum;
    report.tau_hat = tau_hat;
    std::vector<Vertex> endpoints;
    for (const auto& p : exact.witness) {
        endpoints.push_back(p.front());
        endpoints.push_back(p.back());
    }
    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());

    report.max_slack = 0;
    report.holds = true;
    bool first = true;
    for (Vertex r : endpoints) {
        std::vector<VertexPath> rooted;
        for (Vertex x : endpoints) {
            if (x != r) {
                rooted.push_back(shortest_path(g, d, r, x));
            }
        }
        if (rooted.empty()) {
            rooted.push_back({r});
        }
        const int slack = family_eccentricity(g, rooted) - exact.optimum;
        report.max_slack = first ? slack : std::max(report.max_slack, slack);
        first = false;
        if (slack > tau_hat.floor()) {
            report.holds = false;
        }
    }
    return report;
}

SubdivisionReport check_subdivision_lemma(const Graph& g, int k, int ell, const OracleCaps& caps) {
    const Graph h = subdivide(g, ell);
    const DistanceMatrix dg = apsp(g);
    const DistanceMatrix dh = apsp(h);

    SubdivisionReport report;
    report.ell = ell;
    report.optimum = exact_optimum(g, dg, k, caps).optimum;
    report.subdivided_optimum = exact_optimum(h, dh, k, caps).optimum;
    report.bound = static_cast<std::int64_t>(report.optimum) * ell + ell / 2;
    report.cover_bound_holds = report.subdivided_optimum <= report.bound;

    const int n = g.num_vertices();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u; v < n; ++v) {
            const VertexPath in_h = shortest_path(h, dh, u, v);
            VertexPath trace;
            for (Vertex x : in_h) {
                if (x < n) {
                    trace.push_back(x);
                }
            }
            const bool trace_ok = is_isometric(dg, trace) && trace.front() == u && trace.back() == v;
            for (Vertex w = 0; w < n; ++w) {
                ++report.contraction_checks;
                const int t = distance_to_path(dh, w, in_h);
                if (!trace_ok || distance_to_path(dg, w, trace) > t / ell) {
                    ++report.contraction_failures;
                }
            }
        }
    }
    return report;
}

} // namespace kgc
