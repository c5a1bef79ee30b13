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

#ifndef KGC_GENERATORS_HPP_
#define KGC_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <variant>

#include "kgc/graph.hpp"

namespace kgc {

/// SplitMix64: small splittable generator; the stream is fixed by the seed on every platform.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Independent child stream.
    SplitMix64 split() { return SplitMix64((*this)()); }

    /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

struct PathSpec {
    int n;
};
struct CycleSpec {
    int n;
};
struct StarSpec {
    int leaves;
};
struct GridSpec {
    int width;
    int height;
};
struct RandomTreeSpec {
    int n;
    std::uint64_t seed;
};
struct RandomConnectedSpec {
    int n;
    int m;
    std::uint64_t seed;
};

using GeneratorSpec =
    std::variant<PathSpec, CycleSpec, StarSpec, GridSpec, RandomTreeSpec, RandomConnectedSpec>;

/// Deterministic graph for a family descriptor. Throws InvalidArgument for infeasible specs.
Graph generate(const GeneratorSpec& spec);

std::string describe(const GeneratorSpec& spec);

inline Graph path_graph(int n) { return generate(PathSpec{n}); }
inline Graph cycle_graph(int n) { return generate(CycleSpec{n}); }
inline Graph star_graph(int leaves) { return generate(StarSpec{leaves}); }
inline Graph grid_graph(int width, int height) { return generate(GridSpec{width, height}); }
inline Graph random_tree(int n, std::uint64_t seed) { return generate(RandomTreeSpec{n, seed}); }
inline Graph random_connected(int n, int m, std::uint64_t seed) {
    return generate(RandomConnectedSpec{n, m, seed});
}

} // namespace kgc

#endif // KGC_GENERATORS_HPP_
