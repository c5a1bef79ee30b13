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

#ifndef KGC_HALF_INTEGER_HPP_
#define KGC_HALF_INTEGER_HPP_

#include <compare>
#include <cstdint>
#include <string>

#include "kgc/error.hpp"

namespace kgc {

/**
 * A non-negative multiple of 1/2, stored exactly as twice its value.
 *
 * Gromov products, hyperbolicity constants and pairing depths all live on the
 * half-integer lattice for unweighted graphs. Keeping them doubled avoids any
 * floating point in threshold comparisons such as "product <= 2*tau + 1/2".
 */
class HalfInteger {
public:
    constexpr HalfInteger() = default;

    static HalfInteger from_doubled(std::int64_t doubled) {
        if (doubled < 0) {
            throw InvalidArgument("half-integer must be non-negative, got doubled value " +
                                  std::to_string(doubled));
        }
        HalfInteger h;
        h.doubled_ = doubled;
        return h;
    }

    static HalfInteger from_integer(std::int64_t value) { return from_doubled(2 * value); }

    constexpr std::int64_t doubled() const { return doubled_; }
    constexpr bool is_integer() const { return doubled_ % 2 == 0; }

    /// Largest integer not above the value.
    constexpr std::int64_t floor() const { return doubled_ / 2; }
    /// Smallest integer not below the value.
    constexpr std::int64_t ceil() const { return (doubled_ + 1) / 2; }

    friend constexpr auto operator<=>(const HalfInteger&, const HalfInteger&) = default;

    friend HalfInteger operator+(HalfInteger a, HalfInteger b) {
        return from_doubled(a.doubled_ + b.doubled_);
    }

    /// Scales by a non-negative integer.
    friend HalfInteger operator*(std::int64_t factor, HalfInteger h) {
        return from_doubled(factor * h.doubled_);
    }

    std::string to_string() const {
        return is_integer() ? std::to_string(floor()) : std::to_string(floor()) + ".5";
    }

private:
    std::int64_t doubled_ = 0;
};

inline const HalfInteger kHalf = HalfInteger::from_doubled(1);

} // namespace kgc

#endif // KGC_HALF_INTEGER_HPP_
