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

#ifndef KGC_JSON_IO_HPP_
#define KGC_JSON_IO_HPP_

#include <optional>
#include <vector>

#include <json.hpp>

#include "kgc/oracle.hpp"
#include "kgc/rooted_cover.hpp"
#include "kgc/shallow_pairing.hpp"
#include "kgc/solver.hpp"

namespace kgc {

// Keys keep insertion order so that identical results serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json paths_to_json(const std::vector<VertexPath>& paths);
Json to_json(const RootedSolution& rooted);
Json to_json(const Pairing& pairing);
Json to_json(const SolveResult& result);
Json to_json(const OracleResult& result);
Json to_json(const RootedRelaxationReport& report);
Json to_json(const SubdivisionReport& report);

/// Accepts a bare array of paths, or an object carrying "paths", "cover" or "witness".
std::vector<VertexPath> paths_from_json(const Json& j);

struct PackingClaim {
    std::optional<Vertex> root;
    std::optional<int> radius;
    std::vector<Vertex> vertices;
};

/// Accepts a bare vertex array, {"vertices":[...], "R":..}, or a rooted solution
/// (top level or under "rooted") with a "packing_witness".
PackingClaim packing_from_json(const Json& j);

} // namespace kgc

#endif // KGC_JSON_IO_HPP_
