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

#include "kgc/json_io.hpp"

#include "kgc/error.hpp"

namespace kgc {

Json paths_to_json(const std::vector<VertexPath>& paths) {
    Json out = Json::array();
    for (const auto& p : paths) {
        out.push_back(p);
    }
    return out;
}

Json to_json(const RootedSolution& rooted) {
    Json j;
    j["root"] = rooted.root;
    j["R"] = rooted.radius;
    j["cover"] = paths_to_json(rooted.cover);
    if (rooted.witness) {
        j["packing_witness"] = {{"R", rooted.witness->radius}, {"vertices", rooted.witness->vertices}};
    } else {
        j["packing_witness"] = nullptr;
    }
    return j;
}

Json to_json(const Pairing& pairing) {
    Json pairs = Json::array();
    for (auto [x, y] : pairing.pairs) {
        pairs.push_back({x, y});
    }
    Json j;
    j["apex"] = pairing.apex;
    j["gamma_doubled"] = pairing.gamma.doubled();
    j["pairs"] = std::move(pairs);
    return j;
}

Json to_json(const SolveResult& result) {
    Json j;
    j["k"] = result.k;
    j["radius"] = result.radius;
    j["paths"] = paths_to_json(result.paths);
    j["rooted"] = to_json(result.rooted);
    j["profile"] = result.profile;
    j["pairing"] = to_json(result.pairing);
    j["bounds"] = {{"tau_hat_doubled", result.bounds.tau_hat.doubled()},
                   {"tau_source", result.bounds.tau_supplied ? "supplied" : "computed"},
                   {"lower", result.bounds.lower},
                   {"upper", result.bounds.upper},
                   {"gamma_within_bound", result.bounds.gamma_within_bound}};
    j["exact"] = result.exact;
    if (result.best_effort_used) {
        j["best_effort_used"] = true;
    }
    return j;
}

Json to_json(const OracleResult& result) {
    Json j;
    j["radius"] = result.optimum;
    j["paths"] = paths_to_json(result.witness);
    j["stats"] = {{"paths_enumerated", result.stats.paths_enumerated},
                  {"combinations_tried", result.stats.combinations_tried}};
    return j;
}

Json to_json(const RootedRelaxationReport& report) {
    Json j;
    j["optimum"] = report.optimum;
    j["tau_hat_doubled"] = report.tau_hat.doubled();
    j["max_slack"] = report.max_slack;
    j["holds"] = report.holds;
    return j;
}

Json to_json(const SubdivisionReport& report) {
    Json j;
    j["ell"] = report.ell;
    j["optimum"] = report.optimum;
    j["subdivided_optimum"] = report.subdivided_optimum;
    j["bound"] = report.bound;
    j["contraction_checks"] = report.contraction_checks;
    j["contraction_failures"] = report.contraction_failures;
    j["holds"] = report.holds();
    return j;
}

std::vector<VertexPath> paths_from_json(const Json& j) {
    const Json* array = &j;
    if (j.is_object()) {
        array = nullptr;
        for (const char* key : {"paths", "cover", "witness"}) {
            if (j.contains(key)) {
                array = &j.at(key);
                break;
            }
        }
        if (!array) {
            throw ParseError("cover JSON has none of the keys paths, cover, witness");
        }
    }
    if (!array->is_array()) {
        throw ParseError("cover JSON must be an array of vertex arrays");
    }
    try {
        return array->get<std::vector<VertexPath>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("cover JSON: ") + e.what());
    }
}

PackingClaim packing_from_json(const Json& j) {
    PackingClaim claim;
    try {
        if (j.is_array()) {
            claim.vertices = j.get<std::vector<Vertex>>();
            return claim;
        }
        if (!j.is_object()) {
            throw ParseError("packing JSON must be an array or an object");
        }
        const Json* node = &j;
        if (j.contains("rooted")) {
            node = &j.at("rooted");
        }
        if (node->contains("root")) {
            claim.root = node->at("root").get<Vertex>();
        }
        if (node->contains("packing_witness")) {
            const Json& w = node->at("packing_witness");
            if (w.is_null()) {
                throw ParseError("packing JSON: packing_witness is null (R = 0, nothing to verify)");
            }
            node = &w;
        }
        if (!node->contains("vertices")) {
            throw ParseError("packing JSON has no 'vertices'");
        }
        claim.vertices = node->at("vertices").get<std::vector<Vertex>>();
        if (node->contains("R")) {
            claim.radius = node->at("R").get<int>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("packing JSON: ") + e.what());
    }
    return claim;
}

} // namespace kgc
