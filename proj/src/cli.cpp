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

#include "kgc/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "kgc/error.hpp"
#include "kgc/generators.hpp"
#include "kgc/json_io.hpp"
#include "kgc/oracle.hpp"
#include "kgc/solver.hpp"

namespace kgc::cli {

namespace {

struct RunConfig {
    std::string graph_path;
    int k = 0;
    std::string gamma = "auto";  // auto | tau | <doubled value>
    std::optional<std::int64_t> tau_doubled;
    int delta_cap = kDefaultDeltaVertexCap;
    std::size_t max_paths = OracleCaps{}.max_paths;
    std::uint64_t max_combinations = OracleCaps{}.max_combinations;
    std::string output;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0: KGC_THREADS or 1
    bool no_prune = false;
    bool linear_scan = false;
    bool best_effort = false;
    bool tree = false;

    // exact
    bool relaxation = false;
    int subdivision = 0;

    // gen
    std::string type;
    int n = 0;
    int m = 0;
    int leaves = 0;
    int width = 0;
    int height = 0;
    int subdivide_ell = 1;

    // verify
    std::string cover_path;
    std::string packing_path;
    std::optional<int> radius;
    std::optional<Vertex> root;

    // bench
    std::string family = "ladder";
    std::vector<int> sizes{100, 200, 400};
};

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("KGC_THREADS")) {
        char* end = nullptr;
        const unsigned long value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
            return static_cast<unsigned>(value);
        }
    }
    return 1;
}

OracleCaps caps_of(const RunConfig& cfg) {
    return OracleCaps{cfg.max_paths, cfg.max_combinations};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
        throw InvalidArgument("cannot write '" + cfg.output + "'");
    }
    file << text;
}

SolveOptions solve_options(const RunConfig& cfg) {
    SolveOptions options;
    if (cfg.gamma == "auto") {
        options.gamma_mode = GammaMode::kAuto;
    } else if (cfg.gamma == "tau") {
        options.gamma_mode = GammaMode::kFromTau;
    } else {
        std::size_t used = 0;
        long long value = -1;
        try {
            value = std::stoll(cfg.gamma, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != cfg.gamma.size() || value < 0) {
            throw InvalidArgument("--gamma expects auto, tau or a non-negative doubled value");
        }
        options.gamma_mode = GammaMode::kFixed;
        options.fixed_gamma = HalfInteger::from_doubled(value);
    }
    if (cfg.tau_doubled) {
        options.tau_hat = HalfInteger::from_doubled(*cfg.tau_doubled);
    }
    options.delta_vertex_cap = cfg.delta_cap;
    options.rooted.prune = !cfg.no_prune;
    options.rooted.linear_scan = cfg.linear_scan;
    options.rooted.threads = resolve_threads(cfg.threads);
    options.best_effort = cfg.best_effort;
    return options;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph_file(cfg.graph_path);
    const SolveOptions options = solve_options(cfg);
    const SolveResult result = cfg.tree ? solve_tree(g, cfg.k, options) : solve(g, cfg.k, options);
    if (result.rooted.monotonicity_violations > 0) {
        err << "warning: greedy cover-or-packing was non-monotone in R for the chosen root ("
            << result.rooted.monotonicity_violations << " radii)\n";
    }
    emit(cfg, to_json(result).dump() + "\n", out);
    return kOk;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph_file(cfg.graph_path);
    if (cfg.k < 1 || cfg.k > g.num_vertices()) {
        throw InvalidArgument("k must be in 1.." + std::to_string(g.num_vertices()));
    }
    const DistanceMatrix d = apsp(g, resolve_threads(cfg.threads));
    Json j;
    j["k"] = cfg.k;
    const Json oracle = to_json(exact_optimum(g, d, cfg.k, caps_of(cfg)));
    for (const auto& [key, value] : oracle.items()) {
        j[key] = value;
    }
    if (cfg.relaxation) {
        const HalfInteger tau = cfg.tau_doubled ? HalfInteger::from_doubled(*cfg.tau_doubled)
                                                : thinness_bound(d, cfg.delta_cap);
        j["rooted_relaxation"] = to_json(check_rooted_relaxation(g, d, cfg.k, tau, caps_of(cfg)));
    }
    if (cfg.subdivision > 0) {
        j["subdivision"] = to_json(check_subdivision_lemma(g, cfg.k, cfg.subdivision, caps_of(cfg)));
    }
    emit(cfg, j.dump() + "\n", out);
    return kOk;
}

int cmd_delta(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph_file(cfg.graph_path);
    const DistanceMatrix d = apsp(g, resolve_threads(cfg.threads));
    Json j;
    j["delta_doubled"] = four_point_delta(d, cfg.delta_cap).doubled();
    emit(cfg, j.dump() + "\n", out);
    return kOk;
}

GeneratorSpec generator_spec(const std::string& type, const RunConfig& cfg, int n) {
    if (type == "path") {
        return PathSpec{n};
    }
    if (type == "cycle") {
        return CycleSpec{n};
    }
    if (type == "star") {
        return StarSpec{cfg.leaves > 0 ? cfg.leaves : n - 1};
    }
    if (type == "grid") {
        return GridSpec{cfg.width, cfg.height};
    }
    if (type == "tree") {
        return RandomTreeSpec{n, cfg.seed};
    }
    if (type == "random") {
        return RandomConnectedSpec{n, cfg.m, cfg.seed};
    }
    throw InvalidArgument("unknown graph type '" + type + "'");
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    const Graph g = subdivide(generate(generator_spec(cfg.type, cfg, cfg.n)), cfg.subdivide_ell);
    emit(cfg, serialize_graph(g), out);
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.cover_path.empty() == cfg.packing_path.empty()) {
        throw InvalidArgument("verify needs exactly one of --cover or --packing");
    }
    const Graph g = load_graph_file(cfg.graph_path);
    const DistanceMatrix d = apsp(g, resolve_threads(cfg.threads));
    Json report;
    bool valid = true;

    if (!cfg.cover_path.empty()) {
        const Json doc = read_json_file(cfg.cover_path);
        const auto paths = paths_from_json(doc);
        std::optional<int> radius = cfg.radius;
        if (!radius && doc.is_object() && doc.contains("radius")) {
            radius = doc.at("radius").get<int>();
        }
        if (!radius) {
            throw InvalidArgument("verify --cover needs --radius (or a 'radius' field)");
        }
        if (paths.empty()) {
            throw InvalidArgument("verify --cover: empty path family");
        }
        bool isometric = true;
        for (const auto& p : paths) {
            for (Vertex v : p) {
                if (!g.contains(v)) {
                    throw InvalidArgument("path vertex " + std::to_string(v) + " out of range");
                }
            }
            isometric = isometric && is_isometric(d, p);
        }
        const int ecc = family_eccentricity(g, paths);
        valid = isometric && ecc <= *radius;
        report["kind"] = "cover";
        report["paths"] = paths.size();
        report["isometric"] = isometric;
        report["eccentricity"] = ecc;
        report["radius"] = *radius;
    } else {
        const PackingClaim claim = packing_from_json(read_json_file(cfg.packing_path));
        const std::optional<Vertex> root = cfg.root ? cfg.root : claim.root;
        const std::optional<int> radius = cfg.radius ? cfg.radius : claim.radius;
        if (!root || !radius) {
            throw InvalidArgument("verify --packing needs --root and --radius (or fields in the file)");
        }
        if (!g.contains(*root)) {
            throw InvalidArgument("root out of range");
        }
        for (Vertex v : claim.vertices) {
            if (!g.contains(v)) {
                throw InvalidArgument("packing vertex " + std::to_string(v) + " out of range");
            }
        }
        valid = verify_packing(d, *root, *radius, claim.vertices);
        report["kind"] = "packing";
        report["root"] = *root;
        report["radius"] = *radius;
        report["size"] = claim.vertices.size();
    }
    report["valid"] = valid;
    emit(cfg, report.dump() + "\n", out);
    return valid ? kOk : kInvalidInput;
}

Graph bench_graph(const RunConfig& cfg, int n) {
    if (cfg.family == "ladder") {
        return grid_graph(std::max(1, n / 2), 2);
    }
    if (cfg.family == "grid") {
        int side = 1;
        while ((side + 1) * (side + 1) <= n) {
            ++side;
        }
        return grid_graph(side, side);
    }
    if (cfg.family == "random") {
        return random_connected(n, n + n / 4, cfg.seed);
    }
    return generate(generator_spec(cfg.family, cfg, n));
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
    std::ostringstream csv;
    csv << "n,m,k,R_u,radius,tau_hat_doubled,wall_ms\n";
    for (int size : cfg.sizes) {
        const Graph g = bench_graph(cfg, size);
        const auto start = std::chrono::steady_clock::now();
        const SolveResult result = solve(g, cfg.k, solve_options(cfg));
        const auto stop = std::chrono::steady_clock::now();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        csv << g.num_vertices() << ',' << g.num_edges() << ',' << cfg.k << ',' << result.rooted.radius << ','
            << result.radius << ',' << result.bounds.tau_hat.doubled() << ',' << ms << '\n';
    }
    emit(cfg, csv.str(), out);
    return kOk;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("-o,--output", cfg.output, "Write output to this file instead of stdout");
    cmd->add_option("--threads", cfg.threads, "Worker threads (default: $KGC_THREADS or 1)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"kgc: additive approximation of k-geodesic centers"};
    app.require_subcommand(1);

    auto* solve_cmd = app.add_subcommand("solve", "Approximate k-geodesic center with certificates");
    solve_cmd->add_option("-g,--graph", cfg.graph_path, "Edge-list file")->required();
    solve_cmd->add_option("-k", cfg.k, "Number of paths")->required();
    solve_cmd->add_option("--gamma", cfg.gamma, "Pairing depth: auto, tau, or a doubled value");
    solve_cmd->add_option("--tau", cfg.tau_doubled, "Supplied thinness bound (doubled)");
    solve_cmd->add_option("--delta-cap", cfg.delta_cap, "Vertex cap for the four-point computation");
    solve_cmd->add_flag("--no-prune", cfg.no_prune, "Disable per-root pruning");
    solve_cmd->add_flag("--linear-scan", cfg.linear_scan, "Scan every radius instead of binary search");
    solve_cmd->add_flag("--best-effort", cfg.best_effort, "Also consider the truncated rooted cover");
    solve_cmd->add_flag("--tree", cfg.tree, "Require a tree and certify exactness");
    add_common(solve_cmd, cfg);

    auto* exact_cmd = app.add_subcommand("exact", "Exact optimum by exhaustive search");
    exact_cmd->add_option("-g,--graph", cfg.graph_path, "Edge-list file")->required();
    exact_cmd->add_option("-k", cfg.k, "Number of paths")->required();
    exact_cmd->add_option("--max-paths", cfg.max_paths, "Geodesic enumeration cap");
    exact_cmd->add_option("--max-combinations", cfg.max_combinations, "Search step cap");
    exact_cmd->add_flag("--relaxation", cfg.relaxation, "Also report the rooted relaxation of the optimum");
    exact_cmd->add_option("--subdivision", cfg.subdivision, "Also check subdivision bounds for this length");
    exact_cmd->add_option("--tau", cfg.tau_doubled, "Supplied thinness bound (doubled)");
    exact_cmd->add_option("--delta-cap", cfg.delta_cap, "Vertex cap for the four-point computation");
    add_common(exact_cmd, cfg);

    auto* delta_cmd = app.add_subcommand("delta", "Four-point hyperbolicity");
    delta_cmd->add_option("-g,--graph", cfg.graph_path, "Edge-list file")->required();
    delta_cmd->add_option("--delta-cap", cfg.delta_cap, "Vertex cap");
    add_common(delta_cmd, cfg);

    auto* gen_cmd = app.add_subcommand("gen", "Generate an edge-list file");
    gen_cmd->set_help_flag("--help", "Print this help message and exit");  // -h is the grid height
    gen_cmd->add_option("--type", cfg.type, "path | cycle | star | grid | tree | random")->required();
    gen_cmd->add_option("--n", cfg.n, "Vertex count");
    gen_cmd->add_option("--m", cfg.m, "Edge count (random)");
    gen_cmd->add_option("--leaves", cfg.leaves, "Leaf count (star)");
    gen_cmd->add_option("--w", cfg.width, "Grid width");
    gen_cmd->add_option("--h", cfg.height, "Grid height");
    gen_cmd->add_option("--seed", cfg.seed, "Generator seed");
    gen_cmd->add_option("--subdivide", cfg.subdivide_ell, "Subdivide every edge into a path of this length");
    add_common(gen_cmd, cfg);

    auto* verify_cmd = app.add_subcommand("verify", "Re-check a cover or packing");
    verify_cmd->add_option("-g,--graph", cfg.graph_path, "Edge-list file")->required();
    verify_cmd->add_option("--cover", cfg.cover_path, "JSON cover (array, or solve/exact output)");
    verify_cmd->add_option("--packing", cfg.packing_path, "JSON packing (array, or solve output)");
    verify_cmd->add_option("--radius", cfg.radius, "Radius to verify at");
    verify_cmd->add_option("--root", cfg.root, "Root for packing verification");
    add_common(verify_cmd, cfg);

    auto* bench_cmd = app.add_subcommand("bench", "Time solve over generated graphs (CSV)");
    bench_cmd->add_option("--family", cfg.family, "ladder | grid | path | cycle | tree | random");
    bench_cmd->add_option("--sizes", cfg.sizes, "Vertex counts")->delimiter(',');
    bench_cmd->add_option("-k", cfg.k, "Number of paths")->required();
    bench_cmd->add_option("--seed", cfg.seed, "Generator seed");
    bench_cmd->add_option("--tau", cfg.tau_doubled, "Supplied thinness bound (doubled)");
    bench_cmd->add_option("--delta-cap", cfg.delta_cap, "Vertex cap for the four-point computation");
    add_common(bench_cmd, cfg);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*solve_cmd) {
            return cmd_solve(cfg, out, err);
        }
        if (*exact_cmd) {
            return cmd_exact(cfg, out);
        }
        if (*delta_cmd) {
            return cmd_delta(cfg, out);
        }
        if (*gen_cmd) {
            return cmd_gen(cfg, out);
        }
        if (*verify_cmd) {
            return cmd_verify(cfg, out);
        }
        return cmd_bench(cfg, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

} // namespace kgc::cli
