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

#include "kgc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "kgc/error.hpp"

namespace kgc {

namespace {

bool is_connected(const std::vector<std::vector<Vertex>>& adjacency) {
    if (adjacency.empty()) {
        return false;
    }
    std::vector<char> seen(adjacency.size(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adjacency[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == adjacency.size();
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Splits a data line into exactly two non-negative integers.
std::pair<long long, long long> parse_pair(std::string_view line, std::size_t line_no) {
    long long values[2];
    std::size_t pos = 0;
    for (int i = 0; i < 2; ++i) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
            ++pos;
        }
        const char* begin = line.data() + pos;
        const char* end = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(begin, end, values[i]);
        if (ec != std::errc{} || ptr == begin) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two integers, got '" +
                             std::string(line) + "'");
        }
        pos = static_cast<std::size_t>(ptr - line.data());
        if (i == 0 && (pos >= line.size() || (line[pos] != ' ' && line[pos] != '\t'))) {
            throw ParseError("line " + std::to_string(line_no) + ": expected whitespace-separated pair");
        }
    }
    if (!trim(line.substr(pos)).empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": trailing characters in '" +
                         std::string(line) + "'");
    }
    return {values[0], values[1]};
}

} // namespace

Graph Graph::from_edges(int num_vertices, std::span<const Edge> edges) {
    if (num_vertices < 1) {
        throw ValidationError("graph must have at least one vertex");
    }
    Graph g;
    g.adjacency_.assign(static_cast<std::size_t>(num_vertices), {});
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
            throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has a vertex id outside 0.." + std::to_string(num_vertices - 1));
        }
        if (u == v) {
            throw ValidationError("loop at vertex " + std::to_string(u));
        }
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    const auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
        throw ValidationError("duplicate edge (" + std::to_string(dup->first) + "," +
                              std::to_string(dup->second) + ")");
    }
    for (auto [u, v] : g.edges_) {
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
    }
    if (!is_connected(g.adjacency_)) {
        throw ValidationError("graph is disconnected");
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) {
        return false;
    }
    const auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph parse_graph(std::string_view text) {
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto [a, b] = parse_pair(line, line_no);
        if (!have_header) {
            if (a < 1 || b < 0 || a > (1LL << 30)) {
                throw ParseError("line " + std::to_string(line_no) + ": invalid header '" +
                                 std::string(line) + "'");
            }
            n = a;
            m = b;
            have_header = true;
            edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 20)));
            continue;
        }
        if (static_cast<long long>(edges.size()) == m) {
            throw ParseError("line " + std::to_string(line_no) + ": more than " + std::to_string(m) +
                             " edge lines");
        }
        if (a >= n || b >= n) {
            throw ValidationError("line " + std::to_string(line_no) + ": vertex id out of range 0.." +
                                  std::to_string(n - 1));
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header) {
        throw ParseError("missing header line 'n m'");
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError("header announces " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " were given");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph load_graph(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open graph file '" + path + "'");
    }
    return load_graph(in);
}

std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph subdivide(const Graph& g, int ell) {
    if (ell < 1) {
        throw InvalidArgument("subdivision length must be >= 1, got " + std::to_string(ell));
    }
    if (ell == 1) {
        return g;
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.num_edges()) * static_cast<std::size_t>(ell));
    Vertex next = g.num_vertices();
    for (auto [u, v] : g.edges()) {
        Vertex prev = u;
        for (int i = 1; i < ell; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph::from_edges(next, edges);
}

} // namespace kgc
