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

#ifndef KGC_GRAPH_HPP_
#define KGC_GRAPH_HPP_

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kgc {

using Vertex = int;

/// Undirected edge, always normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable simple connected undirected unweighted graph.
 *
 * Vertices are 0..n-1. Neighbor lists are sorted ascending and the edge list
 * is kept in lexicographic order, so every traversal that iterates neighbors
 * in storage order is deterministic.
 */
class Graph {
public:
    /// Builds and validates a graph. Edges may be given in either orientation.
    /// Throws ValidationError on loops, duplicates, out-of-range ids or a disconnected result.
    static Graph from_edges(int num_vertices, std::span<const Edge> edges);

    int num_vertices() const { return static_cast<int>(adjacency_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const { return v >= 0 && v < num_vertices(); }

    /// Edges in lexicographic order.
    const std::vector<Edge>& edges() const { return edges_; }

    bool is_tree() const { return num_edges() == num_vertices() - 1; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph() = default;

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

/// Parses the edge-list format: '#' comment lines, a header "n m", then m lines "u v".
/// Throws ParseError for malformed text and ValidationError for invalid graphs.
Graph parse_graph(std::string_view text);
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

/// Emits the edge-list format with edges in lexicographic order.
std::string serialize_graph(const Graph& g);

/**
 * Replaces every edge by a path of length `ell`.
 *
 * Original vertices keep their ids. The ell-1 interior vertices of each edge
 * are appended edge by edge in lexicographic edge order, walking from the
 * smaller endpoint towards the larger one.
 */
Graph subdivide(const Graph& g, int ell);

} // namespace kgc

#endif // KGC_GRAPH_HPP_
