// Copyright 2026 The qstwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSTWALK_GRAPH_HPP_
#define QSTWALK_GRAPH_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qstwalk {

using Vertex = int;

/// Thrown by `distance` when the two vertices lie in different components.
struct NoPathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once constructed. Edges are stored in insertion order (with
/// u < v); adjacency lists are kept sorted so that neighbor iteration is
/// deterministic.
class Graph {
  public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicate edges or labels
    /// outside [0, n).
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sorted ascending.
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const { return v >= 0 && v < n_; }

    bool is_connected() const;

  private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

Graph build_path(int n);

/// Attaches `wings` copies of `seed` to it. Wing j (1-based) occupies labels
/// j*n .. (j+1)*n-1 and vertex i of the body is joined to vertex j*n+i.
Graph build_butterfly(const Graph& seed, int wings);

inline int degree(const Graph& g, Vertex v) { return g.degree(v); }

/// BFS shortest-path length. Throws NoPathError if unreachable.
int distance(const Graph& g, Vertex u, Vertex v);

/// Largest finite distance; throws NoPathError on a disconnected graph.
int diameter(const Graph& g);

struct Bipartition {
    std::vector<Vertex> first;   // contains vertex 0 of each component
    std::vector<Vertex> second;
};

/// 2-colouring by BFS, or nullopt if the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

// Edge-list text format: header "n <count>", then one "u v" pair per line.
// Blank lines and lines starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace qstwalk

#endif  // QSTWALK_GRAPH_HPP_
