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

#include "qstwalk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>

namespace qstwalk {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adjacency_(n < 0 ? 0 : n) {
    if (n < 0) {
        throw std::invalid_argument("vertex count must be non-negative");
    }
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (!contains(e.u) || !contains(e.v)) {
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") references a vertex outside [0, " + std::to_string(n) + ")");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
        if (std::find(adjacency_[e.u].begin(), adjacency_[e.u].end(), e.v) != adjacency_[e.u].end()) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
        edges_.push_back(e);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

void Graph::check_vertex(Vertex v) const {
    if (!contains(v)) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
    }
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& adj = neighbors(u);
    check_vertex(v);
    return std::binary_search(adj.begin(), adj.end(), v);
}

namespace {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::queue<Vertex> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    auto dist = bfs_distances(*this, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Graph build_path(int n) {
    if (n < 1) {
        throw std::invalid_argument("path graph needs at least one vertex");
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph build_butterfly(const Graph& seed, int wings) {
    if (wings < 0) {
        throw std::invalid_argument("wing count must be non-negative");
    }
    const int n = seed.num_vertices();
    std::vector<Edge> edges = seed.edges();
    for (int j = 1; j <= wings; ++j) {
        const int offset = j * n;
        for (const Edge& e : seed.edges()) edges.push_back({e.u + offset, e.v + offset});
        for (Vertex i = 0; i < n; ++i) edges.push_back({i, offset + i});
    }
    return Graph((wings + 1) * n, std::move(edges));
}

int distance(const Graph& g, Vertex u, Vertex v) {
    if (!g.contains(u) || !g.contains(v)) {
        throw std::invalid_argument("distance: vertex out of range");
    }
    int d = bfs_distances(g, u)[v];
    if (d < 0) {
        throw NoPathError("no path between " + std::to_string(u) + " and " + std::to_string(v));
    }
    return d;
}

int diameter(const Graph& g) {
    int best = 0;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        for (int d : bfs_distances(g, u)) {
            if (d < 0) throw NoPathError("graph is disconnected");
            best = std::max(best, d);
        }
    }
    return best;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    std::vector<int> colour(g.num_vertices(), -1);
    for (Vertex root = 0; root < g.num_vertices(); ++root) {
        if (colour[root] >= 0) continue;
        colour[root] = 0;
        std::queue<Vertex> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            Vertex u = frontier.front();
            frontier.pop();
            for (Vertex w : g.neighbors(u)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[u];
                    frontier.push(w);
                } else if (colour[w] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        (colour[v] == 0 ? parts.first : parts.second).push_back(v);
    }
    return parts;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::optional<int> n;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        auto fail = [&](const std::string& what) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + what);
        };
        if (!n) {
            std::string tag;
            int count = 0;
            if (!(fields >> tag >> count) || tag != "n") fail("expected header 'n <count>'");
            n = count;
            continue;
        }
        Vertex u = 0, v = 0;
        if (!(fields >> u >> v)) fail("expected 'u v'");
        std::string extra;
        if (fields >> extra) fail("trailing characters");
        edges.push_back({u, v});
    }
    if (!n) throw std::invalid_argument("edge list is missing the 'n <count>' header");
    return Graph(*n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    try {
        return read_edge_list(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.num_vertices() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace qstwalk
