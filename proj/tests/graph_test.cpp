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
#include <random>
#include <set>
#include <sstream>

#include "gtest/gtest.h"

using namespace qstwalk;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
    std::set<std::pair<int, int>> out;
    for (const Edge& e : g.edges()) out.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    return out;
}

// Edges of B_3 over P_3 transcribed from the drawing, independent of the
// construction code.
const std::set<std::pair<int, int>> kB3P3Drawing = {
    {0, 1}, {1, 2},                               // body
    {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5},       // wing 1
    {6, 7}, {7, 8}, {0, 6}, {1, 7}, {2, 8},       // wing 2
    {9, 10}, {10, 11}, {0, 9}, {1, 10}, {2, 11},  // wing 3
};

}  // namespace

TEST(graph, rejects_invalid_edges) {
    EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{-1, 1}}), std::invalid_argument);
}

TEST(graph, build_path) {
    EXPECT_THROW(build_path(0), std::invalid_argument);

    Graph p1 = build_path(1);
    EXPECT_EQ(p1.num_vertices(), 1);
    EXPECT_EQ(p1.num_edges(), 0);

    Graph p2 = build_path(2);
    EXPECT_EQ(edge_set(p2), (std::set<std::pair<int, int>>{{0, 1}}));

    Graph p3 = build_path(3);
    EXPECT_EQ(edge_set(p3), (std::set<std::pair<int, int>>{{0, 1}, {1, 2}}));
}

TEST(graph, build_butterfly_small) {
    Graph b1 = build_butterfly(build_path(2), 1);
    EXPECT_EQ(b1.num_vertices(), 4);
    EXPECT_EQ(edge_set(b1), (std::set<std::pair<int, int>>{{0, 1}, {2, 3}, {0, 2}, {1, 3}}));

    Graph b0 = build_butterfly(build_path(2), 0);
    EXPECT_EQ(edge_set(b0), edge_set(build_path(2)));

    EXPECT_THROW(build_butterfly(build_path(2), -1), std::invalid_argument);
}

TEST(graph, build_butterfly_p3_matches_drawing) {
    Graph g = build_butterfly(build_path(3), 3);
    EXPECT_EQ(g.num_vertices(), 12);
    EXPECT_EQ(g.num_edges(), 17);
    EXPECT_EQ(edge_set(g), kB3P3Drawing);

    // Degrees counted straight from the drawing.
    for (int v = 0; v < 12; ++v) {
        int expected = 0;
        for (auto [a, b] : kB3P3Drawing) expected += (a == v) + (b == v);
        EXPECT_EQ(g.degree(v), expected) << "vertex " << v;
    }
    EXPECT_EQ(g.degree(0), 4);
    EXPECT_EQ(g.degree(2), 4);
    EXPECT_EQ(g.degree(1), 5);
    for (int v : {4, 7, 10}) EXPECT_EQ(g.degree(v), 3);
    for (int v : {3, 5, 6, 8, 9, 11}) EXPECT_EQ(g.degree(v), 2);
}

TEST(graph, degree) {
    EXPECT_EQ(degree(build_butterfly(build_path(2), 1), 0), 2);
    EXPECT_EQ(degree(build_path(2), 0), 1);
    EXPECT_EQ(degree(build_butterfly(build_path(3), 3), 1), 5);
    EXPECT_THROW(degree(build_path(2), 2), std::invalid_argument);
    EXPECT_THROW(degree(build_path(2), -1), std::invalid_argument);
}

TEST(graph, distance) {
    Graph b1 = build_butterfly(build_path(2), 1);
    EXPECT_EQ(distance(b1, 1, 2), 2);
    EXPECT_EQ(distance(b1, 3, 3), 0);
    EXPECT_EQ(diameter(b1), 2);

    Graph b3p3 = build_butterfly(build_path(3), 3);
    EXPECT_EQ(distance(b3p3, 5, 6), 4);
    EXPECT_EQ(diameter(b3p3), 4);

    Graph split(4, {{0, 1}, {2, 3}});
    EXPECT_THROW(distance(split, 0, 3), NoPathError);
    EXPECT_THROW(diameter(split), NoPathError);
    EXPECT_FALSE(split.is_connected());
}

TEST(graph, diameter_of_path_butterflies_with_two_or_more_wings) {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 2; k <= 6; ++k) {
            EXPECT_EQ(diameter(build_butterfly(build_path(n), k)), n + 1) << "n=" << n << " k=" << k;
        }
    }
}

TEST(graph, bipartition) {
    auto parts = bipartition(build_butterfly(build_path(2), 2));
    ASSERT_TRUE(parts.has_value());
    EXPECT_EQ(parts->first, (std::vector<Vertex>{0, 3, 5}));
    EXPECT_EQ(parts->second, (std::vector<Vertex>{1, 2, 4}));

    EXPECT_FALSE(bipartition(Graph(3, {{0, 1}, {1, 2}, {2, 0}})).has_value());

    auto p3 = bipartition(build_butterfly(build_path(3), 3));
    ASSERT_TRUE(p3.has_value());
    // Body 0,2 and the middle vertex of each wing on one side.
    EXPECT_EQ(p3->first.size(), 5u);
    EXPECT_EQ(p3->second.size(), 7u);
    auto in_first = [&](Vertex v) { return std::count(p3->first.begin(), p3->first.end(), v) == 1; };
    // Distance 4 is even, so 5 and 6 share a colour.
    EXPECT_EQ(in_first(5), in_first(6));
}

TEST(graph, butterfly_counts_match_closed_form) {
    for (int n = 1; n <= 5; ++n) {
        Graph seed = build_path(n);
        const int m = seed.num_edges();
        for (int k = 0; k <= 6; ++k) {
            Graph g = build_butterfly(seed, k);
            EXPECT_EQ(g.num_vertices(), (k + 1) * n);
            EXPECT_EQ(g.num_edges(), (k + 1) * m + k * n);
            int degree_sum = 0;
            for (int v = 0; v < g.num_vertices(); ++v) degree_sum += g.degree(v);
            EXPECT_EQ(degree_sum, 2 * g.num_edges());
            EXPECT_TRUE(bipartition(g).has_value()) << "n=" << n << " k=" << k;
            EXPECT_TRUE(g.is_connected());
        }
    }
}

TEST(graph, butterfly_of_general_seed) {
    Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    Graph g = build_butterfly(triangle, 2);
    EXPECT_EQ(g.num_vertices(), 9);
    EXPECT_EQ(g.num_edges(), 3 * 3 + 2 * 3);
    EXPECT_FALSE(bipartition(g).has_value());
}

TEST(graph, distance_is_a_metric_on_samples) {
    std::mt19937 rng(7);
    for (auto [n, k] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 5}}) {
        Graph g = build_butterfly(build_path(n), k);
        std::uniform_int_distribution<int> pick(0, g.num_vertices() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            EXPECT_EQ(distance(g, a, b), distance(g, b, a));
            EXPECT_LE(distance(g, a, c), distance(g, a, b) + distance(g, b, c));
            EXPECT_EQ(distance(g, a, b) == 0, a == b);
        }
    }
}

TEST(graph, edge_list_io) {
    Graph g = build_butterfly(build_path(3), 2);
    std::stringstream buf;
    write_edge_list(buf, g);
    Graph back = read_edge_list(buf);
    EXPECT_EQ(back.num_vertices(), g.num_vertices());
    EXPECT_EQ(edge_set(back), edge_set(g));

    std::istringstream commented("# square\nn 4\n0 1\n\n1 2\n2 3\n3 0\n");
    EXPECT_EQ(read_edge_list(commented).num_edges(), 4);

    std::istringstream no_header("0 1\n");
    EXPECT_THROW(read_edge_list(no_header), std::invalid_argument);
    std::istringstream bad_line("n 3\n0 x\n");
    EXPECT_THROW(read_edge_list(bad_line), std::invalid_argument);
    std::istringstream out_of_range("n 2\n0 5\n");
    EXPECT_THROW(read_edge_list(out_of_range), std::invalid_argument);
    EXPECT_THROW(read_edge_list_file("/nonexistent/graph.txt"), std::runtime_error);
}
