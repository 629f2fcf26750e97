// Copyright 2026 The qwalk Authors
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

#ifndef QWALK_GRAPH_H
#define QWALK_GRAPH_H

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace qwalk {

/// An ordered pair (tail, head) of adjacent vertices.
struct Arc {
    int tail = 0;
    int head = 0;

    Arc reversed() const {
        return {head, tail};
    }
    auto operator<=>(const Arc &) const = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted ascending. Construction rejects loops and
/// parallel edges, so every Graph value is simple and symmetric.
class Graph {
   public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph from an edge list; duplicate or looped edges throw ParameterError.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int num_vertices() const {
        return static_cast<int>(adjacency_.size());
    }
    int num_edges() const;
    int degree(int v) const {
        return static_cast<int>(adjacency_[v].size());
    }
    const std::vector<int> &neighbors(int v) const {
        return adjacency_[v];
    }
    bool has_edge(int u, int v) const;

    /// Returns d if every vertex has degree d, otherwise -1.
    int regular_degree() const;
    bool is_connected() const;
    bool is_bipartite() const;
    int min_degree() const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph &other) const = default;

   private:
    void add_edge_unchecked(int u, int v);
    std::vector<std::vector<int>> adjacency_;
};

/// Arcs of a graph in lexicographic (tail, head) order.
///
/// The position of an arc in this table is the row/column index used by the
/// coined walk models.
class ArcTable {
   public:
    explicit ArcTable(const Graph &g);

    int size() const {
        return static_cast<int>(arcs_.size());
    }
    const Arc &operator[](int i) const {
        return arcs_[i];
    }
    const std::vector<Arc> &arcs() const {
        return arcs_;
    }
    /// Position of (u, v); throws ParameterError if u and v are not adjacent.
    int index(int u, int v) const;
    int index(Arc a) const {
        return index(a.tail, a.head);
    }
    bool contains(int u, int v) const;
    int reversal(int i) const {
        return reversal_[i];
    }
    /// First arc index with the given tail; out-arcs of u are contiguous.
    int first_out(int u) const {
        return first_out_[u];
    }

   private:
    std::vector<Arc> arcs_;
    std::vector<int> reversal_;
    std::vector<int> first_out_;
    std::map<Arc, int> index_;
};

/// K2 x g: vertices u (index u) and u' (index n + u), with u ~ v' iff u ~ v.
Graph bipartite_double_cover(const Graph &g);

/// Adjacency matrix entries as a dense 0/1 table (row-major, n*n).
std::vector<int> adjacency_matrix(const Graph &g);

}  // namespace qwalk

#endif
