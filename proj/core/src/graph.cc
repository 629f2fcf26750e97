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

#include "qwalk/graph.h"

#include <algorithm>
#include <queue>
#include <string>

#include "qwalk/errors.h"

namespace qwalk {

Graph::Graph(int n) {
    if (n < 0) {
        throw ParameterError("negative vertex count");
    }
    adjacency_.resize(n);
}

void Graph::add_edge_unchecked(int u, int v) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParameterError(
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                std::to_string(n));
        }
        if (u == v) {
            throw ParameterError("loop at vertex " + std::to_string(u));
        }
        g.add_edge_unchecked(u, v);
    }
    for (int v = 0; v < n; v++) {
        auto &nb = g.adjacency_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw ParameterError("parallel edges at vertex " + std::to_string(v));
        }
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::num_edges() const {
    size_t total = 0;
    for (const auto &nb : adjacency_) {
        total += nb.size();
    }
    return static_cast<int>(total / 2);
}

bool Graph::has_edge(int u, int v) const {
    const auto &nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::regular_degree() const {
    if (adjacency_.empty()) {
        return 0;
    }
    int d = degree(0);
    for (int v = 1; v < num_vertices(); v++) {
        if (degree(v) != d) {
            return -1;
        }
    }
    return d;
}

int Graph::min_degree() const {
    int best = 0;
    for (int v = 0; v < num_vertices(); v++) {
        best = v == 0 ? degree(v) : std::min(best, degree(v));
    }
    return best;
}

bool Graph::is_connected() const {
    int n = num_vertices();
    if (n == 0) {
        return true;
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adjacency_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                reached++;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

bool Graph::is_bipartite() const {
    int n = num_vertices();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; s++) {
        if (side[s] != -1) {
            continue;
        }
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adjacency_[u]) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < num_vertices(); u++) {
        for (int v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

ArcTable::ArcTable(const Graph &g) {
    int n = g.num_vertices();
    first_out_.resize(n + 1);
    for (int u = 0; u < n; u++) {
        first_out_[u] = static_cast<int>(arcs_.size());
        for (int v : g.neighbors(u)) {
            index_.emplace(Arc{u, v}, static_cast<int>(arcs_.size()));
            arcs_.push_back({u, v});
        }
    }
    first_out_[n] = static_cast<int>(arcs_.size());
    reversal_.resize(arcs_.size());
    for (size_t i = 0; i < arcs_.size(); i++) {
        reversal_[i] = index_.at(arcs_[i].reversed());
    }
}

int ArcTable::index(int u, int v) const {
    auto it = index_.find(Arc{u, v});
    if (it == index_.end()) {
        throw ParameterError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc");
    }
    return it->second;
}

bool ArcTable::contains(int u, int v) const {
    return index_.contains(Arc{u, v});
}

Graph bipartite_double_cover(const Graph &g) {
    int n = g.num_vertices();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; u++) {
        for (int v : g.neighbors(u)) {
            edges.emplace_back(u, n + v);
        }
    }
    return Graph::from_edges(2 * n, edges);
}

std::vector<int> adjacency_matrix(const Graph &g) {
    int n = g.num_vertices();
    std::vector<int> a(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; u++) {
        for (int v : g.neighbors(u)) {
            a[static_cast<size_t>(u) * n + v] = 1;
        }
    }
    return a;
}

}  // namespace qwalk
