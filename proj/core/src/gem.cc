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

#include "qwalk/gem.h"

#include <queue>

#include "qwalk/errors.h"

namespace qwalk {

int Gem::color(int f, int g) const {
    for (int c = 0; c < 3; c++) {
        if (tau[c][f] == g) {
            return c;
        }
    }
    return -1;
}

Gem build_gem(const Graph &g, const RotationSystem &rot) {
    if (g.min_degree() < 2) {
        throw PreconditionError("gem construction needs minimum degree 2");
    }
    ArcTable arcs(g);
    FacialWalks faces = facial_walks(g, rot);
    int m = arcs.size();

    std::vector<int> edge_of(m, -1);
    int next_edge = 0;
    for (int a = 0; a < m; a++) {
        if (arcs[a].tail < arcs[a].head) {
            edge_of[a] = next_edge;
            edge_of[arcs.reversal(a)] = next_edge;
            next_edge++;
        }
    }

    Gem gem;
    gem.flags.resize(2 * m);
    for (auto &t : gem.tau) {
        t.assign(2 * m, -1);
    }
    for (int a = 0; a < m; a++) {
        const Arc &arc = arcs[a];
        gem.flags[2 * a] = {arc.tail, edge_of[a], faces.face_of[a]};
        gem.flags[2 * a + 1] = {arc.head, edge_of[a], faces.face_of[a]};

        gem.tau[0][2 * a] = 2 * a + 1;
        gem.tau[0][2 * a + 1] = 2 * a;

        int r = arcs.reversal(a);
        gem.tau[2][2 * a] = 2 * r + 1;
        gem.tau[2][2 * a + 1] = 2 * r;

        // The arc entering arc.tail just before a along the same face.
        int before = arcs.index(rot.prev(arc.tail, arc.head), arc.tail);
        gem.tau[1][2 * a] = 2 * before + 1;
        gem.tau[1][2 * before + 1] = 2 * a;
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto &t : gem.tau) {
        for (int f = 0; f < 2 * m; f++) {
            if (f < t[f]) {
                edges.emplace_back(f, t[f]);
            }
        }
    }
    gem.as_graph = Graph::from_edges(2 * m, edges);
    return gem;
}

GemAxioms check_gem_axioms(const Gem &gem) {
    GemAxioms ax;
    int n = gem.num_flags();
    ax.involutions = true;
    for (const auto &t : gem.tau) {
        if (static_cast<int>(t.size()) != n) {
            ax.involutions = false;
            continue;
        }
        for (int f = 0; f < n; f++) {
            if (t[f] < 0 || t[f] >= n || t[f] == f || t[t[f]] != f) {
                ax.involutions = false;
            }
        }
    }
    if (!ax.involutions) {
        return ax;
    }
    ax.tau0_tau2_commute = true;
    ax.tau0_tau2_fixed_point_free = true;
    for (int f = 0; f < n; f++) {
        int a = gem.tau[0][gem.tau[2][f]];
        int b = gem.tau[2][gem.tau[0][f]];
        if (a != b) {
            ax.tau0_tau2_commute = false;
        }
        if (a == f) {
            ax.tau0_tau2_fixed_point_free = false;
        }
    }
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    int reached = 0;
    if (n > 0) {
        q.push(0);
        seen[0] = 1;
        reached = 1;
    }
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (const auto &t : gem.tau) {
            if (!seen[t[f]]) {
                seen[t[f]] = 1;
                reached++;
                q.push(t[f]);
            }
        }
    }
    ax.transitive = reached == n;
    return ax;
}

bool is_orientable(const Gem &gem) {
    return gem.as_graph.is_bipartite();
}

namespace {

struct InvolutionSearch {
    const Gem &gem;
    const Graph &h;
    const GemQuotientOptions &options;
    std::vector<int> side;
    std::vector<int> order;
    std::vector<int> alpha;
    std::vector<std::vector<int>> found;

    bool done() const {
        return options.max_results != 0 && found.size() >= options.max_results;
    }

    bool compatible(int u, int v) const {
        if (v == u || side[v] == side[u] || alpha[v] != -1 || h.has_edge(u, v)) {
            return false;
        }
        for (int w : h.neighbors(u)) {
            if (alpha[w] != -1) {
                if (!h.has_edge(v, alpha[w])) {
                    return false;
                }
                if (options.color_preserving && gem.color(u, w) != gem.color(v, alpha[w])) {
                    return false;
                }
            }
        }
        for (int x : h.neighbors(v)) {
            if (alpha[x] != -1) {
                if (!h.has_edge(u, alpha[x])) {
                    return false;
                }
                if (options.color_preserving && gem.color(v, x) != gem.color(u, alpha[x])) {
                    return false;
                }
            }
        }
        return true;
    }

    void run(size_t pos) {
        while (pos < order.size() && alpha[order[pos]] != -1) {
            pos++;
        }
        if (pos == order.size()) {
            found.push_back(alpha);
            return;
        }
        int u = order[pos];
        std::vector<int> candidates;
        for (int w : h.neighbors(u)) {
            if (alpha[w] != -1) {
                candidates = h.neighbors(alpha[w]);
                break;
            }
        }
        if (candidates.empty()) {
            for (int v = 0; v < h.num_vertices(); v++) {
                candidates.push_back(v);
            }
        }
        for (int v : candidates) {
            if (done()) {
                return;
            }
            if (!compatible(u, v)) {
                continue;
            }
            alpha[u] = v;
            alpha[v] = u;
            run(pos + 1);
            alpha[u] = -1;
            alpha[v] = -1;
        }
    }
};

}  // namespace

std::vector<GemQuotient> gem_quotient(const Gem &gem, const GemQuotientOptions &options) {
    const Graph &h = gem.as_graph;
    int n = h.num_vertices();
    if (n == 0 || !h.is_bipartite()) {
        return {};
    }

    InvolutionSearch search{gem, h, options, std::vector<int>(n, -1), {}, std::vector<int>(n, -1), {}};
    for (int s = 0; s < n; s++) {
        if (search.side[s] != -1) {
            continue;
        }
        search.side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            search.order.push_back(u);
            for (int v : h.neighbors(u)) {
                if (search.side[v] == -1) {
                    search.side[v] = 1 - search.side[u];
                    q.push(v);
                }
            }
        }
    }
    search.run(0);

    std::vector<int> rank(n, -1);
    std::vector<int> black;
    for (int f = 0; f < n; f++) {
        if (search.side[f] == 0) {
            rank[f] = static_cast<int>(black.size());
            black.push_back(f);
        }
    }
    int ny = static_cast<int>(black.size());

    std::vector<GemQuotient> out;
    for (auto &alpha : search.found) {
        GemQuotient q;
        std::vector<std::pair<int, int>> edges;
        for (int y = 0; y < ny; y++) {
            for (int w : h.neighbors(black[y])) {
                int z = rank[alpha[w]];
                if (y < z) {
                    edges.emplace_back(y, z);
                }
            }
        }
        q.y = Graph::from_edges(ny, edges);
        for (int c = 0; c < 3; c++) {
            Permutation p(ny);
            for (int y = 0; y < ny; y++) {
                p[y] = rank[alpha[gem.tau[c][black[y]]]];
            }
            q.shunts.shunts.push_back(std::move(p));
        }
        q.involution = std::move(alpha);
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace qwalk
