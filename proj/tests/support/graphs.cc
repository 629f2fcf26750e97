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

#include "support/graphs.h"

#include <utility>

namespace qwalk::testing {

Graph from_adjacency(const std::vector<std::vector<int>> &adj) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < static_cast<int>(adj.size()); u++) {
        for (int v : adj[u]) {
            if (u < v) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(static_cast<int>(adj.size()), edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; u++) {
        for (int v = u + 1; v < n; v++) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; u++) {
        for (int v = 0; v < b; v++) {
            edges.emplace_back(u, a + v);
        }
    }
    return Graph::from_edges(a + b, edges);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; u++) {
        edges.emplace_back(u, (u + 1) % n);
    }
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; u++) {
        edges.emplace_back(u, u + 1);
    }
    return Graph::from_edges(n, edges);
}

Graph prism_k2_k3() {
    return from_adjacency({{2, 3, 4}, {3, 4, 5}, {0, 4, 5}, {0, 1, 5}, {0, 1, 2}, {1, 2, 3}});
}

Graph cube_q3() {
    return from_adjacency(
        {{4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Graph prism(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; i++) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + 1) % n);
        edges.emplace_back(i, n + i);
    }
    return Graph::from_edges(2 * n, edges);
}

const std::vector<NamedTable> &trace_tables() {
    // K4 counts follow the full 16-system enumeration.
    static const std::vector<NamedTable> tables = {
        {"K4", "C~", {
            {0, "3.000000", 2},
            {1, "1.753644", 6},
            {1, "1.694295", 8},
        }},
        {"K3,3", "EFz_", {
            {1, "2.201010", 36},
            {1, "2.111111", 4},
            {2, "1.052644", 24},
        }},
        {"K2xK3", "EUxo", {
            {0, "3.255278", 2},
            {1, "2.105870", 12},
            {1, "2.089084", 6},
            {1, "1.932964", 2},
            {1, "1.918699", 12},
            {1, "1.866536", 6},
            {2, "1.340085", 12},
            {2, "1.187163", 12},
        }},
        {"Q3", "G?zTb_", {
            {0, "4.500000", 2},
            {1, "3.000000", 8},
            {1, "2.744344", 16},
            {1, "2.625302", 24},
            {1, "2.446501", 6},
            {2, "1.980844", 8},
            {2, "1.746199", 48},
            {2, "1.694728", 24},
            {2, "1.694295", 8},
            {2, "1.688522", 16},
            {2, "1.680899", 48},
            {2, "1.679098", 24},
            {2, "1.524169", 24},
        }},
        {"GCrb`o", "GCrb`o", {
            {1, "2.520693", 16},
            {1, "2.513717", 8},
            {1, "2.447996", 8},
            {1, "2.077332", 16},
            {1, "2.009420", 8},
            {2, "1.914302", 6},
            {2, "1.886742", 16},
            {2, "1.752042", 32},
            {2, "1.658131", 2},
            {2, "1.650867", 16},
            {2, "1.615907", 16},
            {2, "1.599010", 16},
            {2, "1.598366", 16},
            {2, "1.586057", 16},
            {2, "1.566265", 16},
            {2, "1.557058", 32},
            {2, "1.460324", 16},
        }},
        {"GCZJd_", "GCZJd_", {
            {0, "3.019811", 2},
            {1, "2.542603", 2},
            {1, "2.470562", 4},
            {1, "2.429130", 4},
            {1, "2.362862", 4},
            {1, "2.354247", 8},
            {1, "2.326463", 2},
            {1, "2.321465", 8},
            {1, "2.299543", 4},
            {1, "2.271257", 4},
            {1, "2.259590", 8},
            {1, "2.250146", 4},
            {1, "2.214541", 4},
            {1, "2.178556", 4},
            {1, "2.115562", 2},
            {1, "2.079810", 8},
            {2, "1.757100", 8},
            {2, "1.714738", 8},
            {2, "1.713346", 4},
            {2, "1.709795", 8},
            {2, "1.690956", 4},
            {2, "1.685911", 8},
            {2, "1.649712", 8},
            {2, "1.622273", 8},
            {2, "1.618072", 8},
            {2, "1.605598", 8},
            {2, "1.600225", 8},
            {2, "1.599082", 8},
            {2, "1.571617", 8},
            {2, "1.571597", 8},
            {2, "1.563497", 8},
            {2, "1.560172", 8},
            {2, "1.553949", 4},
            {2, "1.541723", 4},
            {2, "1.535939", 8},
            {2, "1.531083", 8},
            {2, "1.521709", 4},
            {2, "1.505587", 4},
            {2, "1.505097", 8},
            {2, "1.486416", 4},
            {2, "1.468886", 4},
            {2, "1.466287", 4},
            {2, "1.457042", 8},
            {2, "1.421791", 4},
        }},
        {"GCXmd_", "GCXmd_", {
            {0, "3.681253", 4},
            {1, "2.560923", 16},
            {1, "2.553190", 4},
            {1, "2.535164", 16},
            {1, "2.502552", 8},
            {1, "2.351188", 16},
            {1, "2.331725", 16},
            {1, "2.278575", 8},
            {1, "2.150255", 8},
            {2, "1.769929", 16},
            {2, "1.746908", 16},
            {2, "1.742805", 32},
            {2, "1.660490", 32},
            {2, "1.619199", 8},
            {2, "1.544993", 16},
            {2, "1.541696", 8},
            {2, "1.534019", 16},
            {2, "1.466143", 8},
            {2, "1.450838", 8},
        }},
        {"GCY^B_", "GCY^B_", {
            {1, "2.402758", 24},
            {1, "2.351016", 24},
            {1, "2.263351", 12},
            {1, "2.018540", 4},
            {2, "1.849363", 12},
            {2, "1.805881", 24},
            {2, "1.775098", 24},
            {2, "1.766025", 24},
            {2, "1.736332", 12},
            {2, "1.714296", 8},
            {2, "1.699936", 4},
            {2, "1.676129", 24},
            {2, "1.656324", 12},
            {2, "1.562093", 12},
            {2, "1.519301", 12},
            {2, "1.455918", 24},
        }},
    };
    return tables;
}

const std::vector<EntropyRow> &entropy_rows() {
    static const std::vector<EntropyRow> rows = {
        {"C~", "0: (1, 2, 3), 1: (0, 3, 2), 2: (0, 1, 3), 3: (0, 2, 1)", 0, 25.364055},
        {"C~", "0: (1, 2, 3), 1: (0, 2, 3), 2: (0, 1, 3), 3: (0, 1, 2)", 1, 27.490608},
        {"C~", "0: (1, 2, 3), 1: (0, 3, 2), 2: (0, 1, 3), 3: (0, 1, 2)", 1, 27.763049},
        {"EFz_", "0:(3,5,4),1:(3,5,4),2:(3,4,5),3:(0,2,1),4:(0,1,2),5:(0,2,1)", 1, 47.42653},
        {"EFz_", "0:(3,5,4),1:(3,5,4),2:(3,5,4),3:(0,2,1),4:(0,2,1),5:(0,2,1)", 1, 47.86247},
        {"EFz_", "0: (4, 3, 5), 1: (4, 3, 5), 2: (4, 3, 5), 3: (1, 0, 2), 4: (0, 1, 2), 5: (0, 1, 2)", 2, 52.001943},
        {"EUxo", "0: (2, 3, 4), 1: (4, 3, 5), 2: (0, 4, 5), 3: (1, 0, 5), 4: (0, 1, 2), 5: (2, 1, 3)", 0, 45.68992},
        {"EUxo", "0: (2, 3, 4), 1: (3, 4, 5), 2: (4, 0, 5), 3: (0, 1, 5), 4: (0, 1, 2), 5: (2, 1, 3)", 1, 48.861877},
        {"EUxo", "0: (2, 3, 4), 1: (3, 4, 5), 2: (0, 4, 5), 3: (0, 1, 5), 4: (0, 1, 2), 5: (1, 2, 3)", 1, 48.864165},
        {"EUxo", "0: (2, 3, 4), 1: (3, 4, 5), 2: (0, 4, 5), 3: (1, 0, 5), 4: (0, 1, 2), 5: (2, 1, 3)", 1, 48.981188},
        {"EUxo", "0: (2, 3, 4), 1: (3, 4, 5), 2: (0, 4, 5), 3: (1, 0, 5), 4: (1, 0, 2), 5: (2, 1, 3)", 1, 49.08128},
        {"EUxo", "0: (2, 3, 4), 1: (3, 4, 5), 2: (0, 4, 5), 3: (0, 1, 5), 4: (0, 1, 2), 5: (2, 1, 3)", 1, 49.692402},
        {"EUxo", "0: (2, 3, 4), 1: (3, 4, 5), 2: (0, 4, 5), 3: (0, 1, 5), 4: (1, 0, 2), 5: (2, 1, 3)", 2, 51.692584},
        {"EUxo", "0: (2, 3, 4), 1: (3, 4, 5), 2: (4, 0, 5), 3: (0, 1, 5), 4: (1, 0, 2), 5: (2, 1, 3)", 2, 51.928224},
        {"G?zTb_", "0: (4, 5, 6), 1: (5, 4, 7), 2: (4, 6, 7), 3: (6, 5, 7), 4: (1, 0, 2), 5: (0, 1, 3), 6: (2, 0, 3), 7: (1, 2, 3)", 0, 62.411249},
        {"G?zTb_", "0: (4, 5, 6), 1: (5, 4, 7), 2: (4, 6, 7), 3: (6, 5, 7), 4: (0, 1, 2), 5: (1, 0, 3), 6: (0, 2, 3), 7: (2, 1, 3)", 1, 67.363643},
        {"G?zTb_", "0: (4, 5, 6), 1: (4, 5, 7), 2: (4, 6, 7), 3: (5, 6, 7), 4: (0, 1, 2), 5: (0, 1, 3), 6: (0, 2, 3), 7: (1, 2, 3)", 1, 68.359584},
        {"G?zTb_", "0: (4, 5, 6), 1: (4, 5, 7), 2: (4, 6, 7), 3: (6, 5, 7), 4: (1, 0, 2), 5: (0, 1, 3), 6: (2, 0, 3), 7: (1, 2, 3)", 1, 69.625653},
        {"G?zTb_", "0: (4, 5, 6), 1: (4, 5, 7), 2: (4, 6, 7), 3: (6, 5, 7), 4: (0, 1, 2), 5: (0, 1, 3), 6: (2, 0, 3), 7: (1, 2, 3)", 1, 69.919303},
        {"G?zTb_", "0: (4, 5, 6), 1: (4, 5, 7), 2: (4, 6, 7), 3: (5, 6, 7), 4: (1, 0, 2), 5: (1, 0, 3), 6: (2, 0, 3), 7: (2, 1, 3)", 1, 70.33197},
        {"G?zTb_", "0: (4, 5, 6), 1: (4, 5, 7), 2: (6, 4, 7), 3: (5, 6, 7), 4: (0, 1, 2), 5: (1, 0, 3), 6: (0, 2, 3), 7: (1, 2, 3)", 2, 71.633476},
        {"G?zTb_", "0: (4, 5, 6), 1: (5, 4, 7), 2: (6, 4, 7), 3: (6, 5, 7), 4: (0, 1, 2), 5: (0, 1, 3), 6: (0, 2, 3), 7: (2, 1, 3)", 2, 72.161631},
        {"G?zTb_", "0: (4, 5, 6), 1: (4, 5, 7), 2: (6, 4, 7), 3: (5, 6, 7), 4: (0, 1, 2), 5: (0, 1, 3), 6: (2, 0, 3), 7: (1, 2, 3)", 2, 72.270262},
        {"G?zTb_", "0: (4, 5, 6), 1: (5, 4, 7), 2: (6, 4, 7), 3: (6, 5, 7), 4: (0, 1, 2), 5: (1, 0, 3), 6: (0, 2, 3), 7: (2, 1, 3)", 2, 72.758589},
        {"G?zTb_", "0: (4, 5, 6), 1: (4, 5, 7), 2: (4, 6, 7), 3: (5, 6, 7), 4: (0, 1, 2), 5: (1, 0, 3), 6: (2, 0, 3), 7: (2, 1, 3)", 2, 73.595086},
        {"G?zTb_", "0: (4, 5, 6), 1: (5, 4, 7), 2: (6, 4, 7), 3: (5, 6, 7), 4: (0, 1, 2), 5: (0, 1, 3), 6: (0, 2, 3), 7: (1, 2, 3)", 2, 75.176378},
    };
    return rows;
}

const std::vector<ShuntTraceRow> &shunt_rows() {
    static const std::vector<ShuntTraceRow> rows = {
        {"C~", "{(0,1)(2,3), (0,2,1,3), (0,3,1,2)}", 2.3333, 4},
        {"C~", "{(0,1)(2,3), (0,2)(1,3), (0,3)(1,2)}", 2.6667, 4},
        {"EFz_", "{(0,3)(1,5,2,4), (0,4,2,5)(1,3), (0,5,1,4)(2,3)}", 2.3333, 4},
        {"EFz_", "{(0,3)(1,4)(2,5), (0,4,2,3,1,5), (0,5,1,3,2,4)}", 2.3333, 4},
        {"EFz_", "{(0,3,2,5,1,4), (0,4,2,3,1,5), (0,5,2,4,1,3)}", 3.6667, 4},
        {"EFz_", "{(0,3)(1,5)(2,4), (0,4)(1,3)(2,5), (0,5)(1,4)(2,3)}", 3.6667, 4},
        {"EUxo", "{(0,2)(1,4)(3,5), (0,3,1,5,2,4), (0,4,2,5,1,3)}", 1.7482, 4},
        {"EUxo", "{(0,2,4)(1,3,5), (0,4,2)(1,5,3), (0,3)(1,4)(2,5)}", 2.3665, 4},
        {"EUxo", "{(0,2)(1,4)(3,5), (0,3)(1,5)(2,4), (0,4)(1,3)(2,5)}", 2.6458, 4},
        {"G?zTb_", "{(0,4,2,6)(1,5,3,7), (0,5,1,4)(2,7)(3,6), (0,6,2,4,1,7,3,5)}", 1.8738, 4},
        {"G?zTb_", "{(0,4,1,5)(2,6,3,7), (0,5,1,7,3,6)(2,4), (0,6,2,7,1,4)(3,5)}", 1.9065, 4},
        {"G?zTb_", "{(0,4,1,7,2,6,3,5), (0,5,3,6,2,7,1,4), (0,6)(1,5)(2,4)(3,7)}", 2.3241, 4},
        {"G?zTb_", "{(0,4,2,6)(1,7,3,5), (0,5,3,6,2,7,1,4), (0,6,3,7,2,4,1,5)}", 2.4939, 4},
        {"G?zTb_", "{(0,4)(1,5)(2,6)(3,7), (0,5,3,6)(1,7)(2,4), (0,6,3,5)(1,4)(2,7)}", 2.5232, 4},
        {"G?zTb_", "{(0,4)(1,5)(2,6)(3,7), (0,5,3,6)(1,4,2,7), (0,6,3,5)(1,7,2,4)}", 2.6670, 4},
        {"G?zTb_", "{(0,4,1,5)(2,6,3,7), (0,5,3,6)(1,4,2,7), (0,6,2,4)(1,7,3,5)}", 3.1667, 4},
        {"G?zTb_", "{(0,4)(1,5)(2,7)(3,6), (0,5)(1,4)(2,6)(3,7), (0,6)(1,7)(2,4)(3,5)}", 3.6667, 4},
        {"GCrb`o", "{(0,3,7,4,1,6,2,5), (0,4)(1,5)(2,7)(3,6), (0,5,2,6,1,4,7,3)}", 1.829313, 6},
        {"GCrb`o", "{(0,3,7,4)(1,5,2,6), (0,4,7,2,5,1,6,3), (0,5)(1,4)(2,7,3,6)}", 1.888459, 6},
        {"GCrb`o", "{(0,3,6,1,4,7,2,5), (0,4)(1,5)(2,6)(3,7), (0,5,2,7,4,1,6,3)}", 2.218323, 6},
        {"GCrb`o", "{(0,3,6,2,7,4,1,5), (0,4)(1,6,3,7,2,5), (0,5,2,6,1,4,7,3)}", 2.286421, 6},
        {"GCrb`o", "{(0,3)(1,6)(2,5)(4,7), (0,4,1,5)(2,6,3,7), (0,5,1,4)(2,7,3,6)}", 2.4376, 4},
        {"GCrb`o", "{(0,3)(1,6)(2,5)(4,7), (0,4)(1,5)(2,6)(3,7), (0,5)(1,4)(2,7)(3,6)}", 3.045749, 6},
        {"GCXmd_", "{(0,3,6)(2,7)(1,4,5), (0,6,3,7)(1,5,2,4), (0,7,3)(1,6)(2,5,4)}", 1.769242, 6},
        {"GCXmd_", "{(0,3,7,2,4,5,1,6), (0,6,1,5,4,2,7,3), (0,7)(1,4)(2,5)(3,6)}", 2.186914, 6},
        {"GCXmd_", "{(0,3)(1,6)(2,7)(4,5), (0,6,3,7)(1,4)(2,5), (0,7,3,6)(1,5)(2,4)}", 2.676998, 6},
        {"GCXmd_", "{(0,3)(1,6)(2,7)(4,5), (0,6,3,7)(1,4,2,5), (0,7,3,6)(1,5,2,4)}", 2.983961, 6},
        {"GCXmd_", "{(0,3)(1,6)(2,7)(4,5), (0,6)(1,4)(2,5)(3,7), (0,7)(1,5)(2,4)(3,6)}", 3.579491, 6},
        {"GCY^B_", "{(0,3,7,1,4,5)(2,6), (0,5,4,2,7,3)(1,6), (0,6)(1,7,2,4)(3,5)}", 1.819247, 6},
        {"GCY^B_", "{(0,3)(1,6)(2,7)(4,5), (0,5,3,7,1,4,2,6), (0,6,2,4,1,7,3,5)}", 1.983112, 6},
        {"GCY^B_", "{(0,3)(1,7,2,6)(4,5), (0,5)(1,6,2,4)(3,7), (0,6)(2,7,1,4)(3,5)}", 2.418023, 6},
    };
    return rows;
}

}  // namespace qwalk::testing
