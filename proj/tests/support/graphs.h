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

// Named graphs and reference tables shared by the unit and acceptance tests.

#ifndef QWALK_TESTS_SUPPORT_GRAPHS_H
#define QWALK_TESTS_SUPPORT_GRAPHS_H

#include <string>
#include <vector>

#include "qwalk/graph.h"

namespace qwalk::testing {

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// K2 x K3 with 0:[2,3,4], 1:[3,4,5], 2:[0,4,5], 3:[0,1,5], 4:[0,1,2], 5:[1,2,3].
Graph prism_k2_k3();
/// The 3-cube with 0:[4,5,6], 1:[4,5,7], 2:[4,6,7], 3:[5,6,7] and 4..7 the other side.
Graph cube_q3();
/// K2 x C_n with vertices i and n + i on the two cycles.
Graph prism(int n);
Graph from_adjacency(const std::vector<std::vector<int>> &adj);

struct TraceRow {
    int genus;
    const char *trace;  // 6 decimals
    int count;
};

struct NamedTable {
    const char *name;
    const char *graph6;
    std::vector<TraceRow> rows;
};

/// Rotation-system trace tables (circulant7 coin) for the cubic graphs on up to 8 vertices.
const std::vector<NamedTable> &trace_tables();

struct EntropyRow {
    const char *graph6;
    const char *rotation;
    int genus;
    double entropy;
};

/// Total entropies of selected rotation systems (circulant7 coin).
const std::vector<EntropyRow> &entropy_rows();

struct ShuntTraceRow {
    const char *graph6;
    const char *decomposition;
    double trace;
    int decimals;  // digits printed in the reference
};

/// One representative per cycle structure (gauss coin).
const std::vector<ShuntTraceRow> &shunt_rows();

}  // namespace qwalk::testing

#endif
