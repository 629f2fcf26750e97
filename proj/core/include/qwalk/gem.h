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

#ifndef QWALK_GEM_H
#define QWALK_GEM_H

#include <array>
#include <cstddef>
#include <vector>

#include "qwalk/graph.h"
#include "qwalk/rotation.h"
#include "qwalk/shunts.h"

namespace qwalk {

/// Graph-encoded map of an embedding.
///
/// Flags are corners of faces: flag 2a is the tail end of arc a and flag
/// 2a + 1 its head end, both inside the face that contains a. This gives
/// 2m flags, each a (vertex, edge, face) triple.
///   tau[0] swaps the two ends of an arc (other vertex, same edge and face);
///   tau[1] swaps to the other edge of the same face at the same vertex;
///   tau[2] swaps to the other face across the same edge.
struct Gem {
    struct Flag {
        int vertex = 0;
        int edge = 0;
        int face = 0;
    };

    std::vector<Flag> flags;
    std::array<std::vector<int>, 3> tau;
    /// Cubic graph on the flags; edge {f, tau[c][f]} carries color c.
    Graph as_graph;

    int num_flags() const {
        return static_cast<int>(flags.size());
    }
    /// Color of the gem edge {f, g}, or -1 if they are not adjacent.
    int color(int f, int g) const;
};

/// Builds the gem of the embedding given by rot. Requires min degree >= 2
/// (a pendant vertex makes tau[1] and tau[2] coincide).
Gem build_gem(const Graph &g, const RotationSystem &rot);

struct GemAxioms {
    bool involutions = false;         // each tau_i is a fixed-point-free involution
    bool tau0_tau2_commute = false;   // tau0 tau2 = tau2 tau0
    bool tau0_tau2_fixed_point_free = false;
    bool transitive = false;          // <tau0, tau1, tau2> is transitive on flags

    bool all() const {
        return involutions && tau0_tau2_commute && tau0_tau2_fixed_point_free && transitive;
    }
};

GemAxioms check_gem_axioms(const Gem &gem);

/// Orientability by bipartiteness of the gem.
bool is_orientable(const Gem &gem);

/// One way of writing the gem as K2 x Y.
struct GemQuotient {
    /// Y, on the flags of the gem's first color class (flag 0's side), in increasing flag order.
    Graph y;
    /// Q_c for c = 0, 1, 2: the shunt of Y induced by gem edges of color c.
    ShuntDecomposition shunts;
    /// The fixed-point-free, class-swapping involutive automorphism of the gem used.
    std::vector<int> involution;
};

struct GemQuotientOptions {
    /// Only use automorphisms that preserve edge colors. Such quotients always
    /// have involutive shunts.
    bool color_preserving = false;
    /// Stop after this many quotients (0 = all).
    size_t max_results = 0;
};

/// All quotients Y with gem ~= K2 x Y obtained from fixed-point-free involutive
/// automorphisms alpha that swap the color classes and never map a flag to a
/// neighbor. Returns an empty list when none exist (e.g. a non-bipartite gem).
std::vector<GemQuotient> gem_quotient(const Gem &gem, const GemQuotientOptions &options = {});

}  // namespace qwalk

#endif
