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

#ifndef QWALK_ROTATION_H
#define QWALK_ROTATION_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwalk/graph.h"

namespace qwalk {

/// A cyclic order of the neighbors at every vertex.
///
/// cycles[u] lists the neighbors of u in rotation order; the starting element
/// is arbitrary, so two systems compare equal when every vertex lists the same
/// cycle up to rotation. The listed start is kept so the text form
/// round-trips verbatim.
struct RotationSystem {
    std::vector<std::vector<int>> cycles;

    int num_vertices() const {
        return static_cast<int>(cycles.size());
    }
    /// pi_u(v): the neighbor following v in the rotation at u.
    int next(int u, int v) const;
    /// pi_u^{-1}(v).
    int prev(int u, int v) const;
    /// Each cycle rotated so that its smallest neighbor comes first.
    RotationSystem canonical() const;
    /// Throws ParameterError unless every cycle is a permutation of the neighbors of its vertex.
    void validate(const Graph &g) const;

    bool operator==(const RotationSystem &other) const;
};

/// Number of rotation systems of g, the product of (deg(u) - 1)!.
uint64_t count_rotation_systems(const Graph &g);

/// The index-th rotation system in odometer order.
///
/// Each vertex ranges over the (deg - 1)! cyclic orders that start at its
/// smallest neighbor, in lexicographic order of the remaining neighbors; the
/// highest-numbered vertex is the fastest digit.
RotationSystem rotation_system_at(const Graph &g, uint64_t index);

/// Streams every rotation system of g in odometer order.
class RotationSystemStream {
   public:
    explicit RotationSystemStream(const Graph &g);

    /// Writes the next system into out; returns false once exhausted.
    bool next(RotationSystem &out);
    uint64_t size() const {
        return total_;
    }

   private:
    std::vector<std::vector<int>> tails_;
    std::vector<int> heads_;
    uint64_t total_ = 0;
    uint64_t produced_ = 0;
};

RotationSystemStream enumerate_rotation_systems(const Graph &g);

/// Faces of the embedding: closed arc sequences (arc indices into ArcTable(g)).
struct FacialWalks {
    std::vector<std::vector<int>> faces;
    std::vector<int> face_of;

    int num_faces() const {
        return static_cast<int>(faces.size());
    }
};

/// Traces the faces with the rule (u_{j-1}, u_j) -> (u_j, pi_{u_j}(u_{j-1})).
/// Faces are discovered starting from the least arc not yet covered.
FacialWalks facial_walks(const Graph &g, const RotationSystem &rot);

/// Orientable genus from Euler's formula; throws InternalConsistencyError if
/// 2 - n + E - F is odd or negative.
int genus(const Graph &g, const FacialWalks &faces);

struct Embedding {
    RotationSystem rotation;
    FacialWalks faces;
    int genus = 0;
};

Embedding make_embedding(const Graph &g, const RotationSystem &rot);

/// Text form: "0: (1, 2, 3)" per vertex, joined by newlines (or ", " when single_line).
std::string format_rotation(const RotationSystem &rot, bool single_line = false);

/// Parses the text form. Entries may be separated by newlines or commas.
RotationSystem parse_rotation(std::string_view text);

nlohmann::json rotation_to_json(const RotationSystem &rot);
RotationSystem rotation_from_json(const nlohmann::json &j);

}  // namespace qwalk

#endif
