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

#ifndef QWALK_SHUNTS_H
#define QWALK_SHUNTS_H

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/graph.h"

namespace qwalk {

/// A vertex permutation that maps every vertex to one of its neighbors,
/// stored as an image array: perm[u] is the image of u.
using Permutation = std::vector<int>;

/// A(X) = P_1 + ... + P_d with each P_j a shunt.
///
/// The order of `shunts` is meaningful for walks (it fixes the coin labels);
/// canonical() sorts it for set-level comparisons.
struct ShuntDecomposition {
    std::vector<Permutation> shunts;

    int degree() const {
        return static_cast<int>(shunts.size());
    }
    int num_vertices() const {
        return shunts.empty() ? 0 : static_cast<int>(shunts.front().size());
    }
    ShuntDecomposition canonical() const;
    /// Throws ParameterError unless the shunts are permutations summing to A(g).
    void validate(const Graph &g) const;

    bool operator==(const ShuntDecomposition &) const = default;
};

/// f_u: position j (0-based) -> the j-th neighbor of u.
struct LinearOrders {
    std::vector<std::vector<int>> orders;

    int num_vertices() const {
        return static_cast<int>(orders.size());
    }
    void validate(const Graph &g) const;
};

/// Neighbors of each vertex in ascending order.
LinearOrders lexicographic_orders(const Graph &g);

/// Visits every unordered shunt-decomposition of a d-regular graph exactly once.
///
/// Backtracks over vertices, extending all d shunts at once; shunt j is the
/// one sending vertex 0 to its j-th neighbor, so every visited decomposition
/// is already in canonical (sorted) form. Order is deterministic. The visitor
/// returns false to stop early. Throws PreconditionError for a non-regular graph.
void for_each_shunt_decomposition(
    const Graph &g, const std::function<bool(const ShuntDecomposition &)> &visit);

std::vector<ShuntDecomposition> enumerate_shunt_decompositions(const Graph &g);

/// True iff every shunt is an involution.
bool is_symmetric(const ShuntDecomposition &dec);

/// Cycle lengths of a permutation, ascending, fixed points included.
std::vector<int> cycle_type(const Permutation &perm);

/// Sorted multiset of per-shunt cycle types, e.g. "[2,2]|[4]|[4]".
std::string cycle_signature(const ShuntDecomposition &dec);

/// The shunts P_j(u) = f_u(j) induced by linear orders; throws
/// InvalidOrdersError when two in-arcs of a vertex carry the same label.
ShuntDecomposition validate_linear_orders_for_shunt_model(const Graph &g, const LinearOrders &lo);

/// Inverse of the above: f_u(j) = P_j(u).
LinearOrders linear_orders_from_decomposition(const ShuntDecomposition &dec);

/// Cycle notation, e.g. "(0,1)(2,3)". Fixed points are omitted.
std::string format_permutation(const Permutation &perm);

/// "{(0,1)(2,3), (0,2)(1,3), (0,3)(1,2)}".
std::string format_decomposition(const ShuntDecomposition &dec);

/// Parses the brace form above for a graph on n vertices.
ShuntDecomposition parse_decomposition(std::string_view text, int n);

}  // namespace qwalk

#endif
