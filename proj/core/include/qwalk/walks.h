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

#ifndef QWALK_WALKS_H
#define QWALK_WALKS_H

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/coin.h"
#include "qwalk/graph.h"
#include "qwalk/rotation.h"
#include "qwalk/shunts.h"

namespace qwalk {

/// A walk operator together with the labels of its basis.
///
/// For the coined models basis[i] is the arc carried by state i. For the
/// two-reflection model it is the ordered vertex pair (u, v), all n^2 of them.
/// An empty basis means the states are only known by index.
struct TransitionUnitary {
    Eigen::MatrixXcd matrix;
    std::vector<Arc> basis;

    int dim() const {
        return static_cast<int>(matrix.rows());
    }
    /// "(u,v)" per state, or the index when the basis is unlabeled.
    std::vector<std::string> labels() const;
    /// State index of the pair (u, v); throws ParameterError if absent.
    int state_of(int u, int v) const;
};

/// U = R C: coin the out-arcs of each vertex with its own coin, then reverse
/// every arc. coins[u] acts in the order lo.orders[u]. Rows and columns follow
/// the lexicographic arc order.
TransitionUnitary arc_reversal_unitary(
    const Graph &g, const LinearOrders &lo, std::span<const Coin> coins);
TransitionUnitary arc_reversal_unitary(const Graph &g, const LinearOrders &lo, const Coin &coin);

/// Arc-reversal walk of a rotation system: each vertex uses the linear order
/// obtained by reading its cycle from the listed start. Throws
/// CoinCompatibilityError unless the coin is circulant with simple
/// eigenvalues, which makes the result independent of those starts.
TransitionUnitary arc_reversal_from_rotation(const Graph &g, const RotationSystem &rot, const Coin &coin);

/// U = S C on states (u, j), ordered by u then j, where state (u, j) is the
/// arc (u, P_j(u)) and S sends it to (P_j(u), j).
TransitionUnitary shunt_unitary(
    const Graph &g, const ShuntDecomposition &dec, std::span<const Coin> coins);
TransitionUnitary shunt_unitary(const Graph &g, const ShuntDecomposition &dec, const Coin &coin);

/// A doubly stochastic matrix on the vertices.
struct MarkovChain {
    Eigen::MatrixXd matrix;

    int num_states() const {
        return static_cast<int>(matrix.rows());
    }
    /// Throws PreconditionError unless square, non-negative and doubly stochastic to tol.
    void validate(double tol = 1e-12) const;
    /// A(g) / d for a d-regular graph; throws PreconditionError otherwise.
    static MarkovChain simple_random_walk(const Graph &g);
};

/// The two n^2 x n isometries of a chain: Q1 has columns e_j (x) (N e_j), Q2
/// has columns (N^T e_j) (x) e_j, with N the entrywise square root of M.
struct SzegedyIsometries {
    Eigen::MatrixXd q1;
    Eigen::MatrixXd q2;
};

SzegedyIsometries szegedy_isometries(const MarkovChain &mc);

/// Which reflection acts first. kR2R1 (the default) applies
/// R1 = 2 Q1 Q1^T - I first and then R2, i.e. U = R2 R1.
enum class ReflectionOrder { kR2R1, kR1R2 };

/// Two-reflection walk of the chain on all n^2 ordered pairs.
TransitionUnitary szegedy_unitary(const MarkovChain &mc, ReflectionOrder order = ReflectionOrder::kR2R1);

/// Pairs (u, v) where Q1 or Q2 has a non-zero row; outside them U acts as the identity.
std::vector<int> szegedy_support(const MarkovChain &mc);

/// (2 q1 q1^T - I)(2 q2 q2^T - I). Throws ParameterError unless q1 and q2
/// have the same row count and orthonormal columns (to tol).
TransitionUnitary generalized_two_reflection(
    const Eigen::MatrixXd &q1, const Eigen::MatrixXd &q2, double tol = 1e-10);

/// 2 q q^T - I.
Eigen::MatrixXd reflection(const Eigen::MatrixXd &q);

}  // namespace qwalk

#endif
