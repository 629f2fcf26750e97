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

#ifndef QWALK_COIN_H
#define QWALK_COIN_H

#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qwalk {

enum class CoinKind {
    kGrover,      // (2/d) J - I
    kFourier,     // (1/sqrt d) exp(2 pi i jk / d)
    kCirculant7,  // (1/7) circ(-2, 6, 3), d = 3
    kGauss,       // (1/sqrt d) exp(2 pi i (j-k)^2 / d), odd d
};

CoinKind parse_coin_kind(std::string_view name);
std::string coin_kind_name(CoinKind kind);

/// A d x d unitary acting on the out-arcs of one vertex: column j holds the
/// amplitudes sent from the j-th arc to every arc of the vertex.
struct Coin {
    Eigen::MatrixXcd matrix;

    int dim() const {
        return static_cast<int>(matrix.rows());
    }
};

/// Throws ParameterError for d < 1, d != 3 with circulant7, or even d with gauss.
Coin make_coin(CoinKind kind, int d);

/// max |(M* M - I)_{jk}|.
double unitarity_error(const Eigen::MatrixXcd &m);

/// True iff C_{k,j} depends only on (k - j) mod d, to tolerance.
bool is_circulant(const Coin &coin, double tol = 1e-9);

/// Smallest distance between two eigenvalues of the coin (infinity for d = 1).
double min_eigenvalue_gap(const Coin &coin);

/// Throws CoinCompatibilityError unless the coin is circulant with simple
/// eigenvalues (gap above tol), the condition under which a coin attached to
/// a rotation system does not depend on where each cyclic order starts.
void require_rotation_compatible(const Coin &coin, double tol = 1e-9);

}  // namespace qwalk

#endif
