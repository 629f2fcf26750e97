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

#include "qwalk/coin.h"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "qwalk/errors.h"

namespace qwalk {

CoinKind parse_coin_kind(std::string_view name) {
    if (name == "grover") {
        return CoinKind::kGrover;
    }
    if (name == "fourier") {
        return CoinKind::kFourier;
    }
    if (name == "circulant7") {
        return CoinKind::kCirculant7;
    }
    if (name == "gauss") {
        return CoinKind::kGauss;
    }
    throw ParameterError("unknown coin kind '" + std::string(name) + "'");
}

std::string coin_kind_name(CoinKind kind) {
    switch (kind) {
        case CoinKind::kGrover:
            return "grover";
        case CoinKind::kFourier:
            return "fourier";
        case CoinKind::kCirculant7:
            return "circulant7";
        case CoinKind::kGauss:
            return "gauss";
    }
    return "unknown";
}

Coin make_coin(CoinKind kind, int d) {
    using std::numbers::pi;
    if (d < 1) {
        throw ParameterError("coin dimension must be positive");
    }
    Coin coin;
    coin.matrix.resize(d, d);
    switch (kind) {
        case CoinKind::kGrover:
            coin.matrix.setConstant(2.0 / d);
            coin.matrix.diagonal().array() -= 1.0;
            break;
        case CoinKind::kFourier:
            for (int j = 0; j < d; j++) {
                for (int k = 0; k < d; k++) {
                    coin.matrix(j, k) = std::polar(1.0 / std::sqrt(d), 2.0 * pi * j * k / d);
                }
            }
            break;
        case CoinKind::kCirculant7: {
            if (d != 3) {
                throw ParameterError("circulant7 coin is only defined for d = 3");
            }
            const double first_column[3] = {-2.0 / 7, 6.0 / 7, 3.0 / 7};
            for (int k = 0; k < 3; k++) {
                for (int j = 0; j < 3; j++) {
                    coin.matrix(k, j) = first_column[(k - j + 3) % 3];
                }
            }
            break;
        }
        case CoinKind::kGauss:
            if (d % 2 == 0) {
                throw ParameterError("gauss coin is unitary only for odd d");
            }
            for (int j = 0; j < d; j++) {
                for (int k = 0; k < d; k++) {
                    int diff = j - k;
                    // reduce (j-k)^2 mod d before scaling to keep the phase exact
                    int sq = (diff * diff) % d;
                    coin.matrix(j, k) = std::polar(1.0 / std::sqrt(d), 2.0 * pi * sq / d);
                }
            }
            break;
    }
    return coin;
}

double unitarity_error(const Eigen::MatrixXcd &m) {
    Eigen::MatrixXcd e = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.cols(), m.cols());
    return e.cwiseAbs().maxCoeff();
}

bool is_circulant(const Coin &coin, double tol) {
    int d = coin.dim();
    for (int k = 0; k < d; k++) {
        for (int j = 0; j < d; j++) {
            if (std::abs(coin.matrix(k, j) - coin.matrix((k + 1) % d, (j + 1) % d)) > tol) {
                return false;
            }
        }
    }
    return true;
}

double min_eigenvalue_gap(const Coin &coin) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(coin.matrix, false);
    const auto &ev = solver.eigenvalues();
    double gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < ev.size(); i++) {
        for (int j = i + 1; j < ev.size(); j++) {
            gap = std::min(gap, std::abs(ev(i) - ev(j)));
        }
    }
    return gap;
}

void require_rotation_compatible(const Coin &coin, double tol) {
    if (!is_circulant(coin, tol)) {
        throw CoinCompatibilityError("coin is not circulant, so it depends on the linear order chosen");
    }
    if (min_eigenvalue_gap(coin) <= tol) {
        throw CoinCompatibilityError(
            "coin has a repeated eigenvalue, so it commutes with non-cyclic permutations");
    }
}

}  // namespace qwalk
