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

#ifndef QWALK_DYNAMICS_H
#define QWALK_DYNAMICS_H

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/spectral.h"

namespace qwalk {

/// 10 l^2, the default step limit for a walk of dimension l.
int default_k_max(int dim);

/// Smallest k <= k_max with |y^* U^k x|^2 >= 1 - eps. Throws ParameterError
/// unless 0 < eps < 1 and x, y are unit vectors of the right size.
std::optional<int> one_shot_hitting(
    const Eigen::MatrixXcd &u, const Eigen::VectorXcd &x, const Eigen::VectorXcd &y, double eps, int k_max);

/// p_k = |y^* U ((I - y y^*) U)^{k-1} x|^2 for k = 1..k_max: the chance that a
/// walk measured against y after every step first finds y at step k.
std::vector<double> stop_probabilities(
    const Eigen::MatrixXcd &u, const Eigen::VectorXcd &x, const Eigen::VectorXcd &y, int k_max);

/// Smallest K <= k_max with p_1 + ... + p_K >= 1 - eps.
std::optional<int> concurrent_hitting(
    const Eigen::MatrixXcd &u, const Eigen::VectorXcd &x, const Eigen::VectorXcd &y, double eps, int k_max);

struct ExpectedHitting {
    double value = 0.0;            // sum_{k <= k_max} k p_k
    double stop_mass = 0.0;        // sum_{k <= k_max} p_k
    double truncation_bound = 0.0; // 1 - stop_mass, clamped at 0
    bool converged = false;        // stop_mass >= 1 - tail_tol
};

ExpectedHitting expected_hitting(
    const Eigen::MatrixXcd &u, const Eigen::VectorXcd &x, const Eigen::VectorXcd &y, double tail_tol, int k_max);

/// 2 sum_{r != s} sum_j sqrt((F_r)_jj (F_s)_jj) / |lambda_r - lambda_s|: the
/// constant c with deviation(K) <= c / K for every initial state.
double mixing_bound_constant(const SpectralDecomposition &sd);

/// (2 l / eps) sum_{r != s} 1 / |lambda_r - lambda_s|; 0 for a single group.
double mixing_time_bound_coarse(const SpectralDecomposition &sd, double eps);

/// mixing_bound_constant / eps; 0 for a single group.
double mixing_time_bound_fine(const SpectralDecomposition &sd, double eps);

/// sum_j |(1/K) sum_{k<K} |(U^k x)_j|^2 - sum_r x^* F_r D_j F_r x| for each K
/// in horizons (one pass up to the largest).
std::vector<double> mixing_deviation(
    const Eigen::MatrixXcd &u, const SpectralDecomposition &sd, const Eigen::VectorXcd &x,
    const std::vector<int> &horizons);

struct MixingCheck {
    int horizon = 0;             // K
    std::vector<int> grid;       // L values checked
    double worst_deviation = 0.0;
    bool within_eps = false;
};

/// Deviation at every L in {K, 2K, 4K} with K = ceil(fine bound), maximized
/// over the given initial states.
MixingCheck empirical_mixing_check(
    const Eigen::MatrixXcd &u, const SpectralDecomposition &sd, const std::vector<Eigen::VectorXcd> &states,
    double eps);

}  // namespace qwalk

#endif
