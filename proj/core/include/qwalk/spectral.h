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

#ifndef QWALK_SPECTRAL_H
#define QWALK_SPECTRAL_H

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/walks.h"

namespace qwalk {

/// One eigenvalue e^{i theta} of a unitary and the orthogonal projector onto its eigenspace.
struct SpectralGroup {
    double theta = 0.0;  // in (-pi, pi]
    int multiplicity = 0;
    Eigen::MatrixXcd projector;

    std::complex<double> eigenvalue() const {
        return std::polar(1.0, theta);
    }
};

struct SpectralDecomposition {
    std::vector<SpectralGroup> groups;  // sorted by theta
    int dim = 0;
    std::vector<std::string> warnings;

    /// max |sum_r e^{i theta_r} F_r - u|.
    double reconstruction_error(const Eigen::MatrixXcd &u) const;
    /// max |sum_r F_r - I|.
    double completeness_error() const;
    bool simple() const;
};

/// Eigenvalues come from a complex Schur factorization; angles within
/// angle_tol (circularly) are merged into one group. Gaps that fall in
/// (angle_tol, 10 angle_tol] are reported in warnings. Each group's vectors
/// are re-orthonormalized before forming the projector.
SpectralDecomposition spectral_decomposition(const Eigen::MatrixXcd &u, double angle_tol = 1e-9);
SpectralDecomposition spectral_decomposition(const TransitionUnitary &u, double angle_tol = 1e-9);

struct EntropyStats {
    std::vector<double> columns;
    double total = 0.0;
};

/// Natural-log Shannon entropy of every column; entries below 1e-14 count as zero.
EntropyStats entropy_stats(const Eigen::MatrixXd &m);

struct AverageMixingMatrix {
    Eigen::MatrixXd matrix;
    double trace = 0.0;
    std::vector<double> column_entropies;
    double total_entropy = 0.0;
    /// Every projector has a constant diagonal (to 1e-6).
    bool walk_regular = false;
    /// matrix == J / dim (to 1e-6).
    bool uniform = false;
    bool simple_spectrum = false;
};

/// sum_r F_r o conj(F_r), with its statistics.
AverageMixingMatrix average_mixing_matrix(const SpectralDecomposition &sd);

/// (1/K) sum_{k=0}^{K-1} |U^k|^2 entrywise. Throws ParameterError if K < 1.
Eigen::MatrixXd time_averaged_mixing(const Eigen::MatrixXcd &u, int horizon);

/// The same averages at several horizons, computed in one pass. Horizons
/// must be positive; results are returned in the order given.
std::vector<Eigen::MatrixXd> time_averaged_mixing(const Eigen::MatrixXcd &u, const std::vector<int> &horizons);

/// sum_r x^* F_r D_S F_r x, the long-run average probability of the arc set S.
/// Throws ParameterError unless |x| = 1 (to 1e-9) and S indexes valid states.
double limiting_probability(const SpectralDecomposition &sd, const Eigen::VectorXcd &x, const std::vector<int> &arcs);

/// rho -> sum_r F_r rho F_r. Throws ParameterError unless rho is a density matrix.
Eigen::MatrixXcd apply_channel(const SpectralDecomposition &sd, const Eigen::MatrixXcd &rho);

/// (1/dim) sum_r m_r^2.
double trace_lower_bound(const SpectralDecomposition &sd);

}  // namespace qwalk

#endif
