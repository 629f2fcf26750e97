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

#include "qwalk/spectral.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>

#include "qwalk/errors.h"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

double normalize_angle(double a) {
    while (a <= -kPi) {
        a += 2 * kPi;
    }
    while (a > kPi) {
        a -= 2 * kPi;
    }
    return a;
}

std::string format_gap(double gap) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", gap);
    return buf;
}

}  // namespace

double SpectralDecomposition::reconstruction_error(const Eigen::MatrixXcd &u) const {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &g : groups) {
        sum += g.eigenvalue() * g.projector;
    }
    return (sum - u).cwiseAbs().maxCoeff();
}

double SpectralDecomposition::completeness_error() const {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &g : groups) {
        sum += g.projector;
    }
    return (sum - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

bool SpectralDecomposition::simple() const {
    return std::all_of(groups.begin(), groups.end(), [](const auto &g) { return g.multiplicity == 1; });
}

SpectralDecomposition spectral_decomposition(const Eigen::MatrixXcd &u, double angle_tol) {
    if (u.rows() != u.cols()) {
        throw ParameterError("spectral decomposition needs a square matrix");
    }
    SpectralDecomposition sd;
    sd.dim = static_cast<int>(u.rows());
    if (sd.dim == 0) {
        return sd;
    }
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
    if (schur.info() != Eigen::Success) {
        throw InternalConsistencyError("Schur factorization did not converge");
    }
    const Eigen::MatrixXcd &t = schur.matrixT();
    const Eigen::MatrixXcd &z = schur.matrixU();

    struct Eig {
        double theta;
        int column;
    };
    std::vector<Eig> eigs;
    for (int i = 0; i < sd.dim; i++) {
        eigs.push_back({normalize_angle(std::arg(t(i, i))), i});
    }
    std::sort(eigs.begin(), eigs.end(), [](const Eig &a, const Eig &b) {
        return a.theta < b.theta || (a.theta == b.theta && a.column < b.column);
    });

    // Split the sorted circle at every gap larger than angle_tol.
    std::vector<std::vector<int>> clusters;
    for (size_t i = 0; i < eigs.size(); i++) {
        if (i == 0) {
            clusters.push_back({0});
            continue;
        }
        double gap = eigs[i].theta - eigs[i - 1].theta;
        if (gap > angle_tol && gap <= 10 * angle_tol) {
            sd.warnings.push_back("eigenvalue gap " + format_gap(gap) + " is near the clustering tolerance");
        }
        if (gap <= angle_tol) {
            clusters.back().push_back(static_cast<int>(i));
        } else {
            clusters.push_back({static_cast<int>(i)});
        }
    }
    if (clusters.size() > 1) {
        double wrap = eigs.front().theta + 2 * kPi - eigs.back().theta;
        if (wrap > angle_tol && wrap <= 10 * angle_tol) {
            sd.warnings.push_back("eigenvalue gap " + format_gap(wrap) + " is near the clustering tolerance");
        }
        if (wrap <= angle_tol) {
            auto first = clusters.front();
            clusters.erase(clusters.begin());
            clusters.back().insert(clusters.back().end(), first.begin(), first.end());
        }
    }

    for (const auto &cluster : clusters) {
        int m = static_cast<int>(cluster.size());
        Eigen::MatrixXcd vecs(sd.dim, m);
        std::complex<double> mean = 0.0;
        for (int c = 0; c < m; c++) {
            vecs.col(c) = z.col(eigs[cluster[c]].column);
            mean += std::polar(1.0, eigs[cluster[c]].theta);
        }
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(vecs);
        Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(sd.dim, m);
        SpectralGroup g;
        g.theta = normalize_angle(std::arg(mean));
        g.multiplicity = m;
        g.projector = q * q.adjoint();
        sd.groups.push_back(std::move(g));
    }
    std::sort(sd.groups.begin(), sd.groups.end(),
              [](const SpectralGroup &a, const SpectralGroup &b) { return a.theta < b.theta; });
    return sd;
}

SpectralDecomposition spectral_decomposition(const TransitionUnitary &u, double angle_tol) {
    return spectral_decomposition(u.matrix, angle_tol);
}

EntropyStats entropy_stats(const Eigen::MatrixXd &m) {
    EntropyStats out;
    for (int j = 0; j < m.cols(); j++) {
        double h = 0.0;
        for (int i = 0; i < m.rows(); i++) {
            double p = m(i, j);
            if (p >= 1e-14) {
                h -= p * std::log(p);
            }
        }
        out.columns.push_back(h);
        out.total += h;
    }
    return out;
}

AverageMixingMatrix average_mixing_matrix(const SpectralDecomposition &sd) {
    AverageMixingMatrix out;
    int l = sd.dim;
    out.matrix = Eigen::MatrixXd::Zero(l, l);
    out.walk_regular = true;
    for (const auto &g : sd.groups) {
        out.matrix += g.projector.cwiseAbs2();
        Eigen::VectorXd diag = g.projector.diagonal().real();
        if (l > 0 && diag.maxCoeff() - diag.minCoeff() > 1e-6) {
            out.walk_regular = false;
        }
    }
    out.trace = out.matrix.trace();
    auto ent = entropy_stats(out.matrix);
    out.column_entropies = std::move(ent.columns);
    out.total_entropy = ent.total;
    out.simple_spectrum = sd.simple();
    out.uniform = l > 0 && (out.matrix.array() - 1.0 / l).abs().maxCoeff() < 1e-6;
    return out;
}

std::vector<Eigen::MatrixXd> time_averaged_mixing(const Eigen::MatrixXcd &u, const std::vector<int> &horizons) {
    if (u.rows() != u.cols()) {
        throw ParameterError("time average needs a square matrix");
    }
    int last = 0;
    for (int k : horizons) {
        if (k < 1) {
            throw ParameterError("horizon must be at least 1");
        }
        last = std::max(last, k);
    }
    Eigen::SparseMatrix<std::complex<double>> sparse = u.sparseView(1.0, 0.0);
    int l = static_cast<int>(u.rows());
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(l, l);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(l, l);
    std::vector<Eigen::MatrixXd> out(horizons.size());
    for (int k = 1; k <= last; k++) {
        sum += power.cwiseAbs2();
        for (size_t h = 0; h < horizons.size(); h++) {
            if (horizons[h] == k) {
                out[h] = sum / static_cast<double>(k);
            }
        }
        if (k < last) {
            power = sparse * power;
        }
    }
    return out;
}

Eigen::MatrixXd time_averaged_mixing(const Eigen::MatrixXcd &u, int horizon) {
    return time_averaged_mixing(u, std::vector<int>{horizon}).front();
}

namespace {

void require_unit(const Eigen::VectorXcd &x, int dim) {
    if (x.size() != dim) {
        throw ParameterError("state has dimension " + std::to_string(x.size()) + ", expected " + std::to_string(dim));
    }
    if (std::abs(x.norm() - 1.0) > 1e-9) {
        throw ParameterError("state is not a unit vector");
    }
}

}  // namespace

double limiting_probability(const SpectralDecomposition &sd, const Eigen::VectorXcd &x, const std::vector<int> &arcs) {
    require_unit(x, sd.dim);
    for (int a : arcs) {
        if (a < 0 || a >= sd.dim) {
            throw ParameterError("arc index " + std::to_string(a) + " out of range");
        }
    }
    double p = 0.0;
    for (const auto &g : sd.groups) {
        Eigen::VectorXcd fx = g.projector * x;
        for (int a : arcs) {
            p += std::norm(fx(a));
        }
    }
    if (p < 0.0 && p > -1e-12) {
        p = 0.0;
    }
    if (p > 1.0 && p < 1.0 + 1e-12) {
        p = 1.0;
    }
    return p;
}

Eigen::MatrixXcd apply_channel(const SpectralDecomposition &sd, const Eigen::MatrixXcd &rho) {
    if (rho.rows() != sd.dim || rho.cols() != sd.dim) {
        throw ParameterError("density matrix has the wrong shape");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
        throw ParameterError("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > 1e-9) {
        throw ParameterError("density matrix does not have trace 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9) {
        throw ParameterError("density matrix is not positive semidefinite");
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(sd.dim, sd.dim);
    for (const auto &g : sd.groups) {
        out += g.projector * rho * g.projector;
    }
    return out;
}

double trace_lower_bound(const SpectralDecomposition &sd) {
    if (sd.dim == 0) {
        return 0.0;
    }
    double s = 0.0;
    for (const auto &g : sd.groups) {
        s += static_cast<double>(g.multiplicity) * g.multiplicity;
    }
    return s / sd.dim;
}

}  // namespace qwalk
