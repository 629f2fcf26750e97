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

#include "qwalk/dynamics.h"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.h"

namespace qwalk {

namespace {

void check_inputs(const Eigen::MatrixXcd &u, const Eigen::VectorXcd &x, const Eigen::VectorXcd &y) {
    if (u.rows() != u.cols()) {
        throw ParameterError("walk matrix must be square");
    }
    for (const auto *v : {&x, &y}) {
        if (v->size() != u.rows()) {
            throw ParameterError("state dimension does not match the walk");
        }
        if (std::abs(v->norm() - 1.0) > 1e-9) {
            throw ParameterError("states must be unit vectors");
        }
    }
}

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw ParameterError("eps must lie in (0, 1)");
    }
}

void check_k_max(int k_max) {
    if (k_max < 0) {
        throw ParameterError("k_max must be non-negative");
    }
}

}  // namespace

int default_k_max(int dim) {
    return 10 * dim * dim;
}

std::optional<int> one_shot_hitting(
    const Eigen::MatrixXcd &u, const Eigen::VectorXcd &x, const Eigen::VectorXcd &y, double eps, int k_max) {
    check_inputs(u, x, y);
    check_eps(eps);
    check_k_max(k_max);
    Eigen::VectorXcd state = x;
    for (int k = 0; k <= k_max; k++) {
        if (std::norm(y.dot(state)) >= 1.0 - eps) {
            return k;
        }
        state = u * state;
    }
    return std::nullopt;
}

std::vector<double> stop_probabilities(
    const Eigen::MatrixXcd &u, const Eigen::VectorXcd &x, const Eigen::VectorXcd &y, int k_max) {
    check_inputs(u, x, y);
    check_k_max(k_max);
    std::vector<double> p;
    p.reserve(k_max);
    Eigen::VectorXcd state = x;
    for (int k = 1; k <= k_max; k++) {
        state = u * state;
        std::complex<double> amp = y.dot(state);
        p.push_back(std::norm(amp));
        state -= amp * y;  // project away the measured outcome
    }
    return p;
}

std::optional<int> concurrent_hitting(
    const Eigen::MatrixXcd &u, const Eigen::VectorXcd &x, const Eigen::VectorXcd &y, double eps, int k_max) {
    check_eps(eps);
    auto p = stop_probabilities(u, x, y, k_max);
    double total = 0.0;
    for (size_t k = 0; k < p.size(); k++) {
        total += p[k];
        if (total >= 1.0 - eps) {
            return static_cast<int>(k) + 1;
        }
    }
    return std::nullopt;
}

ExpectedHitting expected_hitting(
    const Eigen::MatrixXcd &u, const Eigen::VectorXcd &x, const Eigen::VectorXcd &y, double tail_tol, int k_max) {
    auto p = stop_probabilities(u, x, y, k_max);
    ExpectedHitting out;
    for (size_t k = 0; k < p.size(); k++) {
        out.value += static_cast<double>(k + 1) * p[k];
        out.stop_mass += p[k];
    }
    out.truncation_bound = std::max(0.0, 1.0 - out.stop_mass);
    out.converged = out.stop_mass >= 1.0 - tail_tol;
    return out;
}

double mixing_bound_constant(const SpectralDecomposition &sd) {
    double c = 0.0;
    for (size_t r = 0; r < sd.groups.size(); r++) {
        Eigen::VectorXd dr = sd.groups[r].projector.diagonal().real().cwiseMax(0.0);
        for (size_t s = 0; s < sd.groups.size(); s++) {
            if (r == s) {
                continue;
            }
            Eigen::VectorXd ds = sd.groups[s].projector.diagonal().real().cwiseMax(0.0);
            double gap = std::abs(sd.groups[r].eigenvalue() - sd.groups[s].eigenvalue());
            c += (dr.array() * ds.array()).sqrt().sum() / gap;
        }
    }
    return 2.0 * c;
}

double mixing_time_bound_coarse(const SpectralDecomposition &sd, double eps) {
    if (!(eps > 0.0)) {
        throw ParameterError("eps must be positive");
    }
    double s = 0.0;
    for (size_t r = 0; r < sd.groups.size(); r++) {
        for (size_t q = 0; q < sd.groups.size(); q++) {
            if (r != q) {
                s += 1.0 / std::abs(sd.groups[r].eigenvalue() - sd.groups[q].eigenvalue());
            }
        }
    }
    return 2.0 * sd.dim / eps * s;
}

double mixing_time_bound_fine(const SpectralDecomposition &sd, double eps) {
    if (!(eps > 0.0)) {
        throw ParameterError("eps must be positive");
    }
    return mixing_bound_constant(sd) / eps;
}

std::vector<double> mixing_deviation(
    const Eigen::MatrixXcd &u, const SpectralDecomposition &sd, const Eigen::VectorXcd &x,
    const std::vector<int> &horizons) {
    if (x.size() != sd.dim || u.rows() != sd.dim) {
        throw ParameterError("state dimension does not match the walk");
    }
    int last = 0;
    for (int k : horizons) {
        if (k < 1) {
            throw ParameterError("horizon must be at least 1");
        }
        last = std::max(last, k);
    }
    Eigen::VectorXd limit = Eigen::VectorXd::Zero(sd.dim);
    for (const auto &g : sd.groups) {
        limit += (g.projector * x).cwiseAbs2();
    }
    std::vector<double> out(horizons.size());
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(sd.dim);
    Eigen::VectorXcd state = x;
    for (int k = 1; k <= last; k++) {
        sum += state.cwiseAbs2();
        for (size_t h = 0; h < horizons.size(); h++) {
            if (horizons[h] == k) {
                out[h] = (sum / static_cast<double>(k) - limit).cwiseAbs().sum();
            }
        }
        state = u * state;
    }
    return out;
}

MixingCheck empirical_mixing_check(
    const Eigen::MatrixXcd &u, const SpectralDecomposition &sd, const std::vector<Eigen::VectorXcd> &states,
    double eps) {
    MixingCheck out;
    out.horizon = std::max(1, static_cast<int>(std::ceil(mixing_time_bound_fine(sd, eps))));
    out.grid = {out.horizon, 2 * out.horizon, 4 * out.horizon};
    for (const auto &x : states) {
        for (double d : mixing_deviation(u, sd, x, out.grid)) {
            out.worst_deviation = std::max(out.worst_deviation, d);
        }
    }
    out.within_eps = out.worst_deviation <= eps;
    return out;
}

}  // namespace qwalk
