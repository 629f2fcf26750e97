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

#include "qwalk/walks.h"

#include <cmath>

#include "qwalk/errors.h"

namespace qwalk {

std::vector<std::string> TransitionUnitary::labels() const {
    std::vector<std::string> out;
    if (basis.empty()) {
        for (int i = 0; i < dim(); i++) {
            out.push_back(std::to_string(i));
        }
        return out;
    }
    for (const auto &a : basis) {
        out.push_back("(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
    }
    return out;
}

int TransitionUnitary::state_of(int u, int v) const {
    for (size_t i = 0; i < basis.size(); i++) {
        if (basis[i].tail == u && basis[i].head == v) {
            return static_cast<int>(i);
        }
    }
    throw ParameterError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not a basis state");
}

namespace {

void check_coin_dims(const Graph &g, std::span<const Coin> coins) {
    if (static_cast<int>(coins.size()) != g.num_vertices()) {
        throw ParameterError("need exactly one coin per vertex");
    }
    for (int u = 0; u < g.num_vertices(); u++) {
        if (coins[u].dim() != g.degree(u)) {
            throw ParameterError(
                "coin at vertex " + std::to_string(u) + " has dimension " +
                std::to_string(coins[u].dim()) + " but the degree is " + std::to_string(g.degree(u)));
        }
    }
}

}  // namespace

TransitionUnitary arc_reversal_unitary(
    const Graph &g, const LinearOrders &lo, std::span<const Coin> coins) {
    lo.validate(g);
    check_coin_dims(g, coins);
    ArcTable arcs(g);
    int m = arcs.size();
    TransitionUnitary u;
    u.matrix = Eigen::MatrixXcd::Zero(m, m);
    u.basis = arcs.arcs();
    for (int v = 0; v < g.num_vertices(); v++) {
        const auto &order = lo.orders[v];
        const auto &c = coins[v].matrix;
        for (size_t j = 0; j < order.size(); j++) {
            int from = arcs.index(v, order[j]);
            for (size_t k = 0; k < order.size(); k++) {
                // coin to (v, f_v(k)), then reverse onto (f_v(k), v)
                int to = arcs.index(order[k], v);
                u.matrix(to, from) += c(static_cast<int>(k), static_cast<int>(j));
            }
        }
    }
    return u;
}

TransitionUnitary arc_reversal_unitary(const Graph &g, const LinearOrders &lo, const Coin &coin) {
    std::vector<Coin> coins(g.num_vertices(), coin);
    return arc_reversal_unitary(g, lo, coins);
}

TransitionUnitary arc_reversal_from_rotation(const Graph &g, const RotationSystem &rot, const Coin &coin) {
    rot.validate(g);
    if (g.regular_degree() < 0) {
        throw PreconditionError("the rotation-system walk needs a regular graph");
    }
    require_rotation_compatible(coin);
    return arc_reversal_unitary(g, LinearOrders{rot.cycles}, coin);
}

TransitionUnitary shunt_unitary(
    const Graph &g, const ShuntDecomposition &dec, std::span<const Coin> coins) {
    int d = g.regular_degree();
    if (d < 0) {
        throw PreconditionError("the shunt model needs a regular graph");
    }
    if (dec.degree() != d) {
        throw ParameterError("decomposition has " + std::to_string(dec.degree()) + " shunts, degree is " + std::to_string(d));
    }
    dec.validate(g);
    check_coin_dims(g, coins);
    int n = g.num_vertices();
    TransitionUnitary u;
    u.matrix = Eigen::MatrixXcd::Zero(n * d, n * d);
    for (int v = 0; v < n; v++) {
        for (int j = 0; j < d; j++) {
            u.basis.push_back({v, dec.shunts[j][v]});
        }
    }
    for (int v = 0; v < n; v++) {
        const auto &c = coins[v].matrix;
        for (int j = 0; j < d; j++) {
            for (int k = 0; k < d; k++) {
                int to = dec.shunts[k][v] * d + k;
                u.matrix(to, v * d + j) += c(k, j);
            }
        }
    }
    return u;
}

TransitionUnitary shunt_unitary(const Graph &g, const ShuntDecomposition &dec, const Coin &coin) {
    std::vector<Coin> coins(g.num_vertices(), coin);
    return shunt_unitary(g, dec, coins);
}

void MarkovChain::validate(double tol) const {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
        throw PreconditionError("Markov chain matrix must be square and non-empty");
    }
    if (matrix.minCoeff() < -tol) {
        throw PreconditionError("Markov chain has a negative entry");
    }
    Eigen::VectorXd rows = matrix.rowwise().sum();
    Eigen::VectorXd cols = matrix.colwise().sum().transpose();
    for (int i = 0; i < matrix.rows(); i++) {
        if (std::abs(rows(i) - 1.0) > tol || std::abs(cols(i) - 1.0) > tol) {
            throw PreconditionError("Markov chain is not doubly stochastic");
        }
    }
}

MarkovChain MarkovChain::simple_random_walk(const Graph &g) {
    int d = g.regular_degree();
    if (d <= 0) {
        throw PreconditionError("the simple random walk is doubly stochastic only on a regular graph");
    }
    int n = g.num_vertices();
    MarkovChain mc;
    mc.matrix = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; u++) {
        for (int v : g.neighbors(u)) {
            mc.matrix(u, v) = 1.0 / d;
        }
    }
    return mc;
}

SzegedyIsometries szegedy_isometries(const MarkovChain &mc) {
    mc.validate();
    int n = mc.num_states();
    Eigen::MatrixXd root = mc.matrix.cwiseMax(0.0).cwiseSqrt();
    SzegedyIsometries q;
    q.q1 = Eigen::MatrixXd::Zero(n * n, n);
    q.q2 = Eigen::MatrixXd::Zero(n * n, n);
    for (int j = 0; j < n; j++) {
        for (int i = 0; i < n; i++) {
            q.q1(j * n + i, j) = root(i, j);  // e_j (x) N e_j
            q.q2(i * n + j, j) = root(j, i);  // N^T e_j (x) e_j
        }
    }
    return q;
}

Eigen::MatrixXd reflection(const Eigen::MatrixXd &q) {
    return 2.0 * q * q.transpose() - Eigen::MatrixXd::Identity(q.rows(), q.rows());
}

TransitionUnitary generalized_two_reflection(
    const Eigen::MatrixXd &q1, const Eigen::MatrixXd &q2, double tol) {
    if (q1.rows() != q2.rows()) {
        throw ParameterError("isometries act on spaces of different dimension");
    }
    for (const auto *q : {&q1, &q2}) {
        Eigen::MatrixXd gram = q->transpose() * *q;
        double err = (gram - Eigen::MatrixXd::Identity(q->cols(), q->cols())).cwiseAbs().maxCoeff();
        if (err > tol) {
            throw ParameterError("input does not have orthonormal columns (error " + std::to_string(err) + ")");
        }
    }
    TransitionUnitary u;
    u.matrix = (reflection(q1) * reflection(q2)).cast<std::complex<double>>();
    return u;
}

TransitionUnitary szegedy_unitary(const MarkovChain &mc, ReflectionOrder order) {
    auto q = szegedy_isometries(mc);
    TransitionUnitary u = order == ReflectionOrder::kR2R1 ? generalized_two_reflection(q.q2, q.q1)
                                                          : generalized_two_reflection(q.q1, q.q2);
    int n = mc.num_states();
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            u.basis.push_back({a, b});
        }
    }
    return u;
}

std::vector<int> szegedy_support(const MarkovChain &mc) {
    auto q = szegedy_isometries(mc);
    std::vector<int> out;
    for (int r = 0; r < q.q1.rows(); r++) {
        if (q.q1.row(r).cwiseAbs().maxCoeff() > 0.0 || q.q2.row(r).cwiseAbs().maxCoeff() > 0.0) {
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace qwalk
