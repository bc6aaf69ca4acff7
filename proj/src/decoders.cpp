/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "memsyn/decoders.hpp"

#include <cmath>
#include <limits>

#include "memsyn/errors.hpp"

namespace memsyn {

Eigen::MatrixXd rate_activities(const Ensemble& ens, const Eigen::MatrixXd& eval_points) {
    if (eval_points.cols() != ens.dimensions) {
        throw ConfigError("rate_activities: eval point dimension mismatch");
    }
    const Eigen::Index m = eval_points.rows();
    // Current of neuron j at point x: gain_j * (encoder_j . x) + bias_j.
    Eigen::MatrixXd currents = eval_points * ens.encoders.transpose();
    currents = currents.array().rowwise() * ens.gains.transpose().array();
    currents.rowwise() += ens.biases.transpose();

    Eigen::MatrixXd activities(m, ens.n_neurons);
    for (Eigen::Index p = 0; p < m; ++p) {
        for (int j = 0; j < ens.n_neurons; ++j) {
            activities(p, j) = lif_rate(currents(p, j), ens.lif);
        }
    }
    return activities;
}

DecoderSolution solve_decoders(const Ensemble& ens, const TargetFn& target, int d_out,
                               const Eigen::MatrixXd& eval_points, double regularization) {
    if (d_out < 1) throw ConfigError("solve_decoders: d_out must be >= 1");
    if (regularization < 0.0) throw ConfigError("solve_decoders: regularization must be >= 0");

    const Eigen::Index m = eval_points.rows();
    const int n = ens.n_neurons;
    Eigen::MatrixXd activities = rate_activities(ens, eval_points);

    Eigen::MatrixXd targets(m, d_out);
    for (Eigen::Index p = 0; p < m; ++p) {
        Eigen::VectorXd f = target(eval_points.row(p).transpose());
        if (f.size() != d_out) throw ConfigError("solve_decoders: target dimension mismatch");
        targets.row(p) = f.transpose();
    }

    const double sigma = regularization * activities.maxCoeff();
    const double lambda = static_cast<double>(m) * sigma * sigma;

    Eigen::MatrixXd gram = activities.transpose() * activities;
    gram.diagonal().array() += lambda;
    const Eigen::MatrixXd rhs = activities.transpose() * targets;

    DecoderSolution out;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    double cond = std::numeric_limits<double>::infinity();
    if (ldlt.info() == Eigen::Success) {
        const auto d = ldlt.vectorD();
        const double dmax = d.maxCoeff();
        const double dmin = d.minCoeff();
        if (dmin > 0.0 && std::isfinite(dmax)) cond = dmax / dmin;
    }

    if (std::isfinite(cond) && cond < 1e12) {
        out.decoders = ldlt.solve(rhs).transpose();
        out.condition_estimate = cond;
        return out;
    }

    // Ill-conditioned: solve the same ridge problem through the SVD of A.
    out.pseudo_inverse = true;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(activities, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& s = svd.singularValues();
    const double smax = s.size() > 0 ? s[0] : 0.0;
    const double tol = smax * static_cast<double>(std::max<Eigen::Index>(m, n)) *
                       std::numeric_limits<double>::epsilon();
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (lambda > 0.0) {
            inv[i] = s[i] / (s[i] * s[i] + lambda);
        } else if (s[i] > tol) {
            inv[i] = 1.0 / s[i];
        }
    }
    double smin = 0.0;
    for (Eigen::Index i = s.size() - 1; i >= 0; --i) {
        if (s[i] > tol) { smin = s[i]; break; }
    }
    out.condition_estimate = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
    out.decoders = (svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose() * targets).transpose();
    return out;
}

}  // namespace memsyn
