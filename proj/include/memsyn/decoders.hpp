/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <functional>

#include <Eigen/Dense>

#include "memsyn/ensemble.hpp"

namespace memsyn {

using TargetFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct DecoderSolution {
    Eigen::MatrixXd decoders;      ///< d_out x n
    double condition_estimate = 0; ///< of the regularized normal equations
    bool pseudo_inverse = false;   ///< true when the SVD fallback was taken
};

/// Steady-state rate responses of every neuron at every evaluation point.
/// Rows are points, columns neurons.
Eigen::MatrixXd rate_activities(const Ensemble& ens, const Eigen::MatrixXd& eval_points);

/// Ridge-regressed linear readout mapping activities to target values:
/// minimizes ||A D^T - F||^2 + m * (regularization * max(A))^2 ||D||^2 over
/// the given evaluation points. Falls back to an SVD pseudo-inverse when the
/// normal equations are ill-conditioned, flagging it in the result.
DecoderSolution solve_decoders(const Ensemble& ens, const TargetFn& target, int d_out,
                               const Eigen::MatrixXd& eval_points, double regularization);

}  // namespace memsyn
