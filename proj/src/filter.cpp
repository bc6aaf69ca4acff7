/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "memsyn/filter.hpp"

#include <cmath>

#include "memsyn/errors.hpp"

namespace memsyn {

Eigen::VectorXd& lowpass_step(Eigen::VectorXd& state, const Eigen::VectorXd& input,
                              double tau, double dt) {
    if (!(tau > 0.0)) throw ConfigError("lowpass_step: tau must be > 0");
    const double alpha = -std::expm1(-dt / tau);
    state += alpha * (input - state);
    return state;
}

Lowpass::Lowpass(int dim, double tau, double dt) : tau_(tau) {
    if (!(tau > 0.0)) throw ConfigError("Lowpass: tau must be > 0");
    alpha_ = -std::expm1(-dt / tau);
    state_ = Eigen::VectorXd::Zero(dim);
}

const Eigen::VectorXd& Lowpass::step(const Eigen::VectorXd& input) {
    state_ += alpha_ * (input - state_);
    return state_;
}

}  // namespace memsyn
