/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <Eigen/Dense>

namespace memsyn {

/// One step of a discrete first-order low-pass:
///   state <- state + (1 - exp(-dt/tau)) * (input - state)
/// Returns a reference to the updated state.
Eigen::VectorXd& lowpass_step(Eigen::VectorXd& state, const Eigen::VectorXd& input,
                              double tau, double dt);

/// Stateful wrapper used by connections and probes; caches the decay factor
/// for a fixed dt.
class Lowpass {
public:
    Lowpass() = default;
    Lowpass(int dim, double tau, double dt);

    const Eigen::VectorXd& step(const Eigen::VectorXd& input);
    const Eigen::VectorXd& value() const { return state_; }
    double tau() const { return tau_; }
    void reset() { state_.setZero(); }

private:
    double tau_ = 0.0;
    double alpha_ = 1.0;  // 1 - exp(-dt/tau)
    Eigen::VectorXd state_;
};

}  // namespace memsyn
