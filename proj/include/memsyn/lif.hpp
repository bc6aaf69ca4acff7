/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <Eigen/Dense>

namespace memsyn {

/// Leaky integrate-and-fire parameters. Voltages are normalized so the firing
/// threshold sits at 1.
struct LifParams {
    double tau_rc = 0.02;       ///< membrane time constant [s]
    double tau_ref = 0.002;     ///< refractory period [s]
    double v_threshold = 1.0;   ///< normalized firing threshold
    double dt = 0.001;          ///< simulation timestep [s]

    void validate() const;  // throws ConfigError
};

/// Steady-state LIF response to a constant input current J.
/// Returns 0 for J <= threshold, else 1 / (tau_ref - tau_rc * ln(1 - 1/J)) in Hz.
double lif_rate(double current, const LifParams& lif);

/// Inverse of lif_rate: the constant current that produces `rate` Hz.
/// Requires rate in (0, 1/tau_ref).
double lif_current_for_rate(double rate, const LifParams& lif);

struct GainBias {
    Eigen::VectorXd gains;
    Eigen::VectorXd biases;
};

/// Per-neuron (gain, bias) so that firing starts exactly at the intercept
/// (gain * intercept + bias = threshold) and reaches max_rate at the far end
/// of the represented range (lif_rate(gain + bias) = max_rate).
/// Rejects max rates at or above the 1/tau_ref ceiling.
GainBias solve_gains_biases(const Eigen::VectorXd& max_rates,
                            const Eigen::VectorXd& intercepts,
                            const LifParams& lif);

}  // namespace memsyn
