/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "memsyn/lif.hpp"
#include "memsyn/rng.hpp"

namespace memsyn {

/// A population of LIF neurons jointly representing a d-dimensional value.
///
/// Encoders are unit-norm preferred directions; the input current of neuron j
/// for a represented value x is gain_j * (encoder_j . x) + bias_j.
struct Ensemble {
    int n_neurons = 0;
    int dimensions = 0;
    LifParams lif;

    Eigen::MatrixXd encoders;  // n x d, unit-norm rows
    Eigen::VectorXd gains;     // > 0
    Eigen::VectorXd biases;

    // Dynamic state.
    Eigen::VectorXd voltage;     // in [0, v_threshold]
    Eigen::VectorXd refractory;  // remaining refractory time, in [0, tau_ref]
    Eigen::VectorXd spikes;      // last step's output, amplitude 1/dt (unit area)

    /// Default construction: encoders uniform on the unit hypersphere,
    /// max rates U[200, 400) Hz, intercepts U[-1, 1).
    static Ensemble build(int n_neurons, int dimensions, const LifParams& lif,
                          std::uint64_t seed);

    /// Encoded current contribution of a represented value (no bias).
    Eigen::VectorXd encode_current(const Eigen::VectorXd& value) const;

    void reset_state();
};

/// Advance the population one timestep under `input_current` (bias is added
/// internally). Voltages decay exponentially toward the drive; threshold
/// crossings emit a spike of area 1 (amplitude 1/dt), reset the voltage and
/// start the refractory hold. Spike timing within the step is carried into
/// the refractory bookkeeping so long-run rates converge to lif_rate.
/// Throws SimulationFault on non-finite input current.
const Eigen::VectorXd& lif_step(Ensemble& ens, const Eigen::VectorXd& input_current,
                                double dt);

}  // namespace memsyn
