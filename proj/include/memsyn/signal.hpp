/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace memsyn {

/// Band-limited noise drive: per-dimension independent Gaussian white noise
/// pushed through a first-order low-pass at the cutoff frequency, then
/// normalized so the sample vectors have the requested RMS norm and never
/// leave the unit ball.
struct NoiseSignalSpec {
    int dimensions = 1;
    double cutoff_hz = 5.0;
    double duration_s = 1.0;
    double rms = 0.7;          ///< target RMS of the d-dimensional sample norm
    std::uint64_t seed = 0;
    double dt = 0.001;

    void validate() const;
};

/// Deterministic given the seed; rows are timesteps, columns dimensions.
Eigen::MatrixXd generate_input(const NoiseSignalSpec& spec);

}  // namespace memsyn
