/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "memsyn/signal.hpp"

#include <cmath>
#include <numbers>

#include "memsyn/errors.hpp"
#include "memsyn/rng.hpp"

namespace memsyn {

void NoiseSignalSpec::validate() const {
    if (dimensions < 1) throw ConfigError("NoiseSignalSpec: dimensions must be >= 1");
    if (!(cutoff_hz > 0.0)) throw ConfigError("NoiseSignalSpec: cutoff must be > 0");
    if (!(duration_s > 0.0)) throw ConfigError("NoiseSignalSpec: duration must be > 0");
    if (!(rms > 0.0) || rms > 1.0) throw ConfigError("NoiseSignalSpec: rms must lie in (0, 1]");
    if (!(dt > 0.0)) throw ConfigError("NoiseSignalSpec: dt must be > 0");
}

Eigen::MatrixXd generate_input(const NoiseSignalSpec& spec) {
    spec.validate();
    const auto steps = static_cast<Eigen::Index>(std::llround(spec.duration_s / spec.dt));
    const int d = spec.dimensions;
    const double tau = 1.0 / (2.0 * std::numbers::pi * spec.cutoff_hz);
    const double alpha = -std::expm1(-spec.dt / tau);
    // Let the filter forget its zero start before the usable window.
    const auto warmup = static_cast<Eigen::Index>(std::llround(5.0 * tau / spec.dt));

    Rng rng = make_rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Eigen::MatrixXd samples(steps, d);
    Eigen::VectorXd state = Eigen::VectorXd::Zero(d);
    for (Eigen::Index t = -warmup; t < steps; ++t) {
        for (int j = 0; j < d; ++j) {
            state[j] += alpha * (gauss(rng) - state[j]);
        }
        if (t >= 0) samples.row(t) = state.transpose();
    }

    const double mean_sq = samples.array().square().rowwise().sum().mean();
    if (mean_sq > 0.0) {
        samples *= spec.rms / std::sqrt(mean_sq);
    }
    // Clamp the rare excursions so every sample stays representable.
    for (Eigen::Index t = 0; t < steps; ++t) {
        const double norm = samples.row(t).norm();
        if (norm > 1.0) samples.row(t) /= norm;
    }
    return samples;
}

}  // namespace memsyn
