/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "memsyn/rng.hpp"

namespace memsyn {

/// Power-law resistance model R(n) = r0 + r1 * n^c for the number of
/// potentiating voltage pulses n applied to a device, with c < 0. r0 and
/// r0 + r1 are the minimum and maximum resistance.
struct DeviceParams {
    double r0 = 200.0;    ///< minimum resistance [ohm]
    double r1 = 2.3e8;    ///< resistance span [ohm]
    double c = -0.146;    ///< fitted exponent, negative

    void validate() const;  // throws ConfigError
};

/// Device-to-device variation applied when instantiating devices: each model
/// parameter gets independent multiplicative Gaussian noise, and the initial
/// resistance is drawn uniformly around a high-resistance starting point.
struct NoiseSpec {
    double param_noise_fraction = 0.15;  ///< sigma relative to nominal value
    double init_center = 1e8;            ///< center of initial resistance [ohm]
    double init_spread_fraction = 0.15;  ///< half-width relative to center

    void validate(const DeviceParams& nominal) const;
};

/// One physical device: its own perturbed parameter copy plus current state.
struct MemristorDevice {
    DeviceParams params;
    double resistance = 0.0;  ///< clamped to [r0, r0 + r1]
};

/// Two devices whose normalized conductance difference, scaled by gamma,
/// realizes one signed synaptic weight.
struct DifferentialPair {
    MemristorDevice plus;
    MemristorDevice minus;
    double gamma = 1e3;
};

/// Forward power law: resistance after n pulses under `params`.
double pulse_resistance(const DeviceParams& params, double pulse_count);

/// Draw a device: parameters perturbed as nominal * (1 + N(0, sigma)), the
/// exponent re-drawn until negative (bounded attempts, then fault), and the
/// initial resistance uniform in [center*(1-s), center*(1+s)], clamped to the
/// device's own bounds.
MemristorDevice make_device(const DeviceParams& nominal, const NoiseSpec& noise, Rng& rng);

/// Effective (real-valued) pulse count recovered from the current resistance
/// by inverting the power law; the numerator is floored to keep the
/// resistance = r0 end finite.
double pulse_count_from_resistance(const MemristorDevice& device);

/// One potentiating pulse: re-derive the effective pulse count, advance it by
/// one, and move the resistance down the power law (clamped to its bounds).
void apply_pulse(MemristorDevice& device);

/// Reciprocal of the current resistance.
double conductance(const MemristorDevice& device);

/// Normalized conductance in [0, 1]: (G - G_min) / (G_max - G_min) with the
/// device's own perturbed bounds G_min = 1/(r0+r1), G_max = 1/r0.
double normalized_conductance(const MemristorDevice& device);

/// Signed weight of a pair: gamma * (norm_conductance(plus) - norm_conductance(minus)),
/// bounded in [-gamma, +gamma].
double pair_weight(const DifferentialPair& pair);

}  // namespace memsyn
