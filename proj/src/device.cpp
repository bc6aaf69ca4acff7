/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "memsyn/device.hpp"

#include <algorithm>
#include <cmath>

#include "memsyn/errors.hpp"

namespace memsyn {

namespace {
// Floor on (R - r0) inside the inversion, relative to the span; keeps the
// resistance = r0 endpoint finite. Unreachable at modeled pulse counts.
constexpr double kResistanceFloorFraction = 1e-12;
constexpr int kMaxExponentRedraws = 100;
}  // namespace

void DeviceParams::validate() const {
    if (!(r0 > 0.0)) throw ConfigError("DeviceParams: r0 must be > 0");
    if (!(r1 > 0.0)) throw ConfigError("DeviceParams: r1 must be > 0");
    if (!(c < 0.0)) throw ConfigError("DeviceParams: c must be < 0");
}

void NoiseSpec::validate(const DeviceParams& nominal) const {
    nominal.validate();
    if (param_noise_fraction < 0.0 || init_spread_fraction < 0.0) {
        throw ConfigError("NoiseSpec: noise fractions must be >= 0");
    }
    const double lo = init_center * (1.0 - init_spread_fraction);
    const double hi = init_center * (1.0 + init_spread_fraction);
    if (lo < nominal.r0 || hi > nominal.r0 + nominal.r1) {
        throw ConfigError("NoiseSpec: initial resistance range must lie within [r0, r0+r1]");
    }
}

double pulse_resistance(const DeviceParams& params, double pulse_count) {
    return params.r0 + params.r1 * std::exp(std::log(pulse_count) * params.c);
}

MemristorDevice make_device(const DeviceParams& nominal, const NoiseSpec& noise, Rng& rng) {
    noise.validate(nominal);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double sigma = noise.param_noise_fraction;

    MemristorDevice dev;
    dev.params.r0 = nominal.r0 * (1.0 + sigma * gauss(rng));
    dev.params.r1 = nominal.r1 * (1.0 + sigma * gauss(rng));
    // A non-negative exponent inverts the device physics; re-draw.
    double c = 0.0;
    int attempts = 0;
    do {
        if (++attempts > kMaxExponentRedraws) {
            throw SimulationFault("make_device: exponent re-draw exhausted after 100 attempts");
        }
        c = nominal.c * (1.0 + sigma * gauss(rng));
    } while (!(c < 0.0));
    dev.params.c = c;
    // Keep r0/r1 physical even under extreme draws.
    dev.params.r0 = std::max(dev.params.r0, 1e-6 * nominal.r0);
    dev.params.r1 = std::max(dev.params.r1, 1e-6 * nominal.r1);

    const double spread = noise.init_spread_fraction;
    std::uniform_real_distribution<double> init(noise.init_center * (1.0 - spread),
                                                noise.init_center * (1.0 + spread));
    const double r = (spread > 0.0) ? init(rng) : noise.init_center;
    dev.resistance = std::clamp(r, dev.params.r0, dev.params.r0 + dev.params.r1);
    return dev;
}

double pulse_count_from_resistance(const MemristorDevice& device) {
    const double floor = kResistanceFloorFraction * device.params.r1;
    const double x = std::max(device.resistance - device.params.r0, floor) / device.params.r1;
    return std::exp(std::log(x) / device.params.c);
}

void apply_pulse(MemristorDevice& device) {
    const double n = pulse_count_from_resistance(device);
    const double r = pulse_resistance(device.params, n + 1.0);
    device.resistance = std::clamp(r, device.params.r0, device.params.r0 + device.params.r1);
}

double conductance(const MemristorDevice& device) { return 1.0 / device.resistance; }

double normalized_conductance(const MemristorDevice& device) {
    const double g_min = 1.0 / (device.params.r0 + device.params.r1);
    const double g_max = 1.0 / device.params.r0;
    return (conductance(device) - g_min) / (g_max - g_min);
}

double pair_weight(const DifferentialPair& pair) {
    return pair.gamma * (normalized_conductance(pair.plus) - normalized_conductance(pair.minus));
}

}  // namespace memsyn
