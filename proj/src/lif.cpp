/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "memsyn/lif.hpp"

#include <cmath>
#include <string>

#include "memsyn/errors.hpp"

namespace memsyn {

void LifParams::validate() const {
    if (!(tau_rc > 0.0)) throw ConfigError("LifParams: tau_rc must be > 0");
    if (!(tau_ref >= 0.0)) throw ConfigError("LifParams: tau_ref must be >= 0");
    if (!(dt > 0.0)) throw ConfigError("LifParams: dt must be > 0");
    if (!(dt < tau_rc)) throw ConfigError("LifParams: dt must be < tau_rc");
    if (!(v_threshold > 0.0)) throw ConfigError("LifParams: v_threshold must be > 0");
}

double lif_rate(double current, const LifParams& lif) {
    const double j = current / lif.v_threshold;
    if (!(j > 1.0)) return 0.0;
    return 1.0 / (lif.tau_ref - lif.tau_rc * std::log1p(-1.0 / j));
}

double lif_current_for_rate(double rate, const LifParams& lif) {
    if (!(rate > 0.0) || !(rate * lif.tau_ref < 1.0)) {
        throw ConfigError("lif_current_for_rate: rate must lie in (0, 1/tau_ref), got " +
                          std::to_string(rate));
    }
    const double j = 1.0 / (1.0 - std::exp((lif.tau_ref - 1.0 / rate) / lif.tau_rc));
    return j * lif.v_threshold;
}

GainBias solve_gains_biases(const Eigen::VectorXd& max_rates,
                            const Eigen::VectorXd& intercepts,
                            const LifParams& lif) {
    if (max_rates.size() != intercepts.size()) {
        throw ConfigError("solve_gains_biases: size mismatch");
    }
    const auto n = max_rates.size();
    GainBias out;
    out.gains.resize(n);
    out.biases.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double intercept = intercepts[i];
        if (!(intercept > -1.0 - 1e-12) || !(intercept < 1.0)) {
            throw ConfigError("solve_gains_biases: intercept must lie in (-1, 1)");
        }
        const double j_max = lif_current_for_rate(max_rates[i], lif);
        // Two-point solve: current v_threshold at the intercept, j_max at 1.
        const double gain = (j_max - lif.v_threshold) / (1.0 - intercept);
        out.gains[i] = gain;
        out.biases[i] = lif.v_threshold - gain * intercept;
    }
    return out;
}

}  // namespace memsyn
