/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "memsyn/ensemble.hpp"

#include <cmath>
#include <string>

#include "memsyn/errors.hpp"

namespace memsyn {

Ensemble Ensemble::build(int n_neurons, int dimensions, const LifParams& lif,
                         std::uint64_t seed) {
    if (n_neurons < 1 || dimensions < 1) {
        throw ConfigError("Ensemble::build: n_neurons and dimensions must be >= 1");
    }
    lif.validate();

    Ensemble ens;
    ens.n_neurons = n_neurons;
    ens.dimensions = dimensions;
    ens.lif = lif;

    Rng rng = make_rng(seed);
    ens.encoders = sample_hypersphere(n_neurons, dimensions, rng);

    std::uniform_real_distribution<double> rate_dist(200.0, 400.0);
    std::uniform_real_distribution<double> intercept_dist(-1.0, 1.0);
    Eigen::VectorXd max_rates(n_neurons), intercepts(n_neurons);
    for (int i = 0; i < n_neurons; ++i) max_rates[i] = rate_dist(rng);
    for (int i = 0; i < n_neurons; ++i) intercepts[i] = intercept_dist(rng);

    GainBias gb = solve_gains_biases(max_rates, intercepts, lif);
    ens.gains = std::move(gb.gains);
    ens.biases = std::move(gb.biases);
    ens.reset_state();
    return ens;
}

Eigen::VectorXd Ensemble::encode_current(const Eigen::VectorXd& value) const {
    return gains.cwiseProduct(encoders * value);
}

void Ensemble::reset_state() {
    voltage = Eigen::VectorXd::Zero(n_neurons);
    refractory = Eigen::VectorXd::Zero(n_neurons);
    spikes = Eigen::VectorXd::Zero(n_neurons);
}

const Eigen::VectorXd& lif_step(Ensemble& ens, const Eigen::VectorXd& input_current,
                                double dt) {
    const double tau_rc = ens.lif.tau_rc;
    const double tau_ref = ens.lif.tau_ref;
    const double v_th = ens.lif.v_threshold;
    const double spike_amp = 1.0 / dt;
    // Decay factor for a full, non-refractory step; the common case.
    const double full_alpha = -std::expm1(-dt / tau_rc);

    for (int i = 0; i < ens.n_neurons; ++i) {
        const double j = input_current[i] + ens.biases[i];
        if (!std::isfinite(j)) {
            throw SimulationFault("lif_step: non-finite input current at neuron " +
                                  std::to_string(i));
        }
        double ref = ens.refractory[i];
        double v = ens.voltage[i];

        // Integrate only over the non-refractory part of the step.
        double alpha;
        if (ref <= 0.0) {
            alpha = full_alpha;
        } else {
            const double delta = std::clamp(dt - ref, 0.0, dt);
            alpha = -std::expm1(-delta / tau_rc);
        }
        ref = std::max(ref - dt, 0.0);
        v += alpha * (j - v);

        if (v > v_th) {
            // Time elapsed since the threshold crossing, from the analytic
            // trajectory; carried into the refractory hold so inter-spike
            // intervals are not quantized to dt.
            const double since = -tau_rc * std::log1p(-(v - v_th) / (j - v_th));
            ref = std::clamp(tau_ref - since, 0.0, tau_ref);
            v = 0.0;
            ens.spikes[i] = spike_amp;
        } else {
            ens.spikes[i] = 0.0;
        }

        ens.voltage[i] = std::clamp(v, 0.0, v_th);
        ens.refractory[i] = ref;
    }
    return ens.spikes;
}

}  // namespace memsyn
