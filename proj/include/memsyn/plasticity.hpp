/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "memsyn/device.hpp"
#include "memsyn/rng.hpp"

namespace memsyn {

/// Real-valued error-driven learning on a full weight matrix:
///   w_ij <- w_ij - kappa * dt * gain_j * (encoder_j . error) * a_i
/// with the error measured as (represented - target), so the update descends
/// the squared-error gradient of the closed loop.
struct PesState {
    double kappa = 1e-4;     ///< learning rate
    bool enabled = true;
    Eigen::MatrixXd weights; ///< n_post x n_pre, gains folded in

    /// Weights i.i.d. uniform in [-w0, w0].
    static PesState init(int n_post, int n_pre, double kappa, double w0, Rng& rng);
};

/// One learning step. `pre_activity` is the filtered presynaptic activity in
/// Hz; `error` the decoded global error vector. No-op when disabled.
/// Throws SimulationFault on a non-finite error vector.
void pes_step(PesState& state, const Eigen::VectorXd& pre_activity,
              const Eigen::VectorXd& error, const Eigen::MatrixXd& post_encoders,
              const Eigen::VectorXd& post_gains, double dt);

/// Local error matrix V_ij = (encoder_j . error) * a_i; entry (j, i) measures
/// how much presynaptic neuron i drives postsynaptic neuron j's contribution
/// to the global error. Written into `out` (resized as needed).
Eigen::MatrixXd& mpes_local_error(const Eigen::VectorXd& pre_activity,
                                  const Eigen::VectorXd& error,
                                  const Eigen::MatrixXd& post_encoders,
                                  Eigen::MatrixXd& out);

/// Discretized PES acting on one differential memristor pair per synapse.
///
/// Device state is held in structure-of-arrays banks (one entry per synapse,
/// row-major n_post x n_pre) so that the per-step pulse updates can be
/// applied in batch. Entries follow exactly the scalar device operations in
/// device.hpp; `pair_at` reconstructs the scalar view of one synapse.
class MpesState {
public:
    /// Devices drawn via make_device in row-major (post, pre) order, plus
    /// device first, from `rng`.
    static MpesState init(int n_post, int n_pre, double threshold, double gamma,
                          const DeviceParams& nominal, const NoiseSpec& noise, Rng& rng);

    int n_post() const { return n_post_; }
    int n_pre() const { return n_pre_; }
    double threshold() const { return threshold_; }
    void set_threshold(double theta);
    double gamma() const { return gamma_; }
    bool enabled = true;

    /// Realized weight matrix (gamma-scaled normalized conductance
    /// differences), kept in sync with the device banks.
    const Eigen::MatrixXd& weights() const { return weights_; }

    /// Scalar view of the pair backing synapse (j, i).
    DifferentialPair pair_at(int j, int i) const;

    /// Replace one pair (test/inspection path); refreshes the cached weight.
    void set_pair(int j, int i, const DifferentialPair& pair);

    std::int64_t total_pulses() const { return total_pulses_; }

    /// Fraction of devices whose resistance sits at the lower bound floor.
    double saturated_fraction() const;

    friend std::int64_t mpes_step(MpesState& state, const Eigen::MatrixXd& local_error,
                                  double sign_convention);

private:
    struct Bank {
        // Per-device perturbed parameters and state, flattened row-major.
        Eigen::ArrayXd r0, r1, c, inv_c, resistance;
        Eigen::ArrayXd g_min, inv_g_span;  // conductance bounds, precomputed
        Eigen::ArrayXd norm;               // cached normalized conductance

        void assign(Eigen::Index k, const MemristorDevice& dev);
        MemristorDevice device_at(Eigen::Index k) const;
        void pulse_batch(const std::vector<Eigen::Index>& idx);
    };

    void refresh_weight(Eigen::Index k);

    int n_post_ = 0, n_pre_ = 0;
    double threshold_ = 0.0;
    double gamma_ = 1e3;
    Bank plus_, minus_;
    Eigen::MatrixXd weights_;
    std::int64_t total_pulses_ = 0;
    // batch scratch
    std::vector<Eigen::Index> plus_idx_, minus_idx_;
};

/// One mPES step over the local error matrix V. Synapses with |V_ij| below
/// the threshold (or exactly zero) are skipped; every other synapse has
/// exactly one device of its pair pulsed: the one whose conductance increase
/// moves the weight in the direction of sign_convention * V_ij (positive
/// strengthens via the plus device, negative weakens via the minus device).
/// Returns the number of pulses issued. No-op when disabled.
std::int64_t mpes_step(MpesState& state, const Eigen::MatrixXd& local_error,
                       double sign_convention);

/// Entry-wise pair weights; the matrix consumed by full-weight connections.
inline const Eigen::MatrixXd& realized_weights(const MpesState& state) {
    return state.weights();
}

}  // namespace memsyn
