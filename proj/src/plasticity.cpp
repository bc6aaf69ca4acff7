/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "memsyn/plasticity.hpp"

#include <cmath>
#include <string>

#include "memsyn/errors.hpp"

namespace memsyn {

namespace {
constexpr double kResistanceFloorFraction = 1e-12;  // matches device.cpp
}

PesState PesState::init(int n_post, int n_pre, double kappa, double w0, Rng& rng) {
    if (n_post < 1 || n_pre < 1) throw ConfigError("PesState: sizes must be >= 1");
    if (!(kappa > 0.0)) throw ConfigError("PesState: kappa must be > 0");
    if (w0 < 0.0) throw ConfigError("PesState: w0 must be >= 0");
    PesState st;
    st.kappa = kappa;
    st.weights.resize(n_post, n_pre);
    std::uniform_real_distribution<double> unif(-w0, w0);
    for (int j = 0; j < n_post; ++j) {
        for (int i = 0; i < n_pre; ++i) st.weights(j, i) = w0 > 0.0 ? unif(rng) : 0.0;
    }
    return st;
}

void pes_step(PesState& state, const Eigen::VectorXd& pre_activity,
              const Eigen::VectorXd& error, const Eigen::MatrixXd& post_encoders,
              const Eigen::VectorXd& post_gains, double dt) {
    if (!state.enabled) return;
    if (!error.allFinite()) {
        throw SimulationFault("pes_step: non-finite error vector");
    }
    if (post_encoders.rows() != state.weights.rows() ||
        pre_activity.size() != state.weights.cols() ||
        post_encoders.cols() != error.size() ||
        post_gains.size() != state.weights.rows()) {
        throw ConfigError("pes_step: dimension mismatch");
    }
    // local_j = gain_j * (encoder_j . error)
    const Eigen::VectorXd local = post_gains.cwiseProduct(post_encoders * error);
    state.weights.noalias() -= (state.kappa * dt) * local * pre_activity.transpose();
}

Eigen::MatrixXd& mpes_local_error(const Eigen::VectorXd& pre_activity,
                                  const Eigen::VectorXd& error,
                                  const Eigen::MatrixXd& post_encoders,
                                  Eigen::MatrixXd& out) {
    if (post_encoders.cols() != error.size()) {
        throw ConfigError("mpes_local_error: dimension mismatch");
    }
    const Eigen::VectorXd local = post_encoders * error;
    out.resize(post_encoders.rows(), pre_activity.size());
    out.noalias() = local * pre_activity.transpose();
    return out;
}

void MpesState::Bank::assign(Eigen::Index k, const MemristorDevice& dev) {
    r0[k] = dev.params.r0;
    r1[k] = dev.params.r1;
    c[k] = dev.params.c;
    inv_c[k] = 1.0 / dev.params.c;
    resistance[k] = dev.resistance;
    const double g0 = 1.0 / (dev.params.r0 + dev.params.r1);
    const double g1 = 1.0 / dev.params.r0;
    g_min[k] = g0;
    inv_g_span[k] = 1.0 / (g1 - g0);
    norm[k] = (1.0 / dev.resistance - g0) * inv_g_span[k];
}

MemristorDevice MpesState::Bank::device_at(Eigen::Index k) const {
    MemristorDevice dev;
    dev.params.r0 = r0[k];
    dev.params.r1 = r1[k];
    dev.params.c = c[k];
    dev.resistance = resistance[k];
    return dev;
}

void MpesState::Bank::pulse_batch(const std::vector<Eigen::Index>& idx) {
    const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
    if (m == 0) return;
    // Gather into contiguous scratch so the transcendentals vectorize.
    Eigen::ArrayXd x(m), invc(m), cc(m), rr0(m), rr1(m);
    for (Eigen::Index t = 0; t < m; ++t) {
        const Eigen::Index k = idx[static_cast<std::size_t>(t)];
        const double floor = kResistanceFloorFraction * r1[k];
        x[t] = std::max(resistance[k] - r0[k], floor) / r1[k];
        invc[t] = inv_c[k];
        cc[t] = c[k];
        rr0[t] = r0[k];
        rr1[t] = r1[k];
    }
    // n = x^(1/c); R' = r0 + r1 * (n + 1)^c, evaluated through exp/log.
    const Eigen::ArrayXd n = (x.log() * invc).exp();
    Eigen::ArrayXd r_new = rr0 + rr1 * ((n + 1.0).log() * cc).exp();
    r_new = r_new.min(rr0 + rr1).max(rr0);
    for (Eigen::Index t = 0; t < m; ++t) {
        const Eigen::Index k = idx[static_cast<std::size_t>(t)];
        resistance[k] = r_new[t];
        norm[k] = (1.0 / r_new[t] - g_min[k]) * inv_g_span[k];
    }
}

MpesState MpesState::init(int n_post, int n_pre, double threshold, double gamma,
                          const DeviceParams& nominal, const NoiseSpec& noise, Rng& rng) {
    if (n_post < 1 || n_pre < 1) throw ConfigError("MpesState: sizes must be >= 1");
    if (threshold < 0.0) throw ConfigError("MpesState: threshold must be >= 0");
    if (!(gamma > 0.0)) throw ConfigError("MpesState: gamma must be > 0");

    MpesState st;
    st.n_post_ = n_post;
    st.n_pre_ = n_pre;
    st.threshold_ = threshold;
    st.gamma_ = gamma;
    const Eigen::Index total = static_cast<Eigen::Index>(n_post) * n_pre;
    for (Bank* bank : {&st.plus_, &st.minus_}) {
        bank->r0.resize(total);
        bank->r1.resize(total);
        bank->c.resize(total);
        bank->inv_c.resize(total);
        bank->resistance.resize(total);
        bank->g_min.resize(total);
        bank->inv_g_span.resize(total);
        bank->norm.resize(total);
    }
    for (Eigen::Index k = 0; k < total; ++k) {
        st.plus_.assign(k, make_device(nominal, noise, rng));
        st.minus_.assign(k, make_device(nominal, noise, rng));
    }
    st.weights_.resize(n_post, n_pre);
    for (Eigen::Index k = 0; k < total; ++k) st.refresh_weight(k);
    return st;
}

void MpesState::set_threshold(double theta) {
    if (theta < 0.0) throw ConfigError("MpesState: threshold must be >= 0");
    threshold_ = theta;
}

void MpesState::refresh_weight(Eigen::Index k) {
    // weights_ is column-major; banks are row-major over (post, pre).
    const Eigen::Index j = k / n_pre_;
    const Eigen::Index i = k % n_pre_;
    weights_(j, i) = gamma_ * (plus_.norm[k] - minus_.norm[k]);
}

DifferentialPair MpesState::pair_at(int j, int i) const {
    const Eigen::Index k = static_cast<Eigen::Index>(j) * n_pre_ + i;
    DifferentialPair pair;
    pair.plus = plus_.device_at(k);
    pair.minus = minus_.device_at(k);
    pair.gamma = gamma_;
    return pair;
}

void MpesState::set_pair(int j, int i, const DifferentialPair& pair) {
    const Eigen::Index k = static_cast<Eigen::Index>(j) * n_pre_ + i;
    plus_.assign(k, pair.plus);
    minus_.assign(k, pair.minus);
    refresh_weight(k);
}

double MpesState::saturated_fraction() const {
    const Eigen::Index total = plus_.resistance.size();
    Eigen::Index saturated = 0;
    for (const Bank* bank : {&plus_, &minus_}) {
        for (Eigen::Index k = 0; k < total; ++k) {
            const double floor = kResistanceFloorFraction * bank->r1[k];
            if (bank->resistance[k] - bank->r0[k] <= floor) ++saturated;
        }
    }
    return static_cast<double>(saturated) / static_cast<double>(2 * total);
}

std::int64_t mpes_step(MpesState& state, const Eigen::MatrixXd& local_error,
                       double sign_convention) {
    if (!state.enabled) return 0;
    if (local_error.rows() != state.n_post_ || local_error.cols() != state.n_pre_) {
        throw ConfigError("mpes_step: local error shape mismatch");
    }
    const double theta = state.threshold_;
    state.plus_idx_.clear();
    state.minus_idx_.clear();

    for (Eigen::Index j = 0; j < state.n_post_; ++j) {
        const Eigen::Index row_base = j * state.n_pre_;
        for (Eigen::Index i = 0; i < state.n_pre_; ++i) {
            const double v = local_error(j, i);
            if (v == 0.0 || std::abs(v) < theta) continue;
            if (sign_convention * v > 0.0) {
                state.plus_idx_.push_back(row_base + i);
            } else {
                state.minus_idx_.push_back(row_base + i);
            }
        }
    }

    state.plus_.pulse_batch(state.plus_idx_);
    state.minus_.pulse_batch(state.minus_idx_);
    for (const Eigen::Index k : state.plus_idx_) state.refresh_weight(k);
    for (const Eigen::Index k : state.minus_idx_) state.refresh_weight(k);

    const std::int64_t pulses =
        static_cast<std::int64_t>(state.plus_idx_.size() + state.minus_idx_.size());
    state.total_pulses_ += pulses;
    return pulses;
}

}  // namespace memsyn
