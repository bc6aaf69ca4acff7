/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "memsyn/ensemble.hpp"
#include "memsyn/filter.hpp"

namespace memsyn {

/// A weighted, synaptically filtered link between network elements.
///
/// Exactly one weight representation is active:
///  - Factored: a decoder/transform matrix maps source output to a decoded
///    value, which is low-pass filtered; encoding into a target ensemble
///    (encoders and gains) happens at application time.
///  - Full: an omega matrix maps filtered source activity directly to target
///    input current. Gains are already folded into omega, so the gain is
///    applied exactly once on either path.
///
/// Sources may be spiking populations or value nodes; value-node connections
/// may apply a function to the value before the linear map.
class Connection {
public:
    enum class Kind { Factored, Full };

    /// Factored connection: map (d_out x source_dim), synapse tau.
    static Connection factored(Eigen::MatrixXd map, double tau, double dt,
                               std::function<Eigen::VectorXd(const Eigen::VectorXd&)> fn = {});

    /// Full-weight connection; `weights` is n_target x n_source and is read
    /// through the reference each step (learning rules mutate it in place).
    static Connection full(const Eigen::MatrixXd& weights, double tau, double dt);

    /// Advance one step: filter and map the source output. For Factored the
    /// result is the filtered decoded value; for Full it is the target
    /// current contribution W * filtered_activity.
    const Eigen::VectorXd& step(const Eigen::VectorXd& source_output);

    /// Filtered presynaptic activity (Full connections only); this is the
    /// a_i seen by learning rules.
    const Eigen::VectorXd& filtered_activity() const { return filter_.value(); }

    const Eigen::VectorXd& output() const { return output_; }
    Kind kind() const { return kind_; }
    Eigen::Index source_size() const { return source_size_; }
    void reset();

private:
    Kind kind_ = Kind::Factored;
    Eigen::MatrixXd map_;                  // factored decoders/transform
    const Eigen::MatrixXd* weights_ = nullptr;  // full omega, externally owned
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> fn_;
    Lowpass filter_;   // factored: filters decoded value; full: filters activity
    Eigen::VectorXd output_;
    Eigen::Index source_size_ = 0;
};

}  // namespace memsyn
