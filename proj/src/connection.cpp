/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "memsyn/connection.hpp"

#include "memsyn/errors.hpp"

namespace memsyn {

Connection Connection::factored(Eigen::MatrixXd map, double tau, double dt,
                                std::function<Eigen::VectorXd(const Eigen::VectorXd&)> fn) {
    Connection c;
    c.kind_ = Kind::Factored;
    c.source_size_ = map.cols();
    c.map_ = std::move(map);
    c.fn_ = std::move(fn);
    c.filter_ = Lowpass(static_cast<int>(c.map_.rows()), tau, dt);
    c.output_ = Eigen::VectorXd::Zero(c.map_.rows());
    return c;
}

Connection Connection::full(const Eigen::MatrixXd& weights, double tau, double dt) {
    Connection c;
    c.kind_ = Kind::Full;
    c.source_size_ = weights.cols();
    c.weights_ = &weights;
    c.filter_ = Lowpass(static_cast<int>(weights.cols()), tau, dt);
    c.output_ = Eigen::VectorXd::Zero(weights.rows());
    return c;
}

const Eigen::VectorXd& Connection::step(const Eigen::VectorXd& source_output) {
    if (source_output.size() != source_size_) {
        throw SimulationFault("Connection::step: source size changed after construction");
    }
    if (kind_ == Kind::Factored) {
        if (fn_) {
            output_ = filter_.step(map_ * fn_(source_output));
        } else {
            output_ = filter_.step(map_ * source_output);
        }
    } else {
        output_.noalias() = (*weights_) * filter_.step(source_output);
    }
    return output_;
}

void Connection::reset() {
    filter_.reset();
    output_.setZero();
}

}  // namespace memsyn
