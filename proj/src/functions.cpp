/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "memsyn/functions.hpp"

#include <cmath>
#include <numbers>

#include "memsyn/errors.hpp"

namespace memsyn {

BenchFunction BenchFunction::from_id(BenchFunctionId id) {
    switch (id) {
        case BenchFunctionId::mult2:     return {id, 2, 1};
        case BenchFunctionId::mult_sum4: return {id, 4, 1};
        case BenchFunctionId::pairwise3: return {id, 3, 3};
        case BenchFunctionId::conv2:     return {id, 4, 2};
        case BenchFunctionId::conv3:     return {id, 6, 3};
        case BenchFunctionId::channel1:  return {id, 1, 1};
    }
    throw ConfigError("BenchFunction: unknown id");
}

std::optional<BenchFunctionId> BenchFunction::parse(std::string_view name) {
    if (name == "mult2") return BenchFunctionId::mult2;
    if (name == "mult-sum4") return BenchFunctionId::mult_sum4;
    if (name == "pairwise3") return BenchFunctionId::pairwise3;
    if (name == "conv2") return BenchFunctionId::conv2;
    if (name == "conv3") return BenchFunctionId::conv3;
    if (name == "channel1") return BenchFunctionId::channel1;
    return std::nullopt;
}

const char* BenchFunction::name() const {
    switch (id) {
        case BenchFunctionId::mult2:     return "mult2";
        case BenchFunctionId::mult_sum4: return "mult-sum4";
        case BenchFunctionId::pairwise3: return "pairwise3";
        case BenchFunctionId::conv2:     return "conv2";
        case BenchFunctionId::conv3:     return "conv3";
        case BenchFunctionId::channel1:  return "channel1";
    }
    return "?";
}

Eigen::VectorXd BenchFunction::evaluate(const Eigen::VectorXd& x) const {
    if (x.size() != d_in) {
        throw ConfigError(std::string("BenchFunction::evaluate: expected ") +
                          std::to_string(d_in) + " inputs, got " + std::to_string(x.size()));
    }
    Eigen::VectorXd out(d_out);
    switch (id) {
        case BenchFunctionId::mult2:
            out[0] = x[0] * x[1];
            break;
        case BenchFunctionId::mult_sum4:
            out[0] = x[0] * x[1] + x[2] * x[3];
            break;
        case BenchFunctionId::pairwise3:
            out[0] = x[0] * x[1];
            out[1] = x[0] * x[2];
            out[2] = x[1] * x[2];
            break;
        case BenchFunctionId::conv2:
        case BenchFunctionId::conv3: {
            const int d = operand_dim();
            out = circular_convolution_direct(x.head(d), x.tail(d));
            break;
        }
        case BenchFunctionId::channel1:
            out[0] = x[0];
            break;
    }
    return out;
}

Eigen::VectorXd circular_convolution_direct(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    if (u.size() != v.size()) throw ConfigError("circular_convolution_direct: length mismatch");
    const Eigen::Index d = u.size();
    Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
    for (Eigen::Index k = 0; k < d; ++k) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            acc += u[i] * v[((k - i) % d + d) % d];
        }
        w[k] = acc;
    }
    return w;
}

ConvolutionPlan ConvolutionPlan::make(int operand_dim) {
    if (operand_dim < 1) throw ConfigError("ConvolutionPlan: operand_dim must be >= 1");
    const int d = operand_dim;
    const double two_pi = 2.0 * std::numbers::pi;

    // Count products: one per purely real spectral line, four per complex one.
    std::vector<int> freqs;
    int n_products = 0;
    for (int k = 0; k <= d / 2; ++k) {
        const bool real_line = (k == 0) || (d % 2 == 0 && k == d / 2);
        n_products += real_line ? 1 : 4;
        freqs.push_back(k);
    }

    ConvolutionPlan plan;
    plan.operand_dim = d;
    plan.n_products = n_products;
    plan.operand_a.setZero(n_products, d);
    plan.operand_b.setZero(n_products, d);
    plan.recombine.setZero(d, n_products);

    Eigen::VectorXd cos_row(d), sin_row(d);
    int q = 0;
    for (const int k : freqs) {
        for (int j = 0; j < d; ++j) {
            cos_row[j] = std::cos(two_pi * k * j / d);
            sin_row[j] = -std::sin(two_pi * k * j / d);  // imaginary part of e^{-2πi jk/d}
        }
        const bool real_line = (k == 0) || (d % 2 == 0 && k == d / 2);
        // Inverse-transform column for this frequency; conjugate-symmetric
        // lines appear twice in the full spectrum.
        const double mul = real_line ? 1.0 / d : 2.0 / d;
        Eigen::VectorXd icos(d), isin(d);
        for (int j = 0; j < d; ++j) {
            icos[j] = mul * std::cos(two_pi * k * j / d);
            isin[j] = mul * std::sin(two_pi * k * j / d);
        }
        if (real_line) {
            plan.operand_a.row(q) = cos_row;
            plan.operand_b.row(q) = cos_row;
            plan.recombine.col(q) = icos;  // W_k = Ur * Vr
            ++q;
        } else {
            // W_k = (Ur Vr - Ui Vi) + i (Ur Vi + Ui Vr);
            // w_j += mul * (Re W_k cos - Im W_k sin).
            plan.operand_a.row(q) = cos_row;
            plan.operand_b.row(q) = cos_row;
            plan.recombine.col(q) = icos;  // + Ur Vr cos
            ++q;
            plan.operand_a.row(q) = sin_row;
            plan.operand_b.row(q) = sin_row;
            plan.recombine.col(q) = -icos;  // - Ui Vi cos
            ++q;
            plan.operand_a.row(q) = cos_row;
            plan.operand_b.row(q) = sin_row;
            plan.recombine.col(q) = -isin;  // - Ur Vi sin
            ++q;
            plan.operand_a.row(q) = sin_row;
            plan.operand_b.row(q) = cos_row;
            plan.recombine.col(q) = -isin;  // - Ui Vr sin
            ++q;
        }
    }
    return plan;
}

Eigen::VectorXd ConvolutionPlan::apply_linear(const Eigen::VectorXd& u,
                                              const Eigen::VectorXd& v) const {
    if (u.size() != operand_dim || v.size() != operand_dim) {
        throw ConfigError("ConvolutionPlan::apply_linear: operand length mismatch");
    }
    const Eigen::VectorXd a = operand_a * u;
    const Eigen::VectorXd b = operand_b * v;
    return recombine * a.cwiseProduct(b);
}

double ConvolutionPlan::input_scale() const {
    return 1.0 / std::sqrt(static_cast<double>(operand_dim));
}

double ConvolutionPlan::output_gain() const { return static_cast<double>(operand_dim); }

}  // namespace memsyn
