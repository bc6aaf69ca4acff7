/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace memsyn {

enum class BenchFunctionId {
    mult2,      ///< f(x1, x2) = x1 * x2
    mult_sum4,  ///< f(x1..x4) = x1*x2 + x3*x4
    pairwise3,  ///< f(x1..x3) = [x1*x2, x1*x3, x2*x3]
    conv2,      ///< f(x1..x4) = [x1, x2] (*) [x3, x4]   (circular convolution)
    conv3,      ///< f(x1..x6) = [x1, x2, x3] (*) [x4, x5, x6]
    channel1,   ///< f(x) = x; 1-D communication channel used for validation
};

struct BenchFunction {
    BenchFunctionId id;
    int d_in = 0;
    int d_out = 0;

    static BenchFunction from_id(BenchFunctionId id);
    static std::optional<BenchFunctionId> parse(std::string_view name);

    /// Exact analytic value; throws ConfigError on dimension mismatch.
    Eigen::VectorXd evaluate(const Eigen::VectorXd& x) const;

    const char* name() const;
    bool is_convolution() const { return id == BenchFunctionId::conv2 || id == BenchFunctionId::conv3; }
    /// Operand dimension for the convolution functions (d_in / 2).
    int operand_dim() const { return d_in / 2; }
};

/// Direct circular convolution (u (*) v)_k = sum_i u_i * v_{(k-i) mod d}.
/// The oracle for the frequency-domain path.
Eigen::VectorXd circular_convolution_direct(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// Frequency-domain decomposition of circular convolution into real scalar
/// products, exploiting conjugate symmetry of the spectrum of real inputs:
///
///   w = recombine * ((operand_a * u) .* (operand_b * v))
///
/// reproduces the direct sum exactly. One 2-D population per product row
/// realizes the neural version; `input_scale` shrinks the operand transforms
/// so each represented (a, b) pair stays inside the unit ball whenever
/// |u|^2 + |v|^2 <= 1, with the matching gain folded back on recombination.
struct ConvolutionPlan {
    int operand_dim = 0;
    int n_products = 0;
    Eigen::MatrixXd operand_a;  // n_products x d, applied to u
    Eigen::MatrixXd operand_b;  // n_products x d, applied to v
    Eigen::MatrixXd recombine;  // d x n_products

    static ConvolutionPlan make(int operand_dim);

    /// Matrices-only evaluation (bypasses neurons).
    Eigen::VectorXd apply_linear(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;

    double input_scale() const;   // 1/sqrt(d)
    double output_gain() const;   // d, compensating the two scaled operands
};

}  // namespace memsyn
