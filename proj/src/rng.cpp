/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "memsyn/rng.hpp"

#include <cmath>

#include "memsyn/errors.hpp"

namespace memsyn {

Eigen::MatrixXd sample_hypersphere(int n, int d, Rng& rng) {
    if (n < 1 || d < 1) throw ConfigError("sample_hypersphere: n and d must be >= 1");
    Eigen::MatrixXd rows(n, d);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        double norm = 0.0;
        do {
            for (int j = 0; j < d; ++j) rows(i, j) = gauss(rng);
            norm = rows.row(i).norm();
        } while (norm < 1e-12);  // degenerate draw, retry
        rows.row(i) /= norm;
    }
    return rows;
}

Eigen::MatrixXd sample_unit_ball(int n, int d, Rng& rng) {
    Eigen::MatrixXd pts = sample_hypersphere(n, d, rng);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        pts.row(i) *= std::pow(unif(rng), 1.0 / static_cast<double>(d));
    }
    return pts;
}

}  // namespace memsyn
