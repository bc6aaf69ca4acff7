/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace memsyn {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; decorrelates nearby integers.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Counter-based seed split: child streams are independent and reproducible
/// regardless of the order they are created or consumed in.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return mix64(base ^ mix64(stream));
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Rows drawn uniformly from the unit hypersphere surface in d dimensions.
/// In 1-D this reduces to {+1, -1}.
Eigen::MatrixXd sample_hypersphere(int n, int d, Rng& rng);

/// Points drawn uniformly from the solid unit d-ball.
Eigen::MatrixXd sample_unit_ball(int n, int d, Rng& rng);

}  // namespace memsyn
