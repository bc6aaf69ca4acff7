/*
 * (C) Copyright 2026 the memsyn authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace memsyn {

/// Raised when a simulation enters a numerically invalid state (non-finite
/// currents, exhausted re-draw loops, ...). Carries enough context in the
/// message to locate the offending step and component.
class SimulationFault : public std::runtime_error {
public:
    explicit SimulationFault(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for invalid configuration before any simulation starts.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace memsyn
