// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqgal/config.hpp"

#include "fqgal/errors.hpp"

namespace fqgal {

void Config::validate() const {
    if (max_ambient_bits == 0 || max_ambient_bits > 62) throw MalformedInput("max ambient degree must lie in [1, 62]");
    if (orbit_budget == 0 || enum_budget == 0) throw MalformedInput("budgets must be positive");
    if (survey_samples == 0) throw MalformedInput("survey sample count must be positive");
    if (jobs == 0) throw MalformedInput("jobs must be positive");
}

}  // namespace fqgal
