// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace fqgal {

/// Run-wide limits and switches shared by the pipelines and the CLI.
struct Config {
    /// Largest ambient extension degree over F_p used for concrete root
    /// spaces (the ambient field has p^(k e) elements with k e <= this).
    unsigned max_ambient_bits = 24;
    std::uint64_t orbit_budget = std::uint64_t{1} << 24;
    std::uint64_t enum_budget = std::uint64_t{1} << 20;
    std::uint64_t rng_seed = 0;
    /// Surveys enumerate every specialization while q^s stays at or below
    /// this bound and draw `survey_samples` seeded values otherwise.
    std::uint64_t survey_exhaustive_limit = std::uint64_t{1} << 12;
    std::uint64_t survey_samples = 256;
    unsigned jobs = 1;
    bool json_output = false;

    /// Throws MalformedInput when a budget is zero.
    void validate() const;
};

}  // namespace fqgal
