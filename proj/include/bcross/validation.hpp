// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bcross {

enum class Suite { identities, bounds, convergence, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string to_string(Suite s);

/// One invariant check. `margin` is positive when the check passes with
/// room to spare: limit - measured for upper limits, measured - limit for
/// lower limits. Identity-type bounds (equality expected) pass at margin 0.
struct Check {
    std::string suite;
    std::string name;
    double measured = 0.0;
    double limit = 0.0;
    double margin = 0.0;
    bool passed = false;
};

/// Runs the selected suite(s); checks are returned in a fixed order.
std::vector<Check> run_suite(Suite suite);

}  // namespace bcross
