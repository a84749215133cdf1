// Copyright 2026 The gpauli Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPAULI_DIAGNOSTICS_HPP
#define GPAULI_DIAGNOSTICS_HPP

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace gpauli {

/// One named residual compared against a threshold.
///
/// `lower_bound` flips the comparison: the check passes when the value is
/// strictly above the threshold (used for "must not vanish" checks).
struct Check {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool lower_bound = false;

    bool passed() const { return lower_bound ? value > threshold : value <= threshold; }
};

struct Diagnostics {
    std::vector<Check> checks;
    std::string detail;  // free-form context, e.g. a located counterexample

    void add(std::string name, double value, double threshold) {
        checks.push_back({std::move(name), value, threshold, false});
    }
    void add_nonzero(std::string name, double value, double threshold) {
        checks.push_back({std::move(name), value, threshold, true});
    }

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed(); });
    }

    /// Largest value among upper-bounded checks (0 when there are none).
    double max_violation() const {
        double worst = 0.0;
        for (const auto &c : checks) {
            if (!c.lower_bound) worst = std::max(worst, c.value);
        }
        return worst;
    }

    const Check *find(const std::string &name) const {
        for (const auto &c : checks) {
            if (c.name == name) return &c;
        }
        return nullptr;
    }
};

inline std::ostream &operator<<(std::ostream &os, const Diagnostics &d) {
    for (const auto &c : d.checks) {
        os << (c.passed() ? "  ok   " : "  FAIL ") << c.name << " = " << c.value
           << (c.lower_bound ? " (> " : " (<= ") << c.threshold << ")\n";
    }
    if (!d.detail.empty()) os << "  " << d.detail << "\n";
    return os;
}

}  // namespace gpauli

#endif
