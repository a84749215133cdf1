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

#ifndef GPAULI_TOOLS_COMMANDS_HPP
#define GPAULI_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gpauli::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kValidation = 2,
    kDecomposition = 3,
    kBranch = 4,
    kVerificationFailed = 5,
};

struct RunConfig {
    std::string command;
    std::string spec_path;
    std::string basis;
    std::string bra;
    std::string ket;
    std::string pair_path;
    std::string corr_path;
    std::string config;
    std::string kind = "generic";
    std::optional<int> sites;
    std::uint64_t seed = 1;
    int trials = 20;
    int samples = 0;
    double tol = 1e-8;
    std::string out_path;
    std::string format = "json";
    bool check = false;
};

int cmd_element(const RunConfig &cfg, std::ostream &out);
int cmd_table(const RunConfig &cfg, std::ostream &out);
int cmd_signs(const RunConfig &cfg, std::ostream &out);
int cmd_verify(const RunConfig &cfg, std::ostream &out);
int cmd_algebra(const RunConfig &cfg, std::ostream &out);
int cmd_probability(const RunConfig &cfg, std::ostream &out);

/// Parses argv, dispatches, and maps exceptions to exit codes. Results go
/// to `out` (or --out), messages to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gpauli::cli

#endif
