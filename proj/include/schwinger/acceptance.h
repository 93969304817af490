// Copyright 2026 The Schwinger Authors
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


#ifndef SCHWINGER_ACCEPTANCE_H
#define SCHWINGER_ACCEPTANCE_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace schwinger::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

struct Options {
    /// Directory receiving the three-chain comparison report.
    std::string report_dir = ".";
    int random_graphs = 100;
    std::uint64_t seed = 20260611;
};

using Criterion = std::function<CriterionResult(const Options &)>;

/// The full suite in order, one entry per criterion.
std::vector<Criterion> criteria();

/// Runs one criterion, turning exceptions into failures.
CriterionResult run_one(const Criterion &criterion, int id, const Options &options);

std::vector<CriterionResult> run_all(const Options &options);

/// "PASS  3  title: detail"
std::string format_line(const CriterionResult &result);

nlohmann::json results_to_json(const std::vector<CriterionResult> &results);

/// Comparison of the printed three-mode-chain constants with the computed
/// exact and asymptotic sets, including verification tables.
nlohmann::json three_chain_report();

inline constexpr const char *kThreeChainReportFile = "three_chain_report.json";

}  // namespace schwinger::acceptance

#endif  // SCHWINGER_ACCEPTANCE_H
