// Copyright 2026 The oddcore Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ODDCORE_REPORT_H_
#define ODDCORE_REPORT_H_

#include <string>
#include <string_view>

#include "oddcore/core_corona.h"

namespace oddcore {

enum class OutputMode { kJson, kText };

// Throws std::invalid_argument unless `name` is "json" or "text".
OutputMode ParseOutputMode(std::string_view name);

// Keys, in order: n, m, alpha, mu, core, corona, k_observed, k_predicted,
// k_unresolved, partition_holds, L, Lc, J, d, profile. Sets are sorted id
// arrays. Output ends with a newline and is byte-stable for a given report.
std::string RenderReport(const CoreCoronaReport& report, OutputMode mode);

// {"error": kind, "message": message} plus newline.
std::string RenderError(std::string_view kind, std::string_view message);

}  // namespace oddcore

#endif  // ODDCORE_REPORT_H_
