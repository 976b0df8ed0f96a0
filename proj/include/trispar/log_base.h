// Copyright 2026 The trispar Authors
//
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

#ifndef TRISPAR_LOG_BASE_H_
#define TRISPAR_LOG_BASE_H_

#include <cmath>
#include <numbers>

namespace trispar {

// Base of the logarithm in the concentration conditions and the sampling
// budgets. Natural log unless changed here.
inline constexpr double kLogBase = std::numbers::e;

inline double Log(double x) { return std::log(x) / std::log(kLogBase); }

}  // namespace trispar

#endif  // TRISPAR_LOG_BASE_H_
