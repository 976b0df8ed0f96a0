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

#ifndef TRISPAR_TIMER_H_
#define TRISPAR_TIMER_H_

#include <chrono>

namespace trispar {

// Monotonic stopwatch. Lap() returns seconds since construction or the
// previous Lap() and restarts.
class Stopwatch {
 public:
  Stopwatch() : start_(Clock::now()) {}

  double Elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  double Lap() {
    const auto now = Clock::now();
    const double seconds = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return seconds;
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_;
};

}  // namespace trispar

#endif  // TRISPAR_TIMER_H_
