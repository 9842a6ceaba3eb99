// Copyright 2026 The spaths Authors.
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


#ifndef SPATHS_TIMING_H_
#define SPATHS_TIMING_H_

#include <chrono>
#include <cstdint>

namespace spaths {

// Nanosecond durations of the three benchmark phases. `total_ns` spans the
// whole call, including path reconstruction.
struct PhaseTimings {
  std::int64_t preprocessing_ns = 0;
  std::int64_t computation_ns = 0;
  std::int64_t total_ns = 0;

  bool Valid() const;
};

// Reads a monotonic clock at the start of a call and at each phase boundary.
class PhaseClock {
 public:
  using Clock = std::chrono::steady_clock;

  PhaseClock() : start_(Clock::now()), preprocessed_(start_) {}

  void EndPreprocessing() { preprocessed_ = Clock::now(); }
  void EndComputation() { computed_ = Clock::now(); }
  PhaseTimings Finish() const;

 private:
  Clock::time_point start_;
  Clock::time_point preprocessed_;
  Clock::time_point computed_;
};

}  // namespace spaths

#endif  // SPATHS_TIMING_H_
