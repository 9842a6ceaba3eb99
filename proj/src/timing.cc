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


#include "spaths/timing.h"

namespace spaths {

bool PhaseTimings::Valid() const {
  return preprocessing_ns >= 0 && computation_ns >= 0 &&
         total_ns >= preprocessing_ns && total_ns >= computation_ns;
}

PhaseTimings PhaseClock::Finish() const {
  const auto end = Clock::now();
  auto ns = [](Clock::duration d) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(d).count();
  };
  PhaseTimings t;
  t.preprocessing_ns = ns(preprocessed_ - start_);
  t.computation_ns = ns(computed_ - preprocessed_);
  t.total_ns = ns(end - start_);
  return t;
}

}  // namespace spaths
