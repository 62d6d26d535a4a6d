// mln/simulate.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DRIVEKIT_MLN_SIMULATE_HPP
#define DRIVEKIT_MLN_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "drivekit/mln/train.hpp"

namespace drivekit::mln {

struct SimulateConfig {
  size_t count = 1000;
  uint64_t seed = 0;
  // Probability that each observed predicate is true in a draw; 0.5 makes
  // the draw uniform over observed-predicate combinations.
  double density = 0.5;
};

// Samples observations (rejecting draws that trigger no rule antecedent),
// labels each with the generator model's MAP world, and tags them
// origin=simulated. Covers combinations that never occur in logged data.
std::vector<TrainExample> simulate_examples(const MlnModel& generator,
                                            const SimulateConfig& cfg);

}  // namespace drivekit::mln

#endif  // DRIVEKIT_MLN_SIMULATE_HPP
