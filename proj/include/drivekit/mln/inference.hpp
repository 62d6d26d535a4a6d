// mln/inference.hpp
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

#ifndef DRIVEKIT_MLN_INFERENCE_HPP
#define DRIVEKIT_MLN_INFERENCE_HPP

#include <cstddef>
#include <vector>

#include "drivekit/mln/model.hpp"

namespace drivekit::mln {

// Unnormalized log-potential: sum over formulas of w_f * phi_f(obs ∪ w).
double world_score(const MlnModel& model, const Observation& obs, const World& w);

// Scores for every registry world, in registry order.
std::vector<double> world_scores(const MlnModel& model, const Observation& obs);

// Softmax of the world scores; sums to 1 within 1e-12.
std::vector<double> conditional_distribution(const MlnModel& model,
                                             const Observation& obs);

struct MapResult {
  size_t world_index;
  double probability;
};

// Argmax of the conditional distribution; ties break to the lowest registry
// index. Requires a nonempty registry.
MapResult map_inference(const MlnModel& model, const Observation& obs);

}  // namespace drivekit::mln

#endif  // DRIVEKIT_MLN_INFERENCE_HPP
