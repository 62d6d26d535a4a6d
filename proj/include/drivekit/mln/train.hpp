// mln/train.hpp
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

#ifndef DRIVEKIT_MLN_TRAIN_HPP
#define DRIVEKIT_MLN_TRAIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "drivekit/mln/model.hpp"

namespace drivekit::mln {

struct TrainExample {
  Observation observation;
  size_t label = 0;  // registry index of the ground-truth world
  enum class Origin { real, simulated } origin = Origin::real;
};

struct TrainConfig {
  double lr = 1e-5;
  double l2 = 1e-5;
  int max_epochs = 300;
  int patience = 10;
  double min_delta = 1e-6;
  uint64_t seed = 0;
};

struct EpochStats {
  double loss;      // -(sum log P(label|obs)) + l2*||w||^2, before the update
  double accuracy;  // fraction of examples whose MAP world equals the label
};

struct TrainResult {
  MlnModel model;
  std::vector<EpochStats> history;
};

// Full-batch gradient ascent on sum_e log P(label_e | obs_e) - l2*||w||^2.
// Per-formula gradient: sum_e [phi_f(label world) - E_conditional[phi_f]]
// minus the regularizer. Stops at max_epochs, or once accuracy has failed to
// improve by min_delta for `patience` consecutive epochs. Deterministic.
TrainResult train_weights(const MlnModel& model, const std::vector<TrainExample>& data,
                          const TrainConfig& cfg);

// Gradient of the training objective at `weights`, for gradient checks.
std::vector<double> objective_gradient(const MlnModel& model,
                                       const std::vector<TrainExample>& data,
                                       const std::vector<double>& weights, double l2);

// The objective itself (sum log-likelihood minus the l2 term).
double objective_value(const MlnModel& model, const std::vector<TrainExample>& data,
                       const std::vector<double>& weights, double l2);

// JSON-lines: {"obs":[names...],"label":k,"origin":"real"|"simulated"}.
std::vector<TrainExample> load_examples(const std::string& path,
                                        const PredicateSchema& schema);
void save_examples(const std::vector<TrainExample>& examples,
                   const PredicateSchema& schema, const std::string& path);

}  // namespace drivekit::mln

#endif  // DRIVEKIT_MLN_TRAIN_HPP
