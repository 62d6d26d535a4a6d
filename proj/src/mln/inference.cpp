// mln/inference.cpp
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

#include "drivekit/mln/inference.hpp"

#include <algorithm>
#include <cmath>

#include "drivekit/util/errors.hpp"

namespace drivekit::mln {

double world_score(const MlnModel& model, const Observation& obs, const World& w) {
  Assignment a;
  model.compose_assignment(obs, w, a);
  double score = 0.0;
  for (size_t f = 0; f < model.formulas.size(); ++f) {
    if (model.formulas[f].evaluate(a)) score += model.weights[f];
  }
  return score;
}

std::vector<double> world_scores(const MlnModel& model, const Observation& obs) {
  std::vector<double> scores;
  scores.reserve(model.worlds.size());
  Assignment a;
  for (const World& w : model.worlds.worlds()) {
    model.compose_assignment(obs, w, a);
    double score = 0.0;
    for (size_t f = 0; f < model.formulas.size(); ++f) {
      if (model.formulas[f].evaluate(a)) score += model.weights[f];
    }
    scores.push_back(score);
  }
  return scores;
}

namespace {

// In-place softmax with max subtraction.
void softmax(std::vector<double>& v) {
  const double m = *std::max_element(v.begin(), v.end());
  double z = 0.0;
  for (double& x : v) {
    x = std::exp(x - m);
    z += x;
  }
  for (double& x : v) x /= z;
}

}  // namespace

std::vector<double> conditional_distribution(const MlnModel& model,
                                             const Observation& obs) {
  if (model.worlds.empty()) throw NumericError("world registry is empty");
  std::vector<double> p = world_scores(model, obs);
  softmax(p);
  return p;
}

MapResult map_inference(const MlnModel& model, const Observation& obs) {
  if (model.worlds.empty()) throw NumericError("world registry is empty");
  std::vector<double> scores = world_scores(model, obs);
  size_t best = 0;
  for (size_t k = 1; k < scores.size(); ++k) {
    if (scores[k] > scores[best]) best = k;  // strict: ties keep the lowest index
  }
  softmax(scores);
  return MapResult{best, scores[best]};
}

}  // namespace drivekit::mln
