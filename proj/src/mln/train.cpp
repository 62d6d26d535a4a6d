// mln/train.cpp
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

#include "drivekit/mln/train.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "drivekit/util/errors.hpp"

namespace drivekit::mln {

namespace {

// phi_f(obs_e ∪ w_k) for every (example, world, formula), computed once up
// front; epochs then reduce to dense sums over this table.
class PhiTable {
 public:
  PhiTable(const MlnModel& model, const std::vector<TrainExample>& data)
      : n_worlds_(model.worlds.size()), n_formulas_(model.formulas.size()) {
    data_.resize(data.size() * n_worlds_ * n_formulas_);
    Assignment a;
    size_t pos = 0;
    for (const TrainExample& ex : data) {
      if (ex.label >= n_worlds_) {
        throw NumericError("train example label " + std::to_string(ex.label) +
                           " outside registry of size " + std::to_string(n_worlds_));
      }
      for (size_t k = 0; k < n_worlds_; ++k) {
        model.compose_assignment(ex.observation, model.worlds.world(k), a);
        for (size_t f = 0; f < n_formulas_; ++f) {
          data_[pos++] = model.formulas[f].evaluate(a) ? 1 : 0;
        }
      }
    }
  }

  // Row of formula potentials for (example, world).
  const uint8_t* row(size_t example, size_t world) const {
    return data_.data() + (example * n_worlds_ + world) * n_formulas_;
  }

  size_t worlds() const { return n_worlds_; }
  size_t formulas() const { return n_formulas_; }

 private:
  size_t n_worlds_;
  size_t n_formulas_;
  std::vector<uint8_t> data_;
};

struct EpochPass {
  double objective;  // sum log P(label|obs) - l2*||w||^2
  double accuracy;
  std::vector<double> gradient;  // of the objective (ascent direction)
};

EpochPass full_batch_pass(const PhiTable& phi, const std::vector<TrainExample>& data,
                          const std::vector<double>& w, double l2,
                          bool want_gradient) {
  const size_t K = phi.worlds();
  const size_t F = phi.formulas();
  EpochPass pass;
  pass.objective = 0.0;
  pass.accuracy = 0.0;
  if (want_gradient) pass.gradient.assign(F, 0.0);

  std::vector<double> scores(K);
  std::vector<double> p(K);
  for (size_t e = 0; e < data.size(); ++e) {
    size_t best = 0;
    for (size_t k = 0; k < K; ++k) {
      const uint8_t* row = phi.row(e, k);
      double s = 0.0;
      for (size_t f = 0; f < F; ++f) {
        if (row[f]) s += w[f];
      }
      scores[k] = s;
      if (s > scores[best]) best = k;
    }
    const size_t label = data[e].label;
    if (best == label) pass.accuracy += 1.0;

    const double m = scores[best];
    double z = 0.0;
    for (size_t k = 0; k < K; ++k) {
      p[k] = std::exp(scores[k] - m);
      z += p[k];
    }
    pass.objective += scores[label] - m - std::log(z);

    if (want_gradient) {
      for (size_t k = 0; k < K; ++k) {
        const double pk = p[k] / z;
        const uint8_t* row = phi.row(e, k);
        for (size_t f = 0; f < F; ++f) {
          if (row[f]) pass.gradient[f] -= pk;
        }
      }
      const uint8_t* label_row = phi.row(e, label);
      for (size_t f = 0; f < F; ++f) {
        if (label_row[f]) pass.gradient[f] += 1.0;
      }
    }
  }

  double w2 = 0.0;
  for (double x : w) w2 += x * x;
  pass.objective -= l2 * w2;
  if (want_gradient) {
    for (size_t f = 0; f < F; ++f) pass.gradient[f] -= 2.0 * l2 * w[f];
  }
  pass.accuracy /= data.empty() ? 1.0 : static_cast<double>(data.size());
  return pass;
}

}  // namespace

TrainResult train_weights(const MlnModel& model, const std::vector<TrainExample>& data,
                          const TrainConfig& cfg) {
  if (data.empty()) throw NumericError("training data is empty");
  if (!(cfg.lr > 0.0)) throw NumericError("learning rate must be positive");
  if (cfg.l2 < 0.0) throw NumericError("l2 must be nonnegative");
  if (model.worlds.empty()) throw NumericError("world registry is empty");

  PhiTable phi(model, data);
  TrainResult result;
  result.model = model;
  std::vector<double>& w = result.model.weights;

  double best_accuracy = -1.0;
  int stagnant = 0;
  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    EpochPass pass = full_batch_pass(phi, data, w, cfg.l2, /*want_gradient=*/true);
    const double loss = -pass.objective;
    if (!std::isfinite(loss)) {
      size_t bad = w.size();
      for (size_t f = 0; f < w.size(); ++f) {
        if (!std::isfinite(w[f])) {
          bad = f;
          break;
        }
      }
      throw NumericError("non-finite loss at epoch " + std::to_string(epoch) +
                         (bad < w.size() ? " (weight index " + std::to_string(bad) + ")"
                                         : " (all weights finite)"));
    }
    result.history.push_back(EpochStats{loss, pass.accuracy});

    for (size_t f = 0; f < w.size(); ++f) w[f] += cfg.lr * pass.gradient[f];

    if (pass.accuracy > best_accuracy + cfg.min_delta) {
      best_accuracy = pass.accuracy;
      stagnant = 0;
    } else {
      ++stagnant;
      if (stagnant >= cfg.patience) break;
    }
  }
  return result;
}

double objective_value(const MlnModel& model, const std::vector<TrainExample>& data,
                       const std::vector<double>& weights, double l2) {
  PhiTable phi(model, data);
  return full_batch_pass(phi, data, weights, l2, /*want_gradient=*/false).objective;
}

std::vector<double> objective_gradient(const MlnModel& model,
                                       const std::vector<TrainExample>& data,
                                       const std::vector<double>& weights, double l2) {
  PhiTable phi(model, data);
  return full_batch_pass(phi, data, weights, l2, /*want_gradient=*/true).gradient;
}

std::vector<TrainExample> load_examples(const std::string& path,
                                        const PredicateSchema& schema) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open training data: " + path);
  std::vector<TrainExample> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what(), line_no);
    }
    TrainExample ex;
    try {
      ex.observation =
          Observation::from_true_names(schema, j.at("obs").get<std::vector<std::string>>());
      ex.label = j.at("label").get<size_t>();
      const std::string origin = j.value("origin", "real");
      if (origin == "real") {
        ex.origin = TrainExample::Origin::real;
      } else if (origin == "simulated") {
        ex.origin = TrainExample::Origin::simulated;
      } else {
        throw ParseError("origin must be 'real' or 'simulated'", line_no);
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad train example: ") + e.what(), line_no);
    }
    out.push_back(std::move(ex));
  }
  return out;
}

void save_examples(const std::vector<TrainExample>& examples,
                   const PredicateSchema& schema, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write training data: " + path);
  for (const TrainExample& ex : examples) {
    nlohmann::json j;
    j["obs"] = ex.observation.true_names(schema);
    j["label"] = ex.label;
    j["origin"] = ex.origin == TrainExample::Origin::real ? "real" : "simulated";
    out << j.dump() << '\n';
  }
}

}  // namespace drivekit::mln
