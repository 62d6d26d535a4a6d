// mln/model.hpp
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

#ifndef DRIVEKIT_MLN_MODEL_HPP
#define DRIVEKIT_MLN_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "drivekit/rulelang/formula.hpp"
#include "drivekit/rulelang/parser.hpp"
#include "drivekit/rulelang/schema.hpp"

namespace drivekit::mln {

using rulelang::Assignment;
using rulelang::Formula;
using rulelang::ParsedRule;
using rulelang::PredicateKind;
using rulelang::PredicateSchema;

// One admissible joint assignment to the unobserved action predicates: the
// listed predicates are true, every other action predicate is false.
struct World {
  std::vector<size_t> true_predicates;  // schema indices, in file order

  bool contains(size_t predicate) const;
};

// The finite set of worlds inference enumerates. Order is file order and is
// load-bearing: MAP ties break toward the lowest index.
class WorldRegistry {
 public:
  WorldRegistry() = default;

  // One world per line, comma-separated predicate names; '#' comments.
  // Every named predicate must be an unobserved-action predicate; the empty
  // set is not allowed and duplicate sets are rejected.
  static WorldRegistry parse(const std::string& text, const PredicateSchema& schema);
  static WorldRegistry load(const std::string& path, const PredicateSchema& schema);

  size_t size() const { return worlds_.size(); }
  bool empty() const { return worlds_.empty(); }
  const World& world(size_t i) const { return worlds_[i]; }
  const std::vector<World>& worlds() const { return worlds_; }

  std::string print(const PredicateSchema& schema) const;

 private:
  std::vector<World> worlds_;
};

// Truth values for the observed predicates (mllm-action, environmental,
// hcs). Stored schema-wide for cheap assignment composition; entries at
// unobserved-action positions are always 0.
struct Observation {
  std::vector<uint8_t> values;

  static Observation all_false(const PredicateSchema& schema);
  // Closed world: the named predicates are true, every other observed
  // predicate false. Rejects unknown names and unobserved-action names.
  static Observation from_true_names(const PredicateSchema& schema,
                                     const std::vector<std::string>& names);

  std::vector<std::string> true_names(const PredicateSchema& schema) const;
};

struct MlnModel {
  PredicateSchema schema;
  std::vector<Formula> formulas;
  std::vector<double> weights;  // one per formula, finite
  WorldRegistry worlds;

  // Builds a model from parsed rules. Rules without an inline weight are
  // initialized to 0.1 plus a seeded uniform jitter of +-0.01 to break
  // symmetry between otherwise identical formulas.
  static MlnModel assemble(PredicateSchema schema, const std::vector<ParsedRule>& rules,
                           WorldRegistry worlds, uint64_t init_seed = 0);

  size_t formula_count() const { return formulas.size(); }

  // obs united with w, as a complete assignment. `out` is resized to schema
  // width; reusing one buffer across calls avoids churn in inference loops.
  void compose_assignment(const Observation& obs, const World& w, Assignment& out) const;
};

}  // namespace drivekit::mln

#endif  // DRIVEKIT_MLN_MODEL_HPP
