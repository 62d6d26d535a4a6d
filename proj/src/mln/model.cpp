// mln/model.cpp
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

#include "drivekit/mln/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "drivekit/util/errors.hpp"
#include "drivekit/util/rng.hpp"

namespace drivekit::mln {

bool World::contains(size_t predicate) const {
  return std::find(true_predicates.begin(), true_predicates.end(), predicate) !=
         true_predicates.end();
}

namespace {

std::string strip(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

WorldRegistry WorldRegistry::parse(const std::string& text,
                                   const PredicateSchema& schema) {
  WorldRegistry registry;
  std::set<std::vector<size_t>> seen;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = strip(raw);
    if (line.empty()) continue;

    World world;
    std::istringstream fields(line);
    std::string name;
    while (std::getline(fields, name, ',')) {
      name = strip(name);
      if (name.empty()) throw ParseError("empty predicate name in world", line_no);
      auto idx = schema.index_of(name);
      if (!idx) throw ParseError("predicate '" + name + "' not in schema", line_no);
      if (schema.kind(*idx) != PredicateKind::unobserved_action) {
        throw ParseError("world predicate '" + name + "' is not unobserved-action",
                         line_no);
      }
      world.true_predicates.push_back(*idx);
    }
    if (world.true_predicates.empty()) {
      throw ParseError("empty world is not allowed", line_no);
    }
    std::vector<size_t> key = world.true_predicates;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
      throw ParseError("repeated predicate inside world", line_no);
    }
    if (!seen.insert(key).second) {
      throw ParseError("duplicate world", line_no);
    }
    registry.worlds_.push_back(std::move(world));
  }
  return registry;
}

WorldRegistry WorldRegistry::load(const std::string& path,
                                  const PredicateSchema& schema) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open world registry: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), schema);
}

std::string WorldRegistry::print(const PredicateSchema& schema) const {
  std::string out;
  for (const World& w : worlds_) {
    for (size_t i = 0; i < w.true_predicates.size(); ++i) {
      if (i) out += ',';
      out += schema.name(w.true_predicates[i]);
    }
    out += '\n';
  }
  return out;
}

Observation Observation::all_false(const PredicateSchema& schema) {
  Observation obs;
  obs.values.assign(schema.size(), 0);
  return obs;
}

Observation Observation::from_true_names(const PredicateSchema& schema,
                                         const std::vector<std::string>& names) {
  Observation obs = all_false(schema);
  for (const std::string& name : names) {
    auto idx = schema.index_of(name);
    if (!idx) throw ParseError("predicate '" + name + "' not in schema");
    if (!schema.is_observed(*idx)) {
      throw ParseError("predicate '" + name + "' is unobserved and cannot appear in an observation");
    }
    obs.values[*idx] = 1;
  }
  return obs;
}

std::vector<std::string> Observation::true_names(const PredicateSchema& schema) const {
  std::vector<std::string> out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i]) out.push_back(schema.name(i));
  }
  return out;
}

MlnModel MlnModel::assemble(PredicateSchema schema, const std::vector<ParsedRule>& rules,
                            WorldRegistry worlds, uint64_t init_seed) {
  MlnModel model;
  model.schema = std::move(schema);
  model.worlds = std::move(worlds);
  Rng rng(init_seed);
  for (const ParsedRule& rule : rules) {
    model.formulas.push_back(rule.formula);
    double w = rule.weight ? *rule.weight : 0.1 + rng.uniform(-0.01, 0.01);
    if (!std::isfinite(w)) {
      throw NumericError("non-finite weight for formula '" + rule.formula.source_text + "'");
    }
    model.weights.push_back(w);
  }
  return model;
}

void MlnModel::compose_assignment(const Observation& obs, const World& w,
                                  Assignment& out) const {
  out.assign(obs.values.begin(), obs.values.end());
  for (size_t idx : w.true_predicates) out[idx] = 1;
}

}  // namespace drivekit::mln
