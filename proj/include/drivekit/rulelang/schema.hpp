// rulelang/schema.hpp
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

#ifndef DRIVEKIT_RULELANG_SCHEMA_HPP
#define DRIVEKIT_RULELANG_SCHEMA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace drivekit::rulelang {

enum class PredicateKind {
  unobserved_action,  // the action predicates being inferred
  mllm_action,        // actions proposed upstream, observed
  environmental,      // detections (lights, signs, lane lines), observed
  hcs,                // historical-control-signal summaries, observed
};

const char* to_string(PredicateKind kind);
std::optional<PredicateKind> kind_from_string(std::string_view tag);

// Ordered predicate universe. The order is fixed at construction and defines
// the vector layout used by assignments, observations and the retrieval
// predicate vector.
class PredicateSchema {
 public:
  PredicateSchema() = default;

  // One predicate per line: `kind name`. '#' starts a comment.
  static PredicateSchema parse(const std::string& text);
  static PredicateSchema load(const std::string& path);

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  PredicateKind kind(size_t i) const { return kinds_[i]; }

  std::optional<size_t> index_of(std::string_view name) const;
  bool is_observed(size_t i) const {
    return kinds_[i] != PredicateKind::unobserved_action;
  }

  size_t count(PredicateKind k) const;
  std::vector<size_t> indices(PredicateKind k) const;

  // For an mllm-action predicate, the index of the action predicate it
  // proposes (name minus the "MLLM" prefix), when present in the schema.
  std::optional<size_t> action_counterpart(size_t mllm_index) const;

  // Re-emits the schema as `kind name` lines in schema order.
  std::string print() const;

  bool operator==(const PredicateSchema& other) const {
    return names_ == other.names_ && kinds_ == other.kinds_;
  }

 private:
  void add(PredicateKind kind, std::string name, int line);

  std::vector<std::string> names_;
  std::vector<PredicateKind> kinds_;
  std::unordered_map<std::string, size_t> index_;
};

}  // namespace drivekit::rulelang

#endif  // DRIVEKIT_RULELANG_SCHEMA_HPP
