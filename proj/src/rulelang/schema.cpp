// rulelang/schema.cpp
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

#include "drivekit/rulelang/schema.hpp"

#include <fstream>
#include <sstream>

#include "drivekit/util/errors.hpp"

namespace drivekit::rulelang {

const char* to_string(PredicateKind kind) {
  switch (kind) {
    case PredicateKind::unobserved_action: return "unobserved-action";
    case PredicateKind::mllm_action: return "mllm-action";
    case PredicateKind::environmental: return "environmental";
    case PredicateKind::hcs: return "hcs";
  }
  return "?";
}

std::optional<PredicateKind> kind_from_string(std::string_view tag) {
  if (tag == "unobserved-action") return PredicateKind::unobserved_action;
  if (tag == "mllm-action") return PredicateKind::mllm_action;
  if (tag == "environmental") return PredicateKind::environmental;
  if (tag == "hcs") return PredicateKind::hcs;
  return std::nullopt;
}

namespace {

std::string strip(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

void PredicateSchema::add(PredicateKind kind, std::string name, int line) {
  if (index_.contains(name)) {
    throw ParseError("duplicate predicate name '" + name + "'", line);
  }
  if (kind == PredicateKind::mllm_action && name.rfind("MLLM", 0) != 0) {
    throw ParseError("mllm-action predicate '" + name +
                         "' must carry the MLLM prefix",
                     line);
  }
  index_.emplace(name, names_.size());
  names_.push_back(std::move(name));
  kinds_.push_back(kind);
}

PredicateSchema PredicateSchema::parse(const std::string& text) {
  PredicateSchema schema;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag, name, extra;
    fields >> tag >> name;
    if (name.empty() || (fields >> extra)) {
      throw ParseError("expected `kind name`", line_no);
    }
    auto kind = kind_from_string(tag);
    if (!kind) throw ParseError("unknown predicate kind '" + tag + "'", line_no);
    schema.add(*kind, name, line_no);
  }
  return schema;
}

PredicateSchema PredicateSchema::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open schema file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::optional<size_t> PredicateSchema::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t PredicateSchema::count(PredicateKind k) const {
  size_t n = 0;
  for (auto kind : kinds_) n += (kind == k);
  return n;
}

std::vector<size_t> PredicateSchema::indices(PredicateKind k) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < kinds_.size(); ++i) {
    if (kinds_[i] == k) out.push_back(i);
  }
  return out;
}

std::optional<size_t> PredicateSchema::action_counterpart(size_t mllm_index) const {
  if (kinds_[mllm_index] != PredicateKind::mllm_action) return std::nullopt;
  const std::string& name = names_[mllm_index];
  auto idx = index_of(std::string_view(name).substr(4));
  if (idx && kinds_[*idx] == PredicateKind::unobserved_action) return idx;
  return std::nullopt;
}

std::string PredicateSchema::print() const {
  std::string out;
  for (size_t i = 0; i < names_.size(); ++i) {
    out += to_string(kinds_[i]);
    out += ' ';
    out += names_[i];
    out += '\n';
  }
  return out;
}

}  // namespace drivekit::rulelang
