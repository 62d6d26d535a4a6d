// mln/model_io.hpp
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

#ifndef DRIVEKIT_MLN_MODEL_IO_HPP
#define DRIVEKIT_MLN_MODEL_IO_HPP

#include <string>

#include "drivekit/mln/model.hpp"

namespace drivekit::mln {

// Versioned JSON: schema lines, formula source lines, weights, and an
// FNV-1a content hash binding the formula text to the schema. Weights
// round-trip bit-exactly (shortest decimal that re-reads to the same
// double). The world registry stays in its own data file and is supplied
// again at load time.
void save_model(const MlnModel& model, const std::string& path);

MlnModel load_model(const std::string& path, WorldRegistry worlds);

}  // namespace drivekit::mln

#endif  // DRIVEKIT_MLN_MODEL_IO_HPP
