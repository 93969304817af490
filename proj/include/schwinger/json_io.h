// Copyright 2026 The Schwinger Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef SCHWINGER_JSON_IO_H
#define SCHWINGER_JSON_IO_H

#include <string>

#include "json.hpp"

namespace schwinger {

/// Serializes with sorted keys and every float at 17 significant digits.
std::string dump_json(const nlohmann::json &doc, int indent = 2);

}  // namespace schwinger

#endif  // SCHWINGER_JSON_IO_H
