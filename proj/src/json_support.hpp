// Copyright 2026 The Triphoton Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIPHOTON_SRC_JSON_SUPPORT_HPP
#define TRIPHOTON_SRC_JSON_SUPPORT_HPP

#include "json.hpp"
#include "triphoton/scenario.hpp"

namespace triphoton {

nlohmann::json scenario_to_json(const Scenario& s);

}  // namespace triphoton

#endif  // TRIPHOTON_SRC_JSON_SUPPORT_HPP
