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

#ifndef TRIPHOTON_VERIFY_HPP
#define TRIPHOTON_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace triphoton {
namespace verify {

struct Options {
    std::uint64_t seed = 12345;
};

/// Runs one verification suite ("identities", "observations", "oracle" or
/// "spectral"), printing a line per check. Returns true when every check
/// passed.
bool run_suite(const std::string& name, const Options& opts, std::ostream& out);

/// Runs the given suites (all of them when the list is empty).
bool run_suites(const std::vector<std::string>& names, const Options& opts, std::ostream& out);

const std::vector<std::string>& suite_names();

}  // namespace verify
}  // namespace triphoton

#endif  // TRIPHOTON_VERIFY_HPP
