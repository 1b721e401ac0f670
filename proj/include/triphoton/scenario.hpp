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

#ifndef TRIPHOTON_SCENARIO_HPP
#define TRIPHOTON_SCENARIO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "triphoton/spectral.hpp"
#include "triphoton/unitary.hpp"

namespace triphoton {

/// Inclusive delay axis lo, lo + step, ..., hi.
struct GridAxis {
    double lo;
    double hi;
    double step;

    std::size_t count() const;
    double value(std::size_t k) const { return lo + step * static_cast<double>(k); }
};

enum class Engine { analytic, quadrature };

std::string engine_name(Engine e);

/// Everything needed to sweep one coincidence landscape.
struct Scenario {
    OmegaSU3 omega;
    SpectralSetup setup;  // three detectors
    GridAxis tau1;
    GridAxis tau2;
    Engine engine = Engine::analytic;
    std::string name;
    std::vector<std::string> notes;
};

/// Parse a scenario from JSON text with fields omega[8], source{carrier,width},
/// detectors[3]{carrier,width}, grid{t1:[lo,hi,step], t2:[lo,hi,step]}, engine.
/// Throws std::runtime_error naming the offending field on missing entries,
/// non-finite numbers, or non-positive widths/steps.
Scenario parse_scenario(const std::string& json_text, const std::string& name = "scenario");

/// Load and parse a scenario file.
Scenario load_scenario(const std::string& path);

/// Built-in scenarios fig1a, fig1b, fig1c, fig1d. Each carries the exact
/// interferometer angles and spectra of the corresponding landscape and a
/// grid of 121 points per axis spanning [-3/sigma_min, 3/sigma_min], with
/// sigma_min the narrowest width in the setup. fig1d replaces a degenerate
/// zero third-detector width with 0.11; the substitution is recorded in the
/// scenario notes. Throws std::invalid_argument for unknown names.
Scenario preset(const std::string& name);

/// Names accepted by preset().
const std::vector<std::string>& preset_names();

}  // namespace triphoton

#endif  // TRIPHOTON_SCENARIO_HPP
