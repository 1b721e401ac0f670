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

#ifndef TRIPHOTON_LANDSCAPE_HPP
#define TRIPHOTON_LANDSCAPE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "triphoton/scenario.hpp"

namespace triphoton {

/// Coincidence rates over a (tau1, tau2) grid, stored row-major with tau1 as
/// the outer index, plus the locations of the extreme rates.
struct Landscape {
    std::vector<double> tau1;
    std::vector<double> tau2;
    std::vector<double> rates;
    Scenario scenario;
    std::size_t min_i1, min_i2, max_i1, max_i2;
    double min_rate, max_rate;

    double rate_at(std::size_t i1, std::size_t i2) const { return rates[i1 * tau2.size() + i2]; }
};

/// Serial reference sweep. Kept alongside the parallel kernel so the two can
/// be compared bit for bit.
Landscape sweep_serial(const Scenario& s);

/// OpenMP sweep over the grid with the given number of threads (jobs >= 1).
/// Every grid point is an independent pure evaluation, so the result is
/// bitwise identical for any jobs count and matches sweep_serial.
Landscape sweep(const Scenario& s, int jobs);

/// CSV with header "tau1,tau2,rate", one row per grid point in row-major
/// order (tau1 outer), 12 significant digits.
void write_csv(const Landscape& l, const std::string& path);

/// JSON metadata: the scenario echo plus min/max rates and their locations.
void write_meta(const Landscape& l, const std::string& path);

/// Binary 8-bit portable graymap, [0, max rate] mapped linearly onto
/// [0, 255]; tau1 runs along columns left to right, tau2 along rows top to
/// bottom. An identically zero landscape maps to all-zero pixels.
void write_pgm(const Landscape& l, const std::string& path);

void write_outputs(const Landscape& l, const std::string& csv_path, const std::string& meta_path,
                   const std::optional<std::string>& pgm_path = std::nullopt);

/// Rates and axes read back from a CSV produced by write_csv.
struct CsvLandscape {
    std::vector<double> tau1;
    std::vector<double> tau2;
    std::vector<double> rates;
};

CsvLandscape read_csv(const std::string& path);

}  // namespace triphoton

#endif  // TRIPHOTON_LANDSCAPE_HPP
