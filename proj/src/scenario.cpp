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

#include "triphoton/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json_support.hpp"

namespace triphoton {

std::size_t GridAxis::count() const {
    if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
        throw std::invalid_argument("GridAxis: need finite lo <= hi and step > 0");
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

std::string engine_name(Engine e) {
    return e == Engine::analytic ? "analytic" : "quadrature";
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& name, const std::string& field, const std::string& why) {
    throw std::runtime_error(name + ": field '" + field + "' " + why);
}

const json& require(const json& obj, const std::string& name, const std::string& key,
                    const std::string& label) {
    if (!obj.is_object() || !obj.contains(key)) fail(name, label, "is missing");
    return obj.at(key);
}

const json& require(const json& obj, const std::string& name, const std::string& key) {
    return require(obj, name, key, key);
}

double number_at(const json& v, const std::string& name, const std::string& field) {
    if (!v.is_number()) fail(name, field, "must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(name, field, "must be finite");
    return x;
}

GaussianSpectrum parse_spectrum(const json& v, const std::string& name, const std::string& field) {
    const double carrier =
        number_at(require(v, name, "carrier", field + ".carrier"), name, field + ".carrier");
    const double width = number_at(require(v, name, "width", field + ".width"), name, field + ".width");
    if (width <= 0.0) fail(name, field + ".width", "must be > 0");
    return {carrier, width};
}

GridAxis parse_axis(const json& v, const std::string& name, const std::string& field) {
    if (!v.is_array() || v.size() != 3) fail(name, field, "must be an array [lo, hi, step]");
    GridAxis axis{number_at(v[0], name, field + "[0]"), number_at(v[1], name, field + "[1]"),
                  number_at(v[2], name, field + "[2]")};
    if (axis.step <= 0.0) fail(name, field + "[2]", "(step) must be > 0");
    if (axis.hi < axis.lo) fail(name, field, "must satisfy lo <= hi");
    return axis;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text, const std::string& name) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::runtime_error(name + ": not valid JSON: " + e.what());
    }

    const json& omega_v = require(doc, name, "omega");
    if (!omega_v.is_array() || omega_v.size() != 8) fail(name, "omega", "must be an array of 8 angles");
    std::array<double, 8> angles{};
    for (std::size_t i = 0; i < 8; ++i)
        angles[i] = number_at(omega_v[i], name, "omega[" + std::to_string(i) + "]");

    const GaussianSpectrum source = parse_spectrum(require(doc, name, "source"), name, "source");

    const json& dets_v = require(doc, name, "detectors");
    if (!dets_v.is_array()) fail(name, "detectors", "must be an array of 3 spectra");
    std::vector<GaussianSpectrum> detectors;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string field = "detectors[" + std::to_string(i) + "]";
        if (i >= dets_v.size()) fail(name, field, "is missing");
        detectors.push_back(parse_spectrum(dets_v[i], name, field));
    }
    if (dets_v.size() != 3) fail(name, "detectors", "must have exactly 3 entries");

    const json& grid_v = require(doc, name, "grid");
    const GridAxis t1 = parse_axis(require(grid_v, name, "t1", "grid.t1"), name, "grid.t1");
    const GridAxis t2 = parse_axis(require(grid_v, name, "t2", "grid.t2"), name, "grid.t2");

    const json& engine_v = require(doc, name, "engine");
    if (!engine_v.is_string()) fail(name, "engine", "must be \"analytic\" or \"quadrature\"");
    const std::string engine_s = engine_v.get<std::string>();
    Engine engine;
    if (engine_s == "analytic")
        engine = Engine::analytic;
    else if (engine_s == "quadrature")
        engine = Engine::quadrature;
    else
        fail(name, "engine", "must be \"analytic\" or \"quadrature\"");

    Scenario s{OmegaSU3::from_array(angles), SpectralSetup{source, std::move(detectors)}, t1, t2,
               engine,  name, {}};
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path);
}

namespace {

GridAxis default_axis(const SpectralSetup& setup) {
    double sigma_min = setup.source.width;
    for (const auto& det : setup.detectors) sigma_min = std::min(sigma_min, det.width);
    const double hi = 3.0 / sigma_min;
    return {-hi, hi, 2.0 * hi / 120.0};  // 121 points, origin included
}

Scenario make_preset(const std::string& name, const OmegaSU3& omega, const GaussianSpectrum& source,
                     std::vector<GaussianSpectrum> detectors, std::vector<std::string> notes) {
    SpectralSetup setup{source, std::move(detectors)};
    const GridAxis axis = default_axis(setup);
    std::ostringstream range_note;
    range_note << "delay grid chosen as [-3/sigma_min, 3/sigma_min] = [" << axis.lo << ", " << axis.hi
               << "] with 121 points per axis";
    notes.push_back(range_note.str());
    return Scenario{omega, std::move(setup), axis, axis, Engine::analytic, name, std::move(notes)};
}

}  // namespace

Scenario preset(const std::string& name) {
    const double pi = std::numbers::pi;
    if (name == "fig1a")
        return make_preset(name, {0, pi / 2, pi / 2, pi, 0, pi / 2, pi / 2, pi}, {0.0, 0.1},
                           {{0.0, 0.1}, {0.0, 0.1}, {0.0, 1.0}}, {});
    if (name == "fig1b")
        return make_preset(name, {0, pi / 2, 0, pi / 2, 0, pi / 2, 0, 0}, {0.0, 1.0},
                           {{0.0, 0.1}, {0.0, 0.1}, {0.0, 0.01}}, {});
    if (name == "fig1c")
        return make_preset(name, {0, pi / 2, pi / 2, 2.0 * std::acos(1.0 / std::sqrt(3.0)), 0, pi / 2, 0, 0},
                           {0.0, 0.5}, {{3.0, 0.2}, {2.0, 0.2}, {1.0, 0.2}}, {});
    if (name == "fig1d")
        return make_preset(name, {0, pi / 2, pi / 2, pi, 0, pi / 2, pi / 2, pi}, {0.1, 0.1},
                           {{0.95, 0.11}, {0.0, 0.1}, {0.99, 0.11}},
                           {"detector 3 width raised from the degenerate 0 to 0.11 (mirroring detector 1); "
                            "a zero-width response mode is unnormalizable"});
    throw std::invalid_argument("unknown preset '" + name + "' (expected fig1a, fig1b, fig1c or fig1d)");
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"fig1a", "fig1b", "fig1c", "fig1d"};
    return names;
}

nlohmann::json scenario_to_json(const Scenario& s) {
    nlohmann::json j;
    j["omega"] = s.omega.to_array();
    j["source"] = {{"carrier", s.setup.source.carrier}, {"width", s.setup.source.width}};
    j["detectors"] = nlohmann::json::array();
    for (const auto& det : s.setup.detectors)
        j["detectors"].push_back({{"carrier", det.carrier}, {"width", det.width}});
    j["grid"] = {{"t1", {s.tau1.lo, s.tau1.hi, s.tau1.step}}, {"t2", {s.tau2.lo, s.tau2.hi, s.tau2.step}}};
    j["engine"] = engine_name(s.engine);
    if (!s.name.empty()) j["name"] = s.name;
    if (!s.notes.empty()) j["notes"] = s.notes;
    return j;
}

}  // namespace triphoton
