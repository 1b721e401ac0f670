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

#include "triphoton/landscape.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json_support.hpp"
#include "triphoton/coincidence.hpp"
#include "triphoton/oracle.hpp"
#include "triphoton/unitary.hpp"

namespace triphoton {

namespace {

double point_rate(const Mat3& r, const Scenario& s, const QuadratureSpec& quad, double t1, double t2) {
    if (s.engine == Engine::analytic) return rate_p111(r, s.setup, {t1, t2});
    return oracle::quadrature_rate(r, s.setup, {t1, t2}, quad);
}

Landscape finish(Landscape l) {
    l.min_i1 = l.min_i2 = l.max_i1 = l.max_i2 = 0;
    l.min_rate = l.max_rate = l.rates.front();
    const std::size_t n2 = l.tau2.size();
    for (std::size_t i1 = 0; i1 < l.tau1.size(); ++i1)
        for (std::size_t i2 = 0; i2 < n2; ++i2) {
            const double v = l.rates[i1 * n2 + i2];
            if (v < l.min_rate) {
                l.min_rate = v;
                l.min_i1 = i1;
                l.min_i2 = i2;
            }
            if (v > l.max_rate) {
                l.max_rate = v;
                l.max_i1 = i1;
                l.max_i2 = i2;
            }
        }
    return l;
}

Landscape prepare(const Scenario& s) {
    if (s.setup.detectors.size() != 3)
        throw std::invalid_argument("sweep: scenario must have exactly 3 detectors");
    Landscape l{{}, {}, {}, s, 0, 0, 0, 0, 0.0, 0.0};
    const std::size_t n1 = s.tau1.count(), n2 = s.tau2.count();
    l.tau1.resize(n1);
    l.tau2.resize(n2);
    for (std::size_t k = 0; k < n1; ++k) l.tau1[k] = s.tau1.value(k);
    for (std::size_t k = 0; k < n2; ++k) l.tau2[k] = s.tau2.value(k);
    l.rates.assign(n1 * n2, 0.0);
    return l;
}

}  // namespace

Landscape sweep_serial(const Scenario& s) {
    Landscape l = prepare(s);
    const Mat3 r = build_su3(s.omega);
    const QuadratureSpec quad = oracle::default_rate_quadrature(s.setup);
    const std::size_t n1 = l.tau1.size(), n2 = l.tau2.size();
    for (std::size_t i1 = 0; i1 < n1; ++i1)
        for (std::size_t i2 = 0; i2 < n2; ++i2)
            l.rates[i1 * n2 + i2] = point_rate(r, s, quad, l.tau1[i1], l.tau2[i2]);
    return finish(std::move(l));
}

Landscape sweep(const Scenario& s, int jobs) {
    if (jobs < 1) throw std::invalid_argument("sweep: jobs must be >= 1");
    Landscape l = prepare(s);
    const Mat3 r = build_su3(s.omega);
    const QuadratureSpec quad = oracle::default_rate_quadrature(s.setup);
    const std::size_t n1 = l.tau1.size(), n2 = l.tau2.size();
    const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(n1 * n2);
    double* rates = l.rates.data();
    const double* t1 = l.tau1.data();
    const double* t2 = l.tau2.data();
#pragma omp parallel for schedule(static) num_threads(jobs)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
        const std::size_t i1 = static_cast<std::size_t>(idx) / n2;
        const std::size_t i2 = static_cast<std::size_t>(idx) % n2;
        rates[idx] = point_rate(r, s, quad, t1[i1], t2[i2]);
    }
    return finish(std::move(l));
}

namespace {

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::ofstream open_out(const std::string& path, std::ios_base::openmode mode = std::ios_base::out) {
    std::ofstream out(path, mode);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

}  // namespace

void write_csv(const Landscape& l, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "tau1,tau2,rate\n";
    const std::size_t n2 = l.tau2.size();
    for (std::size_t i1 = 0; i1 < l.tau1.size(); ++i1)
        for (std::size_t i2 = 0; i2 < n2; ++i2)
            out << fmt12(l.tau1[i1]) << ',' << fmt12(l.tau2[i2]) << ',' << fmt12(l.rates[i1 * n2 + i2])
                << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_meta(const Landscape& l, const std::string& path) {
    nlohmann::json j;
    j["scenario"] = scenario_to_json(l.scenario);
    j["min"] = {{"rate", l.min_rate}, {"tau1", l.tau1[l.min_i1]}, {"tau2", l.tau2[l.min_i2]}};
    j["max"] = {{"rate", l.max_rate}, {"tau1", l.tau1[l.max_i1]}, {"tau2", l.tau2[l.max_i2]}};
    j["grid_points"] = {l.tau1.size(), l.tau2.size()};
    std::ofstream out = open_out(path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_pgm(const Landscape& l, const std::string& path) {
    std::ofstream out = open_out(path, std::ios_base::out | std::ios_base::binary);
    const std::size_t width = l.tau1.size(), height = l.tau2.size();
    out << "P5\n" << width << ' ' << height << "\n255\n";
    const double scale = l.max_rate > 0.0 ? 255.0 / l.max_rate : 0.0;
    for (std::size_t row = 0; row < height; ++row)
        for (std::size_t col = 0; col < width; ++col) {
            const double v = l.rate_at(col, row) * scale;
            out.put(static_cast<char>(static_cast<unsigned char>(std::lround(v))));
        }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_outputs(const Landscape& l, const std::string& csv_path, const std::string& meta_path,
                   const std::optional<std::string>& pgm_path) {
    write_csv(l, csv_path);
    write_meta(l, meta_path);
    if (pgm_path) write_pgm(l, *pgm_path);
}

CsvLandscape read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "tau1,tau2,rate")
        throw std::runtime_error("bad CSV header in " + path);
    CsvLandscape out;
    std::vector<double> t1s, t2s;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        double a, b, c;
        char comma1, comma2;
        if (!(row >> a >> comma1 >> b >> comma2 >> c) || comma1 != ',' || comma2 != ',')
            throw std::runtime_error("bad CSV row in " + path + ": " + line);
        t1s.push_back(a);
        t2s.push_back(b);
        out.rates.push_back(c);
    }
    // Row-major with tau1 outer: tau2 cycles fastest.
    for (double v : t2s) {
        if (!out.tau2.empty() && v == out.tau2.front()) break;
        out.tau2.push_back(v);
    }
    const std::size_t n2 = out.tau2.empty() ? 1 : out.tau2.size();
    for (std::size_t i = 0; i < t1s.size(); i += n2) out.tau1.push_back(t1s[i]);
    return out;
}

}  // namespace triphoton
