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

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "triphoton/coincidence.hpp"
#include "triphoton/landscape.hpp"
#include "triphoton/matfun.hpp"
#include "triphoton/scenario.hpp"
#include "triphoton/unitary.hpp"
#include "triphoton/verify.hpp"

namespace {

using triphoton::OmegaSU3;

int default_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

OmegaSU3 parse_omega(const std::string& text) {
    std::array<double, 8> v{};
    std::istringstream in(text);
    std::string item;
    std::size_t n = 0;
    while (std::getline(in, item, ',')) {
        if (n >= 8) throw CLI::ValidationError("omega", "expected exactly 8 comma-separated angles");
        try {
            v[n++] = std::stod(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError("omega", "could not parse angle '" + item + "'");
        }
    }
    if (n != 8) throw CLI::ValidationError("omega", "expected exactly 8 comma-separated angles");
    return OmegaSU3::from_array(v);
}

std::string cfmt(triphoton::cdouble z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.12g, %.12g)", z.real(), z.imag());
    return buf;
}

int run_simulate(const std::string& preset_name, const std::string& scenario_path,
                 const std::string& csv_path, const std::string& meta_path, const std::string& pgm_path,
                 const std::string& engine_override, int jobs) {
    triphoton::Scenario s =
        preset_name.empty() ? triphoton::load_scenario(scenario_path) : triphoton::preset(preset_name);
    if (engine_override == "analytic") s.engine = triphoton::Engine::analytic;
    if (engine_override == "quadrature") s.engine = triphoton::Engine::quadrature;

    const triphoton::Landscape l = triphoton::sweep(s, jobs);
    std::optional<std::string> pgm;
    if (!pgm_path.empty()) pgm = pgm_path;
    triphoton::write_outputs(l, csv_path, meta_path, pgm);

    std::cout << s.name << ": " << l.tau1.size() << "x" << l.tau2.size() << " grid, engine "
              << triphoton::engine_name(s.engine) << ", jobs " << jobs << "\n"
              << "  min rate " << l.min_rate << " at (tau1, tau2) = (" << l.tau1[l.min_i1] << ", "
              << l.tau2[l.min_i2] << ")\n"
              << "  max rate " << l.max_rate << " at (tau1, tau2) = (" << l.tau1[l.max_i1] << ", "
              << l.tau2[l.max_i2] << ")\n";
    return 0;
}

int run_matrix(const std::string& omega_text) {
    const OmegaSU3 omega = parse_omega(omega_text);
    const triphoton::Mat3 r = triphoton::build_su3(omega);
    const triphoton::MatrixFunctionSet f = triphoton::matrix_functions(r);
    std::cout << "permanent   = " << cfmt(f.per) << "\n"
              << "immanant    = " << cfmt(f.imm) << "\n"
              << "determinant = " << cfmt(f.det) << "\n"
              << "unitarity   ||R^dag R - I||_max = " << triphoton::unitarity_defect(r)
              << ", |det - 1| = " << std::abs(f.det - 1.0) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon-coincidence landscapes of two- and three-channel interferometers"};
    app.require_subcommand(1);

    // simulate
    std::string preset_name, scenario_path, csv_path, meta_path, pgm_path, engine_override;
    int jobs = default_jobs();
    auto* simulate = app.add_subcommand("simulate", "Sweep a coincidence landscape and write outputs");
    auto* preset_opt = simulate->add_option("--preset", preset_name, "Built-in scenario (fig1a..fig1d)");
    auto* scenario_opt =
        simulate->add_option("--scenario", scenario_path, "Scenario JSON file")->check(CLI::ExistingFile);
    preset_opt->excludes(scenario_opt);
    simulate->add_option("--csv", csv_path, "Output CSV path")->required();
    simulate->add_option("--meta", meta_path, "Output JSON metadata path")->required();
    simulate->add_option("--pgm", pgm_path, "Optional grayscale heatmap (binary PGM)");
    simulate->add_option("--engine", engine_override, "Rate engine")
        ->check(CLI::IsMember({"analytic", "quadrature"}));
    simulate->add_option("--jobs", jobs, "Worker threads for the sweep")->check(CLI::PositiveNumber);

    // matrix
    std::string omega_text;
    auto* matrix = app.add_subcommand("matrix", "Print permanent/immanant/determinant for an Omega");
    matrix
        ->add_option("--omega", omega_text,
                     "Eight comma-separated radians a1,b1,a2,b2,a3,b3,g1,g2")
        ->required();

    // verify
    std::vector<std::string> suites;
    std::uint64_t seed = 12345;
    auto* verify = app.add_subcommand("verify", "Run randomized verification suites");
    verify->add_option("--suite", suites, "identities|observations|oracle|spectral|all (default all)");
    verify->add_option("--seed", seed, "Seed for the randomized checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            if (preset_name.empty() && scenario_path.empty())
                throw CLI::RequiredError("--preset or --scenario");
            return run_simulate(preset_name, scenario_path, csv_path, meta_path, pgm_path,
                                engine_override, jobs);
        }
        if (matrix->parsed()) return run_matrix(omega_text);
        if (verify->parsed()) {
            std::vector<std::string> names;
            for (const auto& s : suites)
                if (s != "all") names.push_back(s);
            const bool ok = triphoton::verify::run_suites(names, {seed}, std::cout);
            std::cout << (ok ? "all verification suites passed\n" : "verification FAILED\n");
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
