// SPDX-License-Identifier: Apache-2.0
//
// arraydir: closed-form directivity for volumetric antenna arrays
// Copyright (C) 2026 arraydir developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Command-line surface: load/generate/evaluate/scan/validate workflows plus
// CSV export for plotting. All angles at this interface are degrees; exit
// status is 0 on success, 1 for usage errors, 2 for computation/validation
// failures.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "arraydir/array_model.hpp"
#include "arraydir/directivity.hpp"
#include "arraydir/quadrature.hpp"
#include "arraydir/radiation_pattern.hpp"
#include "arraydir/sinc_derivative.hpp"

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string dbi_str(double dbi, int precision) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, dbi);
    return buf;
}

struct Options {
    std::string array_file;
    std::string output_file;
    int u = 0;
    int v = 0;
    double theta_deg = 90.0;
    double phi_deg = 0.0;
    std::size_t theta_steps = 721;
    std::size_t phi_steps = 1441;
    std::string method = "closed";
    double tolerance = 1.0e-8;
    int precision = 2;
    // generate
    std::string kind;
    int n = 8;
    int nx = 2, ny = 2, nz = 2;
    double spacing = 0.5;
    double radius = 1.0;
    double amplitude = 1.0;
    double phase_deg = 0.0;
    // validate
    int random_n = 0;
    unsigned seed = 1;
    double corrupt_scale = 1.0;
    // dump-derivative
    int order = 2;
};

arraydir::AntennaArray make_random_array(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> pos(0.0, 6.0);
    std::uniform_real_distribution<double> amp(0.05, 1.0);
    std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
    std::vector<arraydir::ArrayElement> elements;
    elements.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        elements.push_back({pos(rng), pos(rng), pos(rng), amp(rng), phase(rng)});
    return arraydir::AntennaArray(std::move(elements));
}

int cmd_directivity(const Options &opt) {
    const arraydir::AntennaArray array = arraydir::load_array_file(opt.array_file);
    const arraydir::ElementPattern pattern(opt.u, opt.v);
    const arraydir::Direction direction(opt.theta_deg * kDegToRad, opt.phi_deg * kDegToRad);

    std::printf("direction: theta %s deg, phi %s deg\n", num(opt.theta_deg).c_str(),
                num(opt.phi_deg).c_str());

    if (opt.method == "closed" || opt.method == "both") {
        const arraydir::DirectivityResult result = arraydir::directivity(array, pattern, direction);
        std::printf("closed-form: %s linear, %s dBi\n", num(result.linear).c_str(),
                    dbi_str(result.dbi, opt.precision).c_str());
        std::printf("normalization: total %s (self %s, cross %s)\n",
                    num(result.breakdown.total).c_str(), num(result.breakdown.self_term).c_str(),
                    num(result.breakdown.cross_term).c_str());
    }
    if (opt.method == "quadrature" || opt.method == "both") {
        const arraydir::QuadratureResult t_num =
            arraydir::normalization_numeric(array, pattern, 1.0e-10);
        const double intensity = arraydir::radiation_intensity(array, pattern, direction);
        const double linear = intensity / t_num.value;
        std::printf("quadrature: %s linear, %s dBi (normalization %s, %zu evaluations)\n",
                    num(linear).c_str(), dbi_str(arraydir::to_dbi(linear), opt.precision).c_str(),
                    num(t_num.value).c_str(), t_num.evaluations);
        if (opt.method == "both") {
            const double t_closed = arraydir::normalization(array, pattern).total;
            const double rel = std::fabs(t_closed - t_num.value) / std::fabs(t_num.value);
            std::printf("closed-vs-quadrature relative error: %s\n", num(rel).c_str());
        }
    }
    return 0;
}

int write_grid_csv(const Options &opt, bool normalized) {
    const arraydir::AntennaArray array = arraydir::load_array_file(opt.array_file);
    const arraydir::ElementPattern pattern(opt.u, opt.v);

    std::ofstream out(opt.output_file);
    if (!out)
        throw std::invalid_argument("cannot write output file: " + opt.output_file);

    if (normalized) {
        const arraydir::ScanResult result =
            arraydir::scan(array, pattern, opt.theta_steps, opt.phi_steps);
        out << "theta_deg,phi_deg,directivity_linear,directivity_dbi\n";
        for (std::size_t i = 0; i < result.theta_steps; ++i) {
            const double theta_deg = result.theta_at(i) / kDegToRad;
            for (std::size_t j = 0; j < result.phi_steps; ++j) {
                const double linear = result.linear_at(i, j);
                out << num(theta_deg) << ',' << num(result.phi_at(j) / kDegToRad) << ','
                    << num(linear) << ',' << num(arraydir::to_dbi(linear)) << '\n';
            }
        }
        if (!out)
            throw std::invalid_argument("failed writing output file: " + opt.output_file);
        const arraydir::Direction peak = result.argmax_direction();
        const double best = result.linear[result.argmax_index];
        std::printf("grid: %zu x %zu, normalization total %s\n", result.theta_steps,
                    result.phi_steps, num(result.breakdown.total).c_str());
        std::printf("argmax: theta %s deg, phi %s deg, %s dBi (%s linear)\n",
                    num(peak.theta() / kDegToRad).c_str(), num(peak.phi() / kDegToRad).c_str(),
                    dbi_str(arraydir::to_dbi(best), opt.precision).c_str(), num(best).c_str());
    } else {
        const arraydir::IntensityProfile profile(array, pattern);
        out << "theta_deg,phi_deg,intensity\n";
        std::size_t best_i = 0, best_j = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < opt.theta_steps; ++i) {
            const double theta =
                static_cast<double>(i) * std::numbers::pi / static_cast<double>(opt.theta_steps - 1);
            for (std::size_t j = 0; j < opt.phi_steps; ++j) {
                const double phi = static_cast<double>(j) * 2.0 * std::numbers::pi /
                                   static_cast<double>(opt.phi_steps);
                const double value = profile(theta, phi);
                if (value > best) {
                    best = value;
                    best_i = i;
                    best_j = j;
                }
                out << num(theta / kDegToRad) << ',' << num(phi / kDegToRad) << ',' << num(value)
                    << '\n';
            }
        }
        if (!out)
            throw std::invalid_argument("failed writing output file: " + opt.output_file);
        const double theta_deg =
            static_cast<double>(best_i) * 180.0 / static_cast<double>(opt.theta_steps - 1);
        const double phi_deg =
            static_cast<double>(best_j) * 360.0 / static_cast<double>(opt.phi_steps);
        std::printf("argmax: theta %s deg, phi %s deg, intensity %s\n", num(theta_deg).c_str(),
                    num(phi_deg).c_str(), num(best).c_str());
    }
    return 0;
}

int cmd_scan(const Options &opt) {
    if (opt.theta_steps < 2 || opt.phi_steps < 2)
        throw std::invalid_argument("scan: needs at least 2 steps per axis");
    return write_grid_csv(opt, true);
}

int cmd_pattern(const Options &opt) {
    if (opt.theta_steps < 2 || opt.phi_steps < 2)
        throw std::invalid_argument("pattern: needs at least 2 steps per axis");
    return write_grid_csv(opt, false);
}

int cmd_validate(const Options &opt, bool use_random) {
    const arraydir::AntennaArray array = use_random
                                             ? make_random_array(opt.random_n, opt.seed)
                                             : arraydir::load_array_file(opt.array_file);
    const arraydir::ElementPattern pattern(opt.u, opt.v);

    double t_closed = arraydir::normalization(array, pattern).total;
    t_closed *= opt.corrupt_scale;
    const arraydir::QuadratureResult t_num =
        arraydir::normalization_numeric(array, pattern, 1.0e-10);
    const double rel = std::fabs(t_closed - t_num.value) / std::fabs(t_num.value);

    const arraydir::Direction direction(opt.theta_deg * kDegToRad, opt.phi_deg * kDegToRad);
    const double intensity = arraydir::radiation_intensity(array, pattern, direction);

    std::printf("closed-form:  T = %s, D = %s dBi\n", num(t_closed).c_str(),
                dbi_str(arraydir::to_dbi(intensity / t_closed), opt.precision).c_str());
    std::printf("quadrature:   T = %s, D = %s dBi (%zu evaluations)\n", num(t_num.value).c_str(),
                dbi_str(arraydir::to_dbi(intensity / t_num.value), opt.precision).c_str(),
                t_num.evaluations);
    std::printf("relative error: %s (tolerance %s)\n", num(rel).c_str(),
                num(opt.tolerance).c_str());
    if (rel > opt.tolerance) {
        std::printf("FAIL\n");
        return kExitComputation;
    }
    std::printf("PASS\n");
    return 0;
}

int cmd_generate(const Options &opt) {
    arraydir::GeneratorOptions gen;
    gen.spacing = opt.spacing;
    gen.radius = opt.radius;
    gen.amplitude = opt.amplitude;
    gen.phase = opt.phase_deg * kDegToRad;

    arraydir::ArrayKind kind;
    if (opt.kind == "linear-z") {
        kind = arraydir::ArrayKind::linear_z;
        gen.nx = opt.n;
    } else if (opt.kind == "rectangular-xy") {
        kind = arraydir::ArrayKind::rectangular_xy;
        gen.nx = opt.nx;
        gen.ny = opt.ny;
    } else if (opt.kind == "cubic") {
        kind = arraydir::ArrayKind::cubic;
        gen.nx = opt.nx;
        gen.ny = opt.ny;
        gen.nz = opt.nz;
    } else if (opt.kind == "ring-xy") {
        kind = arraydir::ArrayKind::ring_xy;
        gen.nx = opt.n;
    } else {
        throw std::invalid_argument("unknown array kind: " + opt.kind);
    }

    const arraydir::AntennaArray array = arraydir::generate_array(kind, gen);
    arraydir::save_array_file(array, opt.output_file);
    std::printf("wrote %zu elements to %s\n", array.size(), opt.output_file.c_str());
    return 0;
}

int cmd_dump_derivative(const Options &opt) {
    const arraydir::TermSum &terms = arraydir::derive_terms(opt.order);
    std::printf("d^%d/dz^%d [ sin(r)/r ],  r = sqrt(beta^2 + z^2)\n", opt.order, opt.order);
    std::printf("%s\n", terms.to_string().c_str());
    std::printf("terms: %zu\n", terms.size());
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"arraydir: exact directivity for volumetric antenna arrays"};
    app.require_subcommand(1);
    Options opt;

    auto add_pattern_flags = [&](CLI::App *cmd) {
        cmd->add_option("--u", opt.u, "sin exponent u (>= 0)");
        cmd->add_option("--v", opt.v, "cos exponent v (>= 0)");
    };
    auto add_grid_flags = [&](CLI::App *cmd) {
        cmd->add_option("--theta-steps", opt.theta_steps, "grid points over theta in [0, 180] deg");
        cmd->add_option("--phi-steps", opt.phi_steps, "grid points over phi in [0, 360) deg");
        cmd->add_option("--output,-o", opt.output_file, "CSV output path")->required();
    };

    CLI::App *directivity = app.add_subcommand("directivity", "directivity at one direction");
    directivity->add_option("--array", opt.array_file, "array JSON file")->required();
    add_pattern_flags(directivity);
    directivity->add_option("--theta", opt.theta_deg, "polar angle, degrees")->required();
    directivity->add_option("--phi", opt.phi_deg, "azimuth angle, degrees")->required();
    directivity->add_option("--method", opt.method, "closed | quadrature | both")
        ->check(CLI::IsMember({"closed", "quadrature", "both"}));
    directivity->add_option("--tolerance", opt.tolerance, "comparison tolerance (method=both)");
    directivity->add_option("--precision", opt.precision, "dBi decimals (default 2)");

    CLI::App *scan = app.add_subcommand("scan", "directivity grid over the sphere to CSV");
    scan->add_option("--array", opt.array_file, "array JSON file")->required();
    add_pattern_flags(scan);
    add_grid_flags(scan);
    scan->add_option("--precision", opt.precision, "dBi decimals (default 2)");

    CLI::App *pattern = app.add_subcommand("pattern", "unnormalized intensity grid to CSV");
    pattern->add_option("--array", opt.array_file, "array JSON file")->required();
    add_pattern_flags(pattern);
    add_grid_flags(pattern);

    CLI::App *validate =
        app.add_subcommand("validate", "closed form vs numerical-quadrature oracle");
    auto *varr = validate->add_option("--array", opt.array_file, "array JSON file");
    auto *vrand = validate->add_option("--generate-random", opt.random_n,
                                       "validate a random array with this many elements");
    validate->add_option("--seed", opt.seed, "random array seed");
    add_pattern_flags(validate);
    validate->add_option("--theta", opt.theta_deg, "polar angle, degrees");
    validate->add_option("--phi", opt.phi_deg, "azimuth angle, degrees");
    validate->add_option("--tolerance", opt.tolerance, "relative tolerance (default 1e-8)");
    validate->add_option("--precision", opt.precision, "dBi decimals (default 2)");
    validate->add_option("--corrupt-scale", opt.corrupt_scale, "")->group(""); // test hook
    varr->excludes(vrand);

    CLI::App *generate = app.add_subcommand("generate", "write a canonical array file");
    generate->add_option("--kind", opt.kind, "linear-z | rectangular-xy | cubic | ring-xy")
        ->required();
    generate->add_option("--n", opt.n, "element count (linear-z, ring-xy)");
    generate->add_option("--nx", opt.nx, "x count (rectangular-xy, cubic)");
    generate->add_option("--ny", opt.ny, "y count (rectangular-xy, cubic)");
    generate->add_option("--nz", opt.nz, "z count (cubic)");
    generate->add_option("--spacing", opt.spacing, "lattice spacing, wavelengths");
    generate->add_option("--radius", opt.radius, "ring radius, wavelengths");
    generate->add_option("--amplitude", opt.amplitude, "uniform amplitude");
    generate->add_option("--phase-deg", opt.phase_deg, "uniform phase, degrees");
    generate->add_option("--output,-o", opt.output_file, "array JSON output path")->required();

    CLI::App *dump = app.add_subcommand("dump-derivative", "print the exact term sum of order n");
    dump->add_option("--order", opt.order, "derivative order (>= 0)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(directivity))
            return cmd_directivity(opt);
        if (app.got_subcommand(scan))
            return cmd_scan(opt);
        if (app.got_subcommand(pattern))
            return cmd_pattern(opt);
        if (app.got_subcommand(validate)) {
            const bool use_random = vrand->count() > 0;
            if (!use_random && varr->count() == 0)
                throw std::invalid_argument("validate: needs --array or --generate-random");
            return cmd_validate(opt, use_random);
        }
        if (app.got_subcommand(generate))
            return cmd_generate(opt);
        if (app.got_subcommand(dump))
            return cmd_dump_derivative(opt);
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
