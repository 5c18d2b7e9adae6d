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

#ifndef ARRAYDIR_DIRECTIVITY_HPP
#define ARRAYDIR_DIRECTIVITY_HPP

#include <cstddef>
#include <vector>

#include "arraydir/array_model.hpp"
#include "arraydir/radiation_pattern.hpp"

namespace arraydir {

/// The closed-form normalization integral split into its two contributions:
///   self  = (1/2) B(u+1, v+1/2) sum A_n^2                (exact-rational B)
///   cross = 2 (-1)^v sum_{n>m} sum_k C(u,k) A_n A_m cos(alpha_mn)
///                               D_{v+u-k}(beta_mn, z_mn)
/// where D_p is the even sinc-of-radius derivative. total = self + cross.
struct NormalizationBreakdown {
    double self_term = 0.0;
    double cross_term = 0.0;
    double total = 0.0;
};

struct DirectivityResult {
    double linear = 0.0; // >= 0; 0 at pattern nulls
    double dbi = 0.0;    // 10 log10(linear); -inf at nulls
    Direction direction;
    NormalizationBreakdown breakdown;
};

double normalization_self(const AntennaArray &array, const ElementPattern &pattern);
double normalization_cross(const AntennaArray &array, const ElementPattern &pattern);

/// total > 0 is enforced; a non-positive total signals a numerically
/// degenerate configuration and throws std::runtime_error.
NormalizationBreakdown normalization(const AntennaArray &array, const ElementPattern &pattern);

DirectivityResult directivity(const AntennaArray &array, const ElementPattern &pattern,
                              const Direction &direction);
/// Same, reusing an already-computed normalization (e.g. across a scan).
DirectivityResult directivity(const AntennaArray &array, const ElementPattern &pattern,
                              const Direction &direction, const NormalizationBreakdown &norm);

/// The four specialized closed forms for (u,v) in {0,1}^2 as tabulated in
/// the reference derivation, evaluated verbatim including any misprints.
/// T1 <-> (u=0,v=0), T2 <-> (u=0,v=1), T3 <-> (u=1,v=0), T4 <-> (u=1,v=1).
/// Only for cross-checks; see docs/derivation_notes.md for the verdicts
/// (T3 and T4 carry confirmed misprints and do not match the defining
/// integral; the general engine is normative).
enum class SpecializedCase { T1, T2, T3, T4 };
double specialized_normalization(const AntennaArray &array, SpecializedCase which);

/// Directivity over the regular grid theta_i = i*pi/(theta_steps-1),
/// phi_j = j*2*pi/phi_steps. The normalization is computed once and reused
/// for every grid point. Rows are distributed over worker threads
/// (ARRAYDIR_THREADS caps the count; default hardware parallelism);
/// results are deterministic regardless of the worker count.
struct ScanResult {
    std::size_t theta_steps = 0;
    std::size_t phi_steps = 0;
    std::vector<double> linear; // row-major, theta rows then phi columns
    NormalizationBreakdown breakdown;
    std::size_t argmax_index = 0;

    double theta_at(std::size_t i) const;
    double phi_at(std::size_t j) const;
    double linear_at(std::size_t i, std::size_t j) const;
    Direction argmax_direction() const;
};

ScanResult scan(const AntennaArray &array, const ElementPattern &pattern,
                std::size_t theta_steps, std::size_t phi_steps, unsigned threads = 0);

/// 10 log10(linear); -infinity for linear = 0 (nulls are pattern features,
/// not errors).
double to_dbi(double linear);

} // namespace arraydir

#endif // ARRAYDIR_DIRECTIVITY_HPP
