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

#ifndef ARRAYDIR_ARRAY_MODEL_HPP
#define ARRAYDIR_ARRAY_MODEL_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace arraydir {

/// One radiator: position in wavelengths, normalized excitation magnitude,
/// relative phase in radians.
struct ArrayElement {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double amplitude = 1.0;
    double phase = 0.0;
};

/// Immutable element list. Positions are expressed in wavelengths and the
/// wavenumber is fixed at 2*pi, so k * position is a phase in radians; no
/// absolute frequency exists anywhere in the model.
class AntennaArray {
  public:
    /// Validates: at least one element, every field finite, amplitudes >= 0,
    /// at least one amplitude > 0. Violations report the 1-based element
    /// index. Throws std::invalid_argument.
    explicit AntennaArray(std::vector<ArrayElement> elements);

    const std::vector<ArrayElement> &elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    double wavenumber() const;

  private:
    std::vector<ArrayElement> elements_;
};

/// Element pattern exponents for sin^u(theta) cos^v(theta); both must be
/// nonnegative integers. Throws std::invalid_argument.
class ElementPattern {
  public:
    ElementPattern(int u, int v);
    int u() const { return u_; }
    int v() const { return v_; }

  private:
    int u_;
    int v_;
};

/// Per-pair deltas, already scaled by the wavenumber:
///   x_mn = k (x_n - x_m), likewise y_mn, z_mn;  alpha_mn = alpha_n - alpha_m;
///   beta = sqrt(x_mn^2 + y_mn^2) >= 0.
struct PairGeometry {
    double x_mn = 0.0;
    double y_mn = 0.0;
    double z_mn = 0.0;
    double alpha_mn = 0.0;
    double beta = 0.0;
};

/// Deltas for elements m, n (1-based, m < n). Throws std::out_of_range for
/// bad indices and std::invalid_argument for m >= n.
PairGeometry pair_geometry(const AntennaArray &array, std::size_t m, std::size_t n);

/// Parses the array file schema:
///   { "elements": [ { "x", "y", "z", "amplitude", "phase_deg" }, ... ] }
/// Positions in wavelengths, phases in degrees (converted to radians here).
/// Element order is preserved; errors report the 1-based element index.
/// Throws std::invalid_argument.
AntennaArray load_array(std::string_view json_text);
AntennaArray load_array_file(const std::filesystem::path &path);

/// Serializes back to the same schema, phases in degrees. load(save(a))
/// reproduces every field to within decimal-representation precision.
std::string save_array(const AntennaArray &array);
void save_array_file(const AntennaArray &array, const std::filesystem::path &path);

enum class ArrayKind { linear_z, rectangular_xy, cubic, ring_xy };

struct GeneratorOptions {
    int nx = 1; // element count (linear-z, ring-xy) or x-count (grids)
    int ny = 1;
    int nz = 1;
    double spacing = 0.5; // wavelengths (lattice kinds)
    double radius = 1.0;  // wavelengths (ring-xy)
    double amplitude = 1.0;
    double phase = 0.0; // radians
};

/// Canonical geometries with uniform excitation. linear-z stacks along z at
/// 0, d, 2d, ...; rectangular-xy is an nx-by-ny grid in the z = 0 plane;
/// cubic is the full 3-D lattice; ring-xy spaces nx elements equally on a
/// circle. Throws std::invalid_argument for zero counts or non-positive
/// spacing/radius.
AntennaArray generate_array(ArrayKind kind, const GeneratorOptions &options);

} // namespace arraydir

#endif // ARRAYDIR_ARRAY_MODEL_HPP
