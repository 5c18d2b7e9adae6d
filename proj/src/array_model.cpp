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

#include "arraydir/array_model.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace arraydir {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

[[noreturn]] void fail_element(std::string_view what, std::size_t index_1based) {
    std::ostringstream os;
    os << what << " at element " << index_1based;
    throw std::invalid_argument(os.str());
}

void validate_element(const ArrayElement &e, std::size_t index_1based) {
    if (!std::isfinite(e.x) || !std::isfinite(e.y) || !std::isfinite(e.z) ||
        !std::isfinite(e.amplitude) || !std::isfinite(e.phase))
        fail_element("non-finite value", index_1based);
    if (e.amplitude < 0.0)
        fail_element("negative amplitude", index_1based);
}

double require_number(const nlohmann::json &obj, const char *key, std::size_t index_1based) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        std::ostringstream os;
        os << "missing field \"" << key << "\"";
        fail_element(os.str(), index_1based);
    }
    if (!it->is_number()) {
        std::ostringstream os;
        os << "non-numeric field \"" << key << "\"";
        fail_element(os.str(), index_1based);
    }
    return it->get<double>();
}

} // namespace

AntennaArray::AntennaArray(std::vector<ArrayElement> elements)
    : elements_(std::move(elements)) {
    if (elements_.empty())
        throw std::invalid_argument("empty element list");
    bool any_excited = false;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        validate_element(elements_[i], i + 1);
        any_excited = any_excited || elements_[i].amplitude > 0.0;
    }
    if (!any_excited)
        throw std::invalid_argument("all element amplitudes are zero");
}

double AntennaArray::wavenumber() const { return 2.0 * std::numbers::pi; }

ElementPattern::ElementPattern(int u, int v) : u_(u), v_(v) {
    if (u < 0 || v < 0)
        throw std::invalid_argument("element pattern exponents must be nonnegative");
}

PairGeometry pair_geometry(const AntennaArray &array, std::size_t m, std::size_t n) {
    if (m < 1 || n < 1 || m > array.size() || n > array.size())
        throw std::out_of_range("pair_geometry: element index out of range");
    if (m >= n)
        throw std::invalid_argument("pair_geometry: requires m < n");
    const ArrayElement &em = array.elements()[m - 1];
    const ArrayElement &en = array.elements()[n - 1];
    const double k = array.wavenumber();
    PairGeometry pg;
    pg.x_mn = k * (en.x - em.x);
    pg.y_mn = k * (en.y - em.y);
    pg.z_mn = k * (en.z - em.z);
    pg.alpha_mn = en.phase - em.phase;
    pg.beta = std::hypot(pg.x_mn, pg.y_mn);
    return pg;
}

AntennaArray load_array(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("malformed array document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("elements"))
        throw std::invalid_argument("malformed array document: missing \"elements\"");
    const nlohmann::json &list = doc["elements"];
    if (!list.is_array())
        throw std::invalid_argument("malformed array document: \"elements\" is not an array");
    if (list.empty())
        throw std::invalid_argument("empty element list");

    std::vector<ArrayElement> elements;
    elements.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        const nlohmann::json &item = list[i];
        if (!item.is_object())
            fail_element("malformed element entry", i + 1);
        ArrayElement e;
        e.x = require_number(item, "x", i + 1);
        e.y = require_number(item, "y", i + 1);
        e.z = require_number(item, "z", i + 1);
        e.amplitude = require_number(item, "amplitude", i + 1);
        e.phase = require_number(item, "phase_deg", i + 1) * kDegToRad;
        validate_element(e, i + 1);
        elements.push_back(e);
    }
    return AntennaArray(std::move(elements));
}

AntennaArray load_array_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open array file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_array(buffer.str());
}

std::string save_array(const AntennaArray &array) {
    nlohmann::json list = nlohmann::json::array();
    for (const ArrayElement &e : array.elements()) {
        list.push_back({{"x", e.x},
                        {"y", e.y},
                        {"z", e.z},
                        {"amplitude", e.amplitude},
                        {"phase_deg", e.phase / kDegToRad}});
    }
    nlohmann::json doc;
    doc["elements"] = std::move(list);
    return doc.dump(2) + "\n";
}

void save_array_file(const AntennaArray &array, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write array file: " + path.string());
    out << save_array(array);
    if (!out)
        throw std::invalid_argument("failed writing array file: " + path.string());
}

AntennaArray generate_array(ArrayKind kind, const GeneratorOptions &options) {
    const double amp = options.amplitude;
    const double phase = options.phase;
    std::vector<ArrayElement> elements;

    switch (kind) {
    case ArrayKind::linear_z: {
        if (options.nx < 1)
            throw std::invalid_argument("generate_array: element count must be >= 1");
        if (options.spacing <= 0.0)
            throw std::invalid_argument("generate_array: spacing must be positive");
        for (int i = 0; i < options.nx; ++i)
            elements.push_back({0.0, 0.0, i * options.spacing, amp, phase});
        break;
    }
    case ArrayKind::rectangular_xy: {
        if (options.nx < 1 || options.ny < 1)
            throw std::invalid_argument("generate_array: grid counts must be >= 1");
        if (options.spacing <= 0.0)
            throw std::invalid_argument("generate_array: spacing must be positive");
        for (int iy = 0; iy < options.ny; ++iy)
            for (int ix = 0; ix < options.nx; ++ix)
                elements.push_back({ix * options.spacing, iy * options.spacing, 0.0, amp, phase});
        break;
    }
    case ArrayKind::cubic: {
        if (options.nx < 1 || options.ny < 1 || options.nz < 1)
            throw std::invalid_argument("generate_array: lattice counts must be >= 1");
        if (options.spacing <= 0.0)
            throw std::invalid_argument("generate_array: spacing must be positive");
        for (int iz = 0; iz < options.nz; ++iz)
            for (int iy = 0; iy < options.ny; ++iy)
                for (int ix = 0; ix < options.nx; ++ix)
                    elements.push_back({ix * options.spacing, iy * options.spacing,
                                        iz * options.spacing, amp, phase});
        break;
    }
    case ArrayKind::ring_xy: {
        if (options.nx < 1)
            throw std::invalid_argument("generate_array: element count must be >= 1");
        if (options.radius <= 0.0)
            throw std::invalid_argument("generate_array: radius must be positive");
        for (int i = 0; i < options.nx; ++i) {
            const double angle = 2.0 * std::numbers::pi * i / options.nx;
            elements.push_back({options.radius * std::cos(angle),
                                options.radius * std::sin(angle), 0.0, amp, phase});
        }
        break;
    }
    }
    return AntennaArray(std::move(elements));
}

} // namespace arraydir
