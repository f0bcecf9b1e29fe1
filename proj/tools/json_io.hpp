// Copyright 2026 The covmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COVMUB_TOOLS_JSON_IO_HPP
#define COVMUB_TOOLS_JSON_IO_HPP

#include <json.hpp>

#include "covmub/linalg.hpp"
#include "covmub/multiplier.hpp"
#include "covmub/phase_space.hpp"
#include "covmub/quadrature.hpp"

namespace covmub::io {

using nlohmann::json;

/// {"p": 2, "r": 2, "modulus": [1, 1, 1]}
json field_to_json(const Field &field);
Field field_from_json(const json &j);

/// Field elements are coefficient vectors c_0..c_{r-1}.
json element_to_json(const Field &field, Elem a);
Elem element_from_json(const Field &field, const json &j);
json vector_to_json(const Field &field, PhaseVector v);
PhaseVector vector_from_json(const Field &field, const json &j);

/// {"dir": [a, b], "base": [c, d]}
json line_to_json(const PhaseSpace &space, int line);
/// Index of the line described by j; throws InvalidInput if j names no line.
int line_from_json(const PhaseSpace &space, const json &j);

json map_to_json(const Field &field, const LinearMap2 &map);

/// Row-major rows of [re, im] pairs.
json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const json &j);

/// {"field": ..., "L": 4, "table": [[...], ...]}
json multiplier_to_json(const MultiplierTable &table);
MultiplierTable multiplier_from_json(const json &j);

json phase_function_to_json(const PhaseFunction &phase);

struct Bundle {
    Field field;
    SymplecticForm form;
    PhaseVector origin;
    MultiplierTable multiplier;
    QuadratureSystem system;
    unsigned long long seed = 0;
};

json bundle_to_json(const Bundle &bundle, const std::string &version);
/// Throws InvalidInput on malformed bundles.
Bundle bundle_from_json(const json &j);

}  // namespace covmub::io

#endif
