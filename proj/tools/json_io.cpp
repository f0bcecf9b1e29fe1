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

#include "json_io.hpp"

#include "covmub/error.hpp"

namespace covmub::io {

namespace {

void require(bool condition, const std::string &what) {
    if (!condition) {
        throw Error(ErrorKind::InvalidInput, "malformed JSON: " + what);
    }
}

}  // namespace

json field_to_json(const Field &field) {
    return json{{"p", field.p()}, {"r", field.r()}, {"modulus", field.modulus()}};
}

Field field_from_json(const json &j) {
    require(j.is_object() && j.contains("p") && j.contains("r"), "field needs p and r");
    int p = j.at("p").get<int>();
    int r = j.at("r").get<int>();
    if (j.contains("modulus")) {
        return Field::make(p, r, j.at("modulus").get<std::vector<int>>());
    }
    return Field::make(p, r);
}

json element_to_json(const Field &field, Elem a) {
    return field.coeffs(a);
}

Elem element_from_json(const Field &field, const json &j) {
    require(j.is_array(), "field element must be a coefficient array");
    auto coeffs = j.get<std::vector<int>>();
    return field.from_coeffs(coeffs);
}

json vector_to_json(const Field &field, PhaseVector v) {
    return json::array({element_to_json(field, v.x1), element_to_json(field, v.x2)});
}

PhaseVector vector_from_json(const Field &field, const json &j) {
    require(j.is_array() && j.size() == 2, "point must be a pair of field elements");
    return PhaseVector{element_from_json(field, j[0]), element_from_json(field, j[1])};
}

json line_to_json(const PhaseSpace &space, int line) {
    const AffineLine &l = space.line(line);
    return json{{"dir", vector_to_json(space.field(), space.direction(l.direction).rep)},
                {"base", vector_to_json(space.field(), l.base)}};
}

int line_from_json(const PhaseSpace &space, const json &j) {
    require(j.is_object() && j.contains("dir") && j.contains("base"), "line needs dir and base");
    int dir_point = space.index(vector_from_json(space.field(), j.at("dir")));
    require(dir_point != 0, "line direction must be nonzero");
    int base = space.index(vector_from_json(space.field(), j.at("base")));
    return space.line_through(space.direction_of(dir_point), base);
}

json map_to_json(const Field &field, const LinearMap2 &map) {
    return json::array({json::array({element_to_json(field, map.a11), element_to_json(field, map.a12)}),
                        json::array({element_to_json(field, map.a21), element_to_json(field, map.a22)})});
}

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (long long i = 0; i < m.rows(); i++) {
        json row = json::array();
        for (long long k = 0; k < m.cols(); k++) {
            row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &j) {
    require(j.is_array() && !j.empty(), "matrix must be a nonempty array of rows");
    long long rows = static_cast<long long>(j.size());
    long long cols = static_cast<long long>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (long long i = 0; i < rows; i++) {
        require(j[i].is_array() && static_cast<long long>(j[i].size()) == cols, "ragged matrix");
        for (long long k = 0; k < cols; k++) {
            const json &entry = j[i][k];
            require(entry.is_array() && entry.size() == 2 && entry[0].is_number() && entry[1].is_number(),
                    "matrix entries are [re, im] pairs");
            m(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return m;
}

json multiplier_to_json(const MultiplierTable &table) {
    json rows = json::array();
    for (int u = 0; u < table.size(); u++) {
        json row = json::array();
        for (int v = 0; v < table.size(); v++) {
            row.push_back(table.at(u, v));
        }
        rows.push_back(std::move(row));
    }
    return json{{"field", field_to_json(table.field())}, {"L", table.modulus()}, {"table", std::move(rows)}};
}

MultiplierTable multiplier_from_json(const json &j) {
    require(j.is_object() && j.contains("field") && j.contains("table"), "multiplier needs field and table");
    Field field = field_from_json(j.at("field"));
    PhaseSpace space(field);
    if (j.contains("L")) {
        require(j.at("L").get<int>() == phase_modulus(field), "L does not match the field");
    }
    const json &rows = j.at("table");
    int n = space.size();
    require(rows.is_array() && static_cast<int>(rows.size()) == n, "table must have q^2 rows");
    std::vector<std::uint8_t> values;
    values.reserve(static_cast<std::size_t>(n) * n);
    for (const auto &row : rows) {
        require(row.is_array() && static_cast<int>(row.size()) == n, "table rows must have q^2 entries");
        for (const auto &v : row) {
            require(v.is_number_integer(), "table entries are integers");
            int k = v.get<int>();
            require(k >= 0 && k < phase_modulus(field), "table entries lie in [0, L)");
            values.push_back(static_cast<std::uint8_t>(k));
        }
    }
    return MultiplierTable(space, std::move(values));
}

json phase_function_to_json(const PhaseFunction &phase) {
    return phase.values;
}

json bundle_to_json(const Bundle &bundle, const std::string &version) {
    const PhaseSpace &space = bundle.system.space();
    json lines = json::array();
    for (int l = 0; l < space.num_lines(); l++) {
        lines.push_back(json{{"line", line_to_json(space, l)}, {"projection", matrix_to_json(bundle.system.projection(l))}});
    }
    return json{{"version", version},
                {"seed", bundle.seed},
                {"field", field_to_json(bundle.field)},
                {"lambda", element_to_json(bundle.field, bundle.form.scale)},
                {"origin", vector_to_json(bundle.field, bundle.origin)},
                {"multiplier", multiplier_to_json(bundle.multiplier)},
                {"lines", std::move(lines)}};
}

Bundle bundle_from_json(const json &j) {
    require(j.is_object(), "bundle must be an object");
    for (const char *key : {"field", "lambda", "origin", "multiplier", "lines"}) {
        require(j.contains(key), std::string("bundle lacks ") + key);
    }
    Field field = field_from_json(j.at("field"));
    PhaseSpace space(field);
    SymplecticForm form = symplectic_form(field, element_from_json(field, j.at("lambda")));
    PhaseVector origin = vector_from_json(field, j.at("origin"));
    MultiplierTable multiplier = multiplier_from_json(j.at("multiplier"));
    require(multiplier.field() == field, "multiplier field differs from bundle field");
    const json &entries = j.at("lines");
    require(entries.is_array() && static_cast<int>(entries.size()) == space.num_lines(), "bundle needs one entry per line");
    std::vector<ComplexMatrix> projections(space.num_lines());
    std::vector<bool> seen(space.num_lines(), false);
    for (const auto &entry : entries) {
        require(entry.is_object() && entry.contains("line") && entry.contains("projection"), "line entry");
        int l = line_from_json(space, entry.at("line"));
        require(!seen[l], "duplicate line in bundle");
        seen[l] = true;
        projections[l] = matrix_from_json(entry.at("projection"));
    }
    unsigned long long seed = j.contains("seed") ? j.at("seed").get<unsigned long long>() : 0;
    return Bundle{field, form, origin, std::move(multiplier), QuadratureSystem(space, std::move(projections)), seed};
}

}  // namespace covmub::io
