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

#ifndef COVMUB_TOOLS_QUBIT_DEMO_HPP
#define COVMUB_TOOLS_QUBIT_DEMO_HPP

#include <string>
#include <vector>

namespace covmub {

struct DemoCheck {
    std::string name;
    bool passed = false;
    double residual = 0.0;
};

/// The single-qubit example over GF(2): Pauli operators as a Weyl system, its
/// six quadrature projections, the swapped system, and the metaplectic
/// operators of the order-3 torus, each compared against hard-coded matrices.
std::vector<DemoCheck> run_qubit_demo();

}  // namespace covmub

#endif
