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

#include <benchmark/benchmark.h>

#include "covmub/kernels.hpp"
#include "covmub/multiplier.hpp"
#include "covmub/quadrature.hpp"
#include "covmub/weyl.hpp"

using namespace covmub;

namespace {

PhaseSpace space_of(int q) {
    return PhaseSpace(Field::parse(std::to_string(q)));
}

SymplecticForm unit_form(const PhaseSpace &space) {
    return symplectic_form(space.field(), space.field().one());
}

template <bool Parallel>
void cocycle_scan(benchmark::State &state) {
    PhaseSpace space = space_of(static_cast<int>(state.range(0)));
    auto table = reference_weyl_multiplier(space, unit_form(space));
    const auto &add = space.addition_table();
    for (auto _ : state) {
        long long r = Parallel ? kernels::parallel::first_cocycle_failure(table.values().data(), space.size(),
                                                                          add.data(), table.modulus())
                               : kernels::serial::first_cocycle_failure(table.values().data(), space.size(),
                                                                        add.data(), table.modulus());
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void projective_scan(benchmark::State &state) {
    PhaseSpace space = space_of(static_cast<int>(state.range(0)));
    auto w = clock_shift_system(space, unit_form(space));
    int modulus = phase_modulus(space.field());
    for (auto _ : state) {
        auto r = Parallel
                     ? kernels::parallel::projective_multiplier(w.ops(), space.addition_table().data(), modulus, 1e-9)
                     : kernels::serial::projective_multiplier(w.ops(), space.addition_table().data(), modulus, 1e-9);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void overlap_scan(benchmark::State &state) {
    PhaseSpace space = space_of(static_cast<int>(state.range(0)));
    SymplecticForm form = unit_form(space);
    auto quad = quadratures_from_weyl(weyl_system_from_multiplier(reference_weyl_multiplier(space, form), form));
    std::vector<int> dirs;
    for (int l = 0; l < space.num_lines(); l++) {
        dirs.push_back(space.line(l).direction);
    }
    double target = 1.0 / space.q();
    for (auto _ : state) {
        auto r = Parallel ? kernels::parallel::unbiasedness(quad.projections(), dirs, target, 1e-9)
                          : kernels::serial::unbiasedness(quad.projections(), dirs, target, 1e-9);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void invariant_filter(benchmark::State &state) {
    PhaseSpace space = space_of(static_cast<int>(state.range(0)));
    auto family = enumerate_weyl_multipliers(space, unit_form(space));
    LinearMap2 swap{space.field().zero(), space.field().one(), space.field().neg(space.field().one()),
                    space.field().zero()};
    auto keep = [&](long long k) {
        auto m = family[k];
        return pullback(m, swap) == m;
    };
    for (auto _ : state) {
        auto r = Parallel ? kernels::parallel::filter_indices(family.size(), keep)
                          : kernels::serial::filter_indices(family.size(), keep);
        benchmark::DoNotOptimize(r);
    }
}

}  // namespace

BENCHMARK(cocycle_scan<false>)->Arg(5)->Arg(7)->Arg(9);
BENCHMARK(cocycle_scan<true>)->Arg(5)->Arg(7)->Arg(9);
BENCHMARK(projective_scan<false>)->Arg(5)->Arg(8);
BENCHMARK(projective_scan<true>)->Arg(5)->Arg(8);
BENCHMARK(overlap_scan<false>)->Arg(8)->Arg(9);
BENCHMARK(overlap_scan<true>)->Arg(8)->Arg(9);
BENCHMARK(invariant_filter<false>)->Arg(5);
BENCHMARK(invariant_filter<true>)->Arg(5);

BENCHMARK_MAIN();
