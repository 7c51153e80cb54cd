// Copyright 2026 The qgroupoid Authors
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

#include "qgroupoid/quantization.hpp"
#include "qgroupoid/transmutation.hpp"
#include "qgroupoid/twisting.hpp"
#include "qgroupoid/zoo.hpp"

namespace {

const qg::Library& zoo() {
  static const qg::Library lib = qg::builtinZoo();
  return lib;
}

// Fixtures by argument index, smallest to largest.
const char* kAlgebras[] = {"N", "kZ2", "pair2", "kD4", "kD4+N"};

void BM_RationalMatrixInverse(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  qg::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = qg::Rational(1, static_cast<long>(i + j + 1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(qg::inverse(m));
}
BENCHMARK(BM_RationalMatrixInverse)->RangeMultiplier(2)->Range(4, 32);

void BM_CheckQuantumGroupoid(benchmark::State& state) {
  const qg::QuantumGroupoid& h = zoo().groupoid(kAlgebras[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(qg::checkQuantumGroupoid(h));
  state.SetLabel(h.name());
}
BENCHMARK(BM_CheckQuantumGroupoid)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SolveAntipode(benchmark::State& state) {
  const qg::QuantumGroupoid& h = zoo().groupoid(kAlgebras[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(qg::solveAntipode(h.base()));
  state.SetLabel(h.name());
}
BENCHMARK(BM_SolveAntipode)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SelfTransmute(benchmark::State& state) {
  const std::string name = kAlgebras[state.range(0)];
  const qg::QuantumGroupoid& h = zoo().groupoid(name);
  const qg::QTStructure& r = zoo().qtStructures.at(name + ".R").qt;
  for (auto _ : state) benchmark::DoNotOptimize(qg::selfTransmute(h, r));
  state.SetLabel(name);
}
BENCHMARK(BM_SelfTransmute)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_VerifyBraidedHopf(benchmark::State& state) {
  const std::string name = kAlgebras[state.range(0)];
  const qg::BraidedHopfPresentation p =
      qg::selfTransmute(zoo().groupoid(name), zoo().qtStructures.at(name + ".R").qt);
  for (auto _ : state) benchmark::DoNotOptimize(qg::verifyBraidedHopf(p));
  state.SetLabel(name);
}
BENCHMARK(BM_VerifyBraidedHopf)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Quantize(benchmark::State& state) {
  static const char* cocycles[][2] = {{"N", "N.F"}, {"kD4", "kD4.reflection"}, {"kD4+N", "kD4+N.F"}};
  const auto& [alg, name] = cocycles[state.range(0)];
  const qg::QuantumGroupoid& h = zoo().groupoid(alg);
  const qg::WeakCocycle& f = zoo().cocycles.at(name).cocycle;
  for (auto _ : state) benchmark::DoNotOptimize(qg::quantize(h, f));
  state.SetLabel(name);
}
BENCHMARK(BM_Quantize)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyIsomorphism(benchmark::State& state) {
  static const char* cocycles[][2] = {{"N", "N.F"}, {"kD4", "kD4.bichar"}, {"kD4+N", "kD4+N.F"}};
  const auto& [alg, name] = cocycles[state.range(0)];
  const qg::QuantumGroupoid& h = zoo().groupoid(alg);
  const qg::QTStructure r = qg::canonicalR(h.base());
  const qg::WeakCocycle& f = zoo().cocycles.at(name).cocycle;
  for (auto _ : state) benchmark::DoNotOptimize(qg::verifyIsomorphism(h, r, f));
  state.SetLabel(name);
}
BENCHMARK(BM_VerifyIsomorphism)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
