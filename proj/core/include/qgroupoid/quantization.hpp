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

#pragma once

#include "qgroupoid/transmutation.hpp"

namespace qg {

/// C_H(H_s)_F: the centralizer with the Ad action, product
/// a·_F b = Ad_{F¹}(a)Ad_{F²}(b), coproduct Δ_F(a) = Ad_{F⁻¹}(a₁) ⊗ Ad_{F⁻²}(a₂),
/// counit ε_t and antipode S, living in the F-twisted module category.
/// Throws Error("not-cocommutative") or Error("closure-violation").
BraidedHopfPresentation quantize(const QuantumGroupoid& h, const WeakCocycle& wc);

/// Y₁₂X₃₄F⁻¹₂₃F₃₂F⁻¹₁₃F⁻¹₂₄ = ((Δ⊗Δ)F⁻¹)·σ₂₃((Δ⊗Δ)F) in H^{⊗4}, with
/// X = Y = F and F₃₂ carrying F¹ on the third leg.
VerificationReport checkFourFactorExchange(const QuantumGroupoid& h, const WeakCocycle& wc);

/// verifyBraidedHopf plus the exchange law, Δ_F(1) = 1⊗_t1 from the raw
/// formula, and Δ_F as an algebra map recomputed on all of H.
VerificationReport verifyQuantization(const BraidedHopfPresentation& p);

/// The twisted product and coproduct as maps on all of H (n×n² and n²×n).
Matrix twistedProductOnH(const QuantumGroupoid& h, const WeakCocycle& wc);
Matrix twistedCoproductOnH(const QuantumGroupoid& h, const WeakCocycle& wc);

}  // namespace qg
