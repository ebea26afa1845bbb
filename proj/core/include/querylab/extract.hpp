// Copyright 2026 The Querylab Authors
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

#include <map>

#include "querylab/multilinear.hpp"
#include "querylab/simulator.hpp"

namespace querylab {

/// Amplitude polynomials of every basis state, tracked symbolically through the
/// algorithm. The physical amplitude is amplitude * sqrt(scale).
struct SymbolicState {
    std::map<BasisState, MultilinearPoly> amplitudes;
    Rational scale = 1;
};

/// Symbolic run: each query sends p at |Psi,(reg,i),z> to p * Delta(reg_i, h) at
/// |Psi xor (h << offset),(reg,i),z> for every h in the alphabet.
/// Throws Error for erasing-oracle algorithms.
SymbolicState extract_amplitudes(const ExactAlgorithm &alg);

/// Acceptance probability as a multilinear polynomial of degree <= 2T:
/// scale * sum over z = 2 of amplitude^2, in canonical form.
MultilinearPoly extract_polynomial(const ExactAlgorithm &alg);
/// Float algorithms carry no exact coefficients; always throws Error("exact mode required").
MultilinearPoly extract_polynomial(const FloatAlgorithm &alg);

}  // namespace querylab
