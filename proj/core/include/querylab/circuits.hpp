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

#include <functional>
#include <string>
#include <vector>

#include "querylab/simulator.hpp"

namespace querylab {

using BasisMap = std::function<BasisState(const BasisState &)>;

/// Layer that permutes basis states by `f`; throws Error if f is not a bijection of the layout.
SparseMatrix<QSqrt2> permutation_layer(const BasisLayout &layout, const BasisMap &f);

/// Hadamard on a single binary degree of freedom. `bit(s)` reads it (0 or 1), `flip(s)`
/// returns the partner state with that value toggled.
SparseMatrix<QSqrt2> hadamard_layer(const BasisLayout &layout, const std::function<int(const BasisState &)> &bit,
                                    const BasisMap &flip);

SparseMatrix<QSqrt2> hadamard_workspace_bit(const BasisLayout &layout, int bit);
SparseMatrix<QSqrt2> hadamard_z(const BasisLayout &layout);
/// Mixes the X and Y registers at a fixed position (set-comparison layouts only).
SparseMatrix<QSqrt2> hadamard_register(const BasisLayout &layout);
/// Walsh-Hadamard transform over the position register; index_range must be a power of two.
SparseMatrix<QSqrt2> walsh_hadamard_index(const BasisLayout &layout);

/// Names accepted by builtin_algorithm.
std::vector<std::string> builtin_algorithm_names();

/// Hand-built reference algorithms:
///   always-accept     0 queries, starts and stays in z = 2.
///   x1-equals-1       1 query, accepts iff x_1 = 1.
///   interference      1 query, Walsh-Hadamard over positions, query, Walsh-Hadamard,
///                     accept iff the position register returns to |1>. Accepts with
///                     probability sum_v c_v^2 / n^2, c_v = #{i : x_i = v}.
///                     n must be a power of two.
///   pair-equality     2 queries, accepts iff x_1 = x_2.
///   mixer             2 queries, a scrambled circuit with irrational intermediate
///                     amplitudes; n must be a power of two.
///   register-compare  set comparison, 1 query, accepts with probability (1 - [x_1 = y_1]) / 2.
///   erasing-setcomp   set comparison, erasing oracle, 1 query: uniform superposition over
///                     (b, i), erase, Hadamard on b, accept iff b = 1.
/// Throws Error for unknown names or unsupported n.
ExactAlgorithm builtin_algorithm(const std::string &name, int n);

}  // namespace querylab
