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

// Algorithm description files.
//
//   {
//     "name": "x1-equals-1",
//     "kind": "collision",                 // or "setcomp"
//     "n": 2,
//     "T": 1,
//     "oracle_kind": "standard",           // or "erasing"
//     "workspace_bits": 2,
//     "answer_offset": 0,
//     "answer_width": 2,
//     "initial": {
//       "scale": "1/1",
//       "amplitudes": [{"workspace": 0, "register": "X", "index": 1, "z": 1, "amplitude": "1/1"}]
//     },
//     "layers": [
//       {"dimension": 16, "entries": [[row, col, "1/2+1/2√2"], ...]},
//       [["1/1", "0/1", ...], ...]      // dense rows are accepted too
//     ]
//   }
//
// Entries are elements of Q(sqrt 2) written "a+b√2" with rationals "p/q".

#pragma once

#include <string>

#include "querylab/simulator.hpp"

namespace querylab {

/// Parses and validates (orthogonality, normalization, T = layers - 1). Throws Error.
ExactAlgorithm algorithm_from_json(const std::string &text);
std::string algorithm_to_json(const ExactAlgorithm &alg);

/// Loads either a file path or "builtin:<name>" (needs n).
ExactAlgorithm load_algorithm(const std::string &spec, int n);

}  // namespace querylab
