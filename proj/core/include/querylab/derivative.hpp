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

#include <string>
#include <vector>

#include "querylab/exact.hpp"
#include "querylab/lattice.hpp"
#include "querylab/lattice_poly.hpp"

namespace querylab {

/// Axis-aligned box with one weight per variable; d(q) is the maximum over the box of
/// weight_k * |dq/dx_k|.
struct Region {
    int arity = 2;
    std::vector<Rational> lo;
    std::vector<Rational> hi;
    std::vector<double> weights;
};

/// [1, G] x [n, n + n/(cT)] with weights (1, n/(cT(G-1))). Throws Error if G < 2.
Region collision_region(int n, int T, int G, const LatticeOptions &opts = {});
/// [1, G] x [n, n + n/(cT)]^2 with weights (1, w, w), w = n/(cT(G-1)).
Region setcomp_region(int n, int T, int G, const LatticeOptions &opts = {});

struct DerivativeOptions {
    /// Grid intervals per axis; 0 selects 512 (two variables) or 64 (three).
    int resolution = 0;
    int refinement_rounds = 2;
};

struct DerivativeReport {
    double value = 0.0;
    std::vector<double> at;
    /// Variable name ("g", "N" or "M") of the maximizing partial derivative.
    std::string direction = "g";
};

DerivativeReport weighted_max_derivative(const LatticePoly &q, const Region &region,
                                         const DerivativeOptions &opts = {});

}  // namespace querylab
