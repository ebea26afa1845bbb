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
#include <utility>
#include <vector>

namespace querylab {

/// (b2 - b1) / (a2 - a1) * degree^2. Throws Error if a2 <= a1, b2 < b1 or degree < 0.
double markov_bound(int degree, double a1, double a2, double b1, double b2);

/// Univariate polynomial in the power basis, lowest degree first.
struct UniPoly {
    std::vector<double> coeffs;

    int degree() const;
    double operator()(double x) const;
    UniPoly derivative() const;
};

/// Chebyshev polynomial of the first kind, T_d.
UniPoly chebyshev(int d);

struct Extremum {
    double value = 0.0;
    double at = 0.0;
};

/// Maximum of f on [a, b]: dense grid plus golden-section polishing of every grid
/// local maximum. Endpoints are always sampled.
Extremum maximize_on_interval(const std::function<double(double)> &f, double a, double b, int grid = 4096);

/// (min, max) of p on [a, b].
std::pair<double, double> range_on_interval(const UniPoly &p, double a, double b);
/// max |p'| on [a, b] and where it is attained.
Extremum max_abs_derivative(const UniPoly &p, double a, double b);

}  // namespace querylab
