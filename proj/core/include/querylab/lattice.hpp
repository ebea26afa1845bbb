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

#include <compare>
#include <string>
#include <vector>

#include "querylab/exact.hpp"

namespace querylab {

/// 4g^2 - 12g + 9; equals 1 at g = 1 and g = 2.
long kappa(long g);

/// Parameters (g, N) of a g-to-1 collision input family on {1..N} truncated to n.
struct QuasilatticePoint {
    int g = 1;
    int N = 0;
    auto operator<=>(const QuasilatticePoint &) const = default;
};

/// Parameters (g, N, M) of the set-comparison input family.
struct SuperQuasilatticePoint {
    int g = 1;
    int N = 0;
    int M = 0;
    auto operator<=>(const SuperQuasilatticePoint &) const = default;
};

std::string to_string(const QuasilatticePoint &p);
std::string to_string(const SuperQuasilatticePoint &p);

/// Width constants of the parameter rectangles: N ranges over [n, n + n/(c*T)].
/// The defaults are the standard 10 (collision) and 100 (set comparison); larger
/// values narrow the N range and push the prefactor toward 1.
struct LatticeOptions {
    long collision_width_denominator = 10;
    long setcomp_width_denominator = 100;
};

/// Upper end n + n/(c*T) of the N interval, exact.
Rational collision_n_upper(int n, int T, const LatticeOptions &opts = {});
Rational setcomp_n_upper(int n, int T, const LatticeOptions &opts = {});

/// True iff (g, N) satisfies all four quasilattice conditions for (n, T).
bool is_quasilattice_point(const QuasilatticePoint &p, int n, int T, const LatticeOptions &opts = {});
/// True iff (g, N, M) satisfies all six super-quasilattice conditions for (n, T).
bool is_super_quasilattice_point(const SuperQuasilatticePoint &p, int n, int T, const LatticeOptions &opts = {});

/// Every (n,T)-quasilattice point with g <= G, sorted by (g, N).
/// Throws Error("g out of range") if G > sqrt(n).
std::vector<QuasilatticePoint> quasilattice_points(int n, int T, int G, const LatticeOptions &opts = {});

/// Every (n,T)-super-quasilattice point with g <= G, sorted by (g, N, M).
/// Throws Error("g out of range") if G > n^(1/3).
std::vector<SuperQuasilatticePoint> super_quasilattice_points(int n, int T, int G,
                                                              const LatticeOptions &opts = {});

/// Whether D_n(g, N) is well defined: g | N, N >= n, and N/g <= n.
bool is_collision_family_valid(const QuasilatticePoint &p, int n);
/// Whether L_n(g, N, M) is well defined: g | N, kappa(g) | M, M >= n,
/// 2N/g <= 2n, and M/kappa(g) <= 2N/g.
bool is_setcomp_family_valid(const SuperQuasilatticePoint &p, int n);

}  // namespace querylab
