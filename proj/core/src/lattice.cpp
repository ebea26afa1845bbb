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

#include "querylab/lattice.hpp"

namespace querylab {

long kappa(long g) { return 4 * g * g - 12 * g + 9; }

std::string to_string(const QuasilatticePoint &p) {
    return "(" + std::to_string(p.g) + "," + std::to_string(p.N) + ")";
}

std::string to_string(const SuperQuasilatticePoint &p) {
    return "(" + std::to_string(p.g) + "," + std::to_string(p.N) + "," + std::to_string(p.M) + ")";
}

namespace {

void check_nt(int n, int T) {
    if (n < 1) throw Error("n must be positive");
    if (T < 1) throw Error("T must be at least 1");
}

}  // namespace

Rational collision_n_upper(int n, int T, const LatticeOptions &opts) {
    check_nt(n, T);
    return Rational(n) + make_rational(n, opts.collision_width_denominator * T);
}

Rational setcomp_n_upper(int n, int T, const LatticeOptions &opts) {
    check_nt(n, T);
    return Rational(n) + make_rational(n, opts.setcomp_width_denominator * T);
}

bool is_quasilattice_point(const QuasilatticePoint &p, int n, int T, const LatticeOptions &opts) {
    if (p.g < 1 || p.N % p.g != 0) return false;                               // (1)
    if (static_cast<long>(p.g) * p.g > n) return false;                        // (2)
    if (p.N < n || Rational(p.N) > collision_n_upper(n, T, opts)) return false;  // (3)
    if (p.g == 1 && p.N != n) return false;                                    // (4)
    return true;
}

bool is_super_quasilattice_point(const SuperQuasilatticePoint &p, int n, int T, const LatticeOptions &opts) {
    if (p.g < 1 || static_cast<long>(p.g) * p.g * p.g > n) return false;  // (1)
    Rational hi = setcomp_n_upper(n, T, opts);
    if (p.N < n || Rational(p.N) > hi) return false;  // (2)
    if (p.M < n || Rational(p.M) > hi) return false;
    if (p.N % p.g != 0) return false;             // (3)
    if (p.g == 1 && p.N != n) return false;       // (4)
    if (p.M % kappa(p.g) != 0) return false;      // (5)
    if (p.g == 2 && p.M != n) return false;       // (6)
    return true;
}

std::vector<QuasilatticePoint> quasilattice_points(int n, int T, int G, const LatticeOptions &opts) {
    check_nt(n, T);
    if (G < 1 || static_cast<long>(G) * G > n) throw Error("g out of range");
    Rational hi = collision_n_upper(n, T, opts);
    std::vector<QuasilatticePoint> out;
    for (int g = 1; g <= G; ++g) {
        for (int N = n; Rational(N) <= hi; ++N) {
            QuasilatticePoint p{g, N};
            if (is_quasilattice_point(p, n, T, opts)) out.push_back(p);
        }
    }
    return out;
}

std::vector<SuperQuasilatticePoint> super_quasilattice_points(int n, int T, int G, const LatticeOptions &opts) {
    check_nt(n, T);
    if (G < 1 || static_cast<long>(G) * G * G > n) throw Error("g out of range");
    Rational hi = setcomp_n_upper(n, T, opts);
    std::vector<SuperQuasilatticePoint> out;
    for (int g = 1; g <= G; ++g) {
        for (int N = n; Rational(N) <= hi; ++N) {
            for (int M = n; Rational(M) <= hi; ++M) {
                SuperQuasilatticePoint p{g, N, M};
                if (is_super_quasilattice_point(p, n, T, opts)) out.push_back(p);
            }
        }
    }
    return out;
}

bool is_collision_family_valid(const QuasilatticePoint &p, int n) {
    return p.g >= 1 && p.N >= n && p.N % p.g == 0 && p.N / p.g <= n;
}

bool is_setcomp_family_valid(const SuperQuasilatticePoint &p, int n) {
    if (p.g < 1 || p.N % p.g != 0 || p.M < n) return false;
    long k = kappa(p.g);
    if (p.M % k != 0) return false;
    long s = 2L * p.N / p.g;
    return s <= 2L * n && p.M / k <= s;
}

}  // namespace querylab
