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

#include <cstdint>

#include "querylab/enumeration.hpp"
#include "querylab/gamma.hpp"
#include "querylab/multilinear.hpp"
#include "querylab/simulator.hpp"

namespace querylab {

struct AssembleOptions {
    /// Skip the T <= sqrt(n)/3 (collision) and T <= n^(1/3)/8 (set comparison) checks.
    bool override_hypotheses = false;
};

/// True iff 9 T^2 <= n.
bool collision_hypothesis_holds(int n, int T);
/// True iff 512 T^3 <= n.
bool setcomp_hypothesis_holds(int n, int T);

/// q(g, N) = sum_I beta_I q_tilde_{n,T,I}(g, N). Throws Error("degree violation") if
/// some monomial has degree > 2T, and Error when a coefficient is irrational or the
/// hypothesis fails without override.
LatticePoly assemble_q(const MultilinearPoly &p, int n, int T, const AssembleOptions &opts = {});

/// q(g, N, M) = sum_I beta_I q_tilde3_{n,T,I}(g, N, M), total degree <= 8T.
LatticePoly assemble_q3(const MultilinearPoly &p, int n, int T, const AssembleOptions &opts = {});

struct ExpectationOptions {
    uint64_t cap = default_enumeration_cap();
    /// When the enumeration is too large, estimate by sampling instead of throwing.
    bool monte_carlo_fallback = false;
    uint64_t samples = 10000;
    uint64_t seed = 1;
};

/// Exact average, or a Monte Carlo estimate with its standard error.
struct Expectation {
    bool exact = true;
    QSqrt2 value;
    double estimate = 0.0;
    double std_error = 0.0;
    uint64_t samples = 0;
};

/// EX_{X in D_n(g,N)} p(X). Exact enumeration unless it exceeds the cap.
Expectation expected_acceptance(const MultilinearPoly &p, const QuasilatticePoint &point, int n,
                                const ExpectationOptions &opts = {});
/// Same, simulating the algorithm on each distinct input.
Expectation expected_acceptance(const ExactAlgorithm &alg, const QuasilatticePoint &point,
                                const ExpectationOptions &opts = {});
/// EX_{(X,Y) in L_n(g,N,M)} p(X, Y).
Expectation expected_acceptance(const MultilinearPoly &p, const SuperQuasilatticePoint &point, int n,
                                const ExpectationOptions &opts = {});
Expectation expected_acceptance(const ExactAlgorithm &alg, const SuperQuasilatticePoint &point,
                                const ExpectationOptions &opts = {});

}  // namespace querylab
