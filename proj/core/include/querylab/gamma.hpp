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

// Monomial expectations over the structured input families.
//
// gamma(I, g, N) is the probability that monomial I evaluates to 1 on an input drawn
// from D_n(g, N); gamma3(I, g, N, M) is the same over L_n(g, N, M). Closed forms and
// brute-force enumerations are implemented independently of each other.

#pragma once

#include <cstdint>
#include <map>

#include "querylab/enumeration.hpp"
#include "querylab/lattice_poly.hpp"
#include "querylab/monomial.hpp"

namespace querylab {

/// Closed form
///   (N-2T)!/N! * (n-w)!/n! * prod_{i=r}^{2T-1} (N-i) * prod_{i=0}^{w-1} (N-g i)
///     * prod_j prod_{l=1}^{r_j - 1} (g - l).
/// Needs an X-only monomial on {1..n}, a well-defined family (g | N, n <= N, N/g <= n)
/// and r <= 2T <= N. Throws Error otherwise.
Rational gamma_closed(const Monomial &I, int g, int N, int n, int T);

/// Average of I(X) over every (S, X-hat) of D_n(g, N).
Rational gamma_bruteforce(const Monomial &I, int g, int N, int n, uint64_t cap = default_enumeration_cap());
/// One pass over the supports, tallying every monomial of degree <= max_degree that holds.
/// Monomials absent from the result have gamma = 0.
std::map<Monomial, Rational> gamma_bruteforce_table(int g, int N, int n, int max_degree,
                                                    uint64_t cap = default_enumeration_cap());

/// (N-2T)! n! / (N! (n-2T)!). Needs N >= 2T and n >= 2T.
Rational prefactor(int n, int T, int N);

/// Bivariate polynomial in (g, N) with gamma = prefactor(n, T, N) * q_tilde.
/// Total degree at most 2T. Needs r <= 2T <= n.
LatticePoly q_tilde(const Monomial &I, int n, int T);

/// theta_I(g, M) = prod over registers R of
///   prod_{i=0}^{w_R - 1} (M - i kappa(g)) * prod_j prod_{l=1}^{r_{R,j} - 1} (kappa(g) - l),
/// with kappa expanded as 4g^2 - 12g + 9. Variables are named (g, M).
LatticePoly theta_poly(const Monomial &I);

/// Closed form of gamma(I, g, N, M) as a product of binomial ratios. Needs
/// positions in {1..n}, values in {1..2n}, a well-defined family and r_X, r_Y <= M.
Rational gamma3_closed(const Monomial &I, int g, int N, int M, int n, int T);

/// Average of I(X, Y) over every (S, S_X, S_Y, X-hat, Y-hat) of L_n(g, N, M).
Rational gamma3_bruteforce(const Monomial &I, int g, int N, int M, int n, uint64_t cap = default_enumeration_cap());
std::map<Monomial, Rational> gamma3_bruteforce_table(int g, int N, int M, int n, int max_degree,
                                                     uint64_t cap = default_enumeration_cap());

/// (2n)^{2T} / prod_{i=0}^{2T-1} (2N - g i) * [(M-2T)! n! / (M! (n-2T)!)]^2.
Rational prefactor3(int n, int T, int N, int M, int g);

/// Trivariate polynomial in (g, N, M) with gamma3 = prefactor3 * q_tilde3.
/// Total degree at most 8T.
LatticePoly q_tilde3(const Monomial &I, int n, int T);

}  // namespace querylab
