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

// The degree lower-bound argument evaluated at concrete (n, T, G).
//
// From the assembled polynomial q and the exact expectations P at lattice points the
// chain computes: eps = max |P - q|, d(q), the covering distances from arbitrary
// region points to lattice points, and the Markov-inequality lower bound on deg(q).
// A genuine T-query algorithm must satisfy degree cap (2T, or 8T for set comparison)
// >= that bound; a violation means an implementation bug.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "querylab/assemble.hpp"
#include "querylab/derivative.hpp"
#include "querylab/lattice.hpp"

namespace querylab {

/// sqrt(d (G-1) / (1.364 + 2 d (1 + 10 T G (G-1) / n))); 0 when d = 0.
double degree_lower_bound(double d, int G, int T, int n);

/// sqrt(d (G-1) / (1 + 2 eps + 2 d K)) for measured eps and covering factor K.
double general_degree_bound(double d, int G, double eps, double K);

enum class ChainVariant { collision, setcomp };
std::string to_string(ChainVariant v);

struct ChainOptions {
    /// 0 picks the largest admissible G: floor(sqrt n) or floor(n^(1/3)).
    int G = 0;
    LatticeOptions lattice;
    DerivativeOptions derivative;
    uint64_t cap = default_enumeration_cap();
    /// When enumeration exceeds the cap, take P = prefactor * q at that point.
    bool identity_fallback = true;
};

struct ChainRow {
    std::vector<int> point;  // (g, N) or (g, N, M)
    Rational P;
    std::string P_source;    // "enumeration" or "identity"
    Rational q;
    Rational prefactor;
    Rational deviation;        // |P - q|
    Rational deviation_bound;  // (1/prefactor - 1) * P
};

struct ChainReport {
    std::string algorithm;
    ChainVariant variant = ChainVariant::collision;
    int n = 0;
    int T = 0;
    int G = 0;
    int degree_cap = 0;  // 2T or 8T
    int extracted_degree = 0;
    int q_degree = 0;
    bool hypotheses_hold = true;
    bool synthetic = false;

    LatticePoly q;
    std::vector<ChainRow> rows;

    std::optional<Rational> p_one;  // P at g = 1
    std::optional<Rational> p_two;  // P at g = 2
    bool distinguisher = false;
    std::optional<Rational> slope;  // q(2, n[, n]) - q(1, n[, n])

    DerivativeReport derivative;
    double epsilon = 0.0;
    bool covering = false;
    double gap_N = 0.0;
    double gap_M = 0.0;
    double K = 0.0;

    double bound = 0.0;        // measured eps, K and d
    double bound_fixed = 0.0;  // eps = 0.182 and the standard covering distances
    double bound_direct = 0.0; // Markov on the actual range of q along the maximizing line

    bool slope_consistent = true;  // d(q) >= |slope|
    bool consistent = true;        // degree_cap >= bound
};

ChainReport verify_inequality_chain(const ExactAlgorithm &alg, ChainVariant variant, const ChainOptions &opts = {});

/// Chain for a given q with no acceptance data: eps is taken as 0.182.
ChainReport chain_for_polynomial(const LatticePoly &q, ChainVariant variant, int n, int T, const ChainOptions &opts = {});

/// q(g, N) = steepness * (g - 1): far outside [0, 1] on the region, so the chain must
/// report a bound above 2T. Defaults n = 10^4, T = 1, G = 50.
ChainReport negative_control(double steepness = 1.0, int n = 10000, int T = 1, int G = 50);

}  // namespace querylab
