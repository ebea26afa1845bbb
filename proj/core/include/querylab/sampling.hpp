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
#include <random>
#include <vector>

#include "querylab/instance.hpp"
#include "querylab/lattice.hpp"

namespace querylab {

/// Every randomized routine takes one of these by reference. The helpers below avoid
/// the standard distributions so that a seed reproduces the same draws on every
/// standard library.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be positive.
uint64_t uniform_index(Rng &rng, uint64_t bound);
/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng &rng);
/// Independent per-trial seed (splitmix64 of seed and index).
uint64_t derive_seed(uint64_t seed, uint64_t index);

template <class T>
void shuffle_in_place(std::vector<T> &v, Rng &rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = uniform_index(rng, i);
        std::swap(v[i - 1], v[j]);
    }
}

/// Uniform k-subset of {1..m}, sorted.
std::vector<int> sample_subset(int m, int k, Rng &rng);
/// Uniform k-subset of the given pool, sorted.
std::vector<int> sample_subset_of(const std::vector<int> &pool, int k, Rng &rng);
/// Uniform multiplicity-to-1 function from {1..domain} onto `range`
/// (domain == multiplicity * range.size()).
std::vector<int> sample_k_to_one(const std::vector<int> &range, int multiplicity, Rng &rng);

/// Draw from D_n(g, N): S uniform of size N/g in {1..n}, X-hat uniform g-to-1 from
/// {1..N} onto S, truncated to the first n positions. The latent draw is attached.
Instance sample_collision_input(const QuasilatticePoint &point, int n, Rng &rng);

/// Draw from L_n(g, N, M): S uniform of size 2N/g in {1..2n}; S_X, S_Y independent
/// uniform subsets of S of size M/kappa(g); X-hat, Y-hat independent kappa(g)-to-1
/// functions from {1..M}; both truncated to n. The latent draw is attached.
Instance sample_setcomp_input(const SuperQuasilatticePoint &point, int n, Rng &rng);

}  // namespace querylab
