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

#include <optional>
#include <string>
#include <utility>

#include "querylab/instance.hpp"
#include "querylab/sampling.hpp"

namespace querylab {

/// Outcome of a decision or search algorithm. decision is one of "one-to-one",
/// "two-to-one", "equal", "far" or "collision"; a collision carries positions i != j
/// with x_i = x_j, checked against the instance before returning.
struct AlgorithmResult {
    std::string decision;
    std::optional<std::pair<int, int>> collision;
    int queries_used = 0;
    int trials = 0;
};

struct BhtOptions {
    /// Grover runs after the first one when it misses.
    int reruns = 1;
};

/// Samples k = ceil(n^(1/3)) positions, looks for a collision among them, and otherwise
/// Grover-searches the remaining positions for a partner of a sampled value. Queries
/// are counted as k for the sample, 2 per Grover iteration (mark and unmark), and 1 to
/// read each measured position.
/// Throws Error("not k-to-one") unless x is one-to-one or two-to-one. For odd n the
/// two-to-one promise admits a single unpaired value.
AlgorithmResult bht_collision(const Instance &inst, Rng &rng, const BhtOptions &opts = {});

/// True if every value occurs exactly twice, except one value occurring once when n is odd.
bool is_paired(const Instance &inst);

/// Uniform one-to-one input over values 1..n.
Instance sample_one_to_one(int n, Rng &rng);
/// floor(n/2) pairs (plus one singleton for odd n) on distinct values from 1..n, shuffled.
Instance sample_paired(int n, Rng &rng);

/// ceil(n^(1/3)).
int bht_sample_size(int n);

/// Reads uniformly random positions without replacement until a value repeats or the
/// budget is used up.
AlgorithmResult classical_birthday(const Instance &inst, Rng &rng, int budget);

}  // namespace querylab
