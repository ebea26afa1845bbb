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
#include <functional>
#include <map>
#include <vector>

#include "querylab/exact.hpp"
#include "querylab/instance.hpp"
#include "querylab/lattice.hpp"

namespace querylab {

inline constexpr uint64_t kDefaultEnumerationCap = 10'000'000;

/// The cap from QUERYLAB_ENUM_CAP when set to a positive integer, else 10^7.
uint64_t default_enumeration_cap();

/// One outcome (S, X-hat) of the D_n(g, N) construction.
struct CollisionSupport {
    std::vector<int> support;  // S, sorted
    std::vector<int> x_full;   // X-hat, length N
};

/// C(n, N/g) * N! / (g!)^(N/g).
Integer collision_support_count(const QuasilatticePoint &point, int n);

/// Yields every (S, X-hat) exactly once: lexicographic in S, then lexicographic in
/// X-hat read as a sequence. The constructor throws EnumerationTooLarge when the
/// closed-form count exceeds `cap`.
class CollisionSupportEnumerator {
   public:
    CollisionSupportEnumerator(const QuasilatticePoint &point, int n, uint64_t cap = default_enumeration_cap());

    /// Writes the next pair into `out`; false once exhausted.
    bool next(CollisionSupport &out);
    const Integer &total() const { return total_; }

   private:
    bool advance_subset();
    void reset_function();

    int n_;
    int g_;
    int size_;
    Integer total_;
    std::vector<int> subset_;
    std::vector<int> function_;
    bool started_ = false;
    bool done_ = false;
};

/// One outcome (S, S_X, S_Y, X-hat, Y-hat) of the L_n(g, N, M) construction.
struct SetcompSupport {
    std::vector<int> support;
    std::vector<int> x_support;
    std::vector<int> y_support;
    std::vector<int> x_full;  // length M
    std::vector<int> y_full;
};

/// C(2n, 2N/g) * C(2N/g, m)^2 * (M! / (kappa!)^m)^2 with m = M/kappa(g).
Integer setcomp_support_count(const SuperQuasilatticePoint &point, int n);

void for_each_setcomp_support(const SuperQuasilatticePoint &point, int n, uint64_t cap,
                              const std::function<void(const SetcompSupport &)> &fn);

/// Exact law of the truncated input: multiplicity of each distinct input among all
/// enumerated supports. Keys are x (collision) or x followed by y (set comparison).
struct InputDistribution {
    std::map<std::vector<int>, Integer> counts;
    Integer total;
};

InputDistribution collision_input_distribution(const QuasilatticePoint &point, int n,
                                               uint64_t cap = default_enumeration_cap());
InputDistribution setcomp_input_distribution(const SuperQuasilatticePoint &point, int n,
                                             uint64_t cap = default_enumeration_cap());

/// Rebuilds the instance stored under a distribution key.
Instance instance_from_key(InstanceKind kind, const std::vector<int> &key);

/// Calls fn for every k-subset of {1..m} in lexicographic order.
void for_each_subset(const std::vector<int> &pool, int k, const std::function<void(const std::vector<int> &)> &fn);
/// Calls fn for every multiplicity-to-1 function from {1..multiplicity*|range|} onto
/// `range`, in lexicographic order.
void for_each_k_to_one(const std::vector<int> &range, int multiplicity,
                       const std::function<void(const std::vector<int> &)> &fn);

}  // namespace querylab
