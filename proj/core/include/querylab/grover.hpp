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
#include <vector>

#include "querylab/simulator.hpp"

namespace querylab {

template <class A>
struct GroverResult {
    int items = 0;   // m
    int padded = 0;  // next power of two >= m; padding items are never marked
    int marked = 0;
    int iterations = 0;
    /// Measurement distribution over positions 1..padded.
    std::vector<A> probabilities;
    A marked_probability{};
};

/// State-vector Grover search over {1..m}: uniform start, then `iterations` rounds of
/// phase oracle and inversion about the mean, each applied as an orthogonal layer.
template <class A>
GroverResult<A> grover_search(int m, const std::function<bool(int)> &marked, int iterations);

/// sin^2((2t + 1) theta) with sin^2 theta = marked / padded.
double grover_closed_form(int marked, int padded, int iterations);

/// Smallest power of two >= m.
int grover_padding(int m);

}  // namespace querylab
