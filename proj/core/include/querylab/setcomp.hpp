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

#include "querylab/collision_finding.hpp"
#include "querylab/exact.hpp"
#include "querylab/instance.hpp"
#include "querylab/sampling.hpp"

namespace querylab {

/// Probability that the one-query erasing-oracle test observes 1 in its first
/// register, by exact simulation. Throws the erasing-oracle error on non-injective
/// input.
QSqrt2 erasing_setcomp_probability(const Instance &inst);
/// Same, in double precision.
double erasing_setcomp_probability_float(const Instance &inst);

/// |X symmetric-difference Y| / (4n), from set arithmetic alone.
Rational setcomp_unmatched_probability(const Instance &inst);

/// Runs the test `shots` times; "equal" iff every outcome is 0, else "far".
AlgorithmResult erasing_setcomp_decide(const Instance &inst, int shots, Rng &rng);

}  // namespace querylab
