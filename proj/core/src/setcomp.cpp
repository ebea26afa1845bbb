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

#include "querylab/setcomp.hpp"

#include <set>

#include "querylab/circuits.hpp"

namespace querylab {

namespace {

void check(const Instance &inst) {
    if (inst.kind() != InstanceKind::setcomp) throw Error("set comparison needs a setcomp instance");
}

}  // namespace

QSqrt2 erasing_setcomp_probability(const Instance &inst) {
    check(inst);
    return acceptance_probability(builtin_algorithm("erasing-setcomp", inst.n()), inst);
}

double erasing_setcomp_probability_float(const Instance &inst) {
    check(inst);
    return acceptance_probability(to_float(builtin_algorithm("erasing-setcomp", inst.n())), inst);
}

Rational setcomp_unmatched_probability(const Instance &inst) {
    check(inst);
    std::set<int> xs(inst.x().begin(), inst.x().end()), ys(inst.y().begin(), inst.y().end());
    long diff = 0;
    for (int v : xs) diff += ys.count(v) == 0;
    for (int v : ys) diff += xs.count(v) == 0;
    return make_rational(diff, 4L * inst.n());
}

AlgorithmResult erasing_setcomp_decide(const Instance &inst, int shots, Rng &rng) {
    check(inst);
    if (shots < 1) throw Error("need at least one shot");
    FloatAlgorithm alg = to_float(builtin_algorithm("erasing-setcomp", inst.n()));
    StateVector<double> final_state = run(alg, inst);
    AlgorithmResult r;
    r.decision = "equal";
    for (int s = 0; s < shots; ++s) {
        BasisState b = sample_measurement(final_state, rng);
        if (b.reg == Register::Y) r.decision = "far";
    }
    r.queries_used = shots;
    r.trials = shots;
    return r;
}

}  // namespace querylab
