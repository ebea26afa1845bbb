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

#include "querylab/assemble.hpp"

#include <cmath>
#include <functional>

#include "querylab/sampling.hpp"

namespace querylab {

bool collision_hypothesis_holds(int n, int T) { return 9L * T * T <= n; }

bool setcomp_hypothesis_holds(int n, int T) { return 512L * T * T * T <= n; }

namespace {

template <class QTilde>
LatticePoly assemble(const MultilinearPoly &p, int T, int arity, const QTilde &q_tilde_of) {
    LatticePoly q(arity);
    for (const auto &[m, beta] : p.terms()) {
        if (m.degree() > 2 * T) {
            throw Error("degree violation: monomial " + m.str() + " has degree " + std::to_string(m.degree()) +
                        " > 2T = " + std::to_string(2 * T));
        }
        if (!beta.is_rational()) throw Error("irrational coefficient " + beta.str() + " on monomial " + m.str());
        q += q_tilde_of(m) * beta.as_rational();
    }
    return q;
}

Expectation from_counts(const std::function<QSqrt2(const Instance &)> &value, const InputDistribution &dist,
                        InstanceKind kind) {
    QSqrt2 total;
    for (const auto &[key, count] : dist.counts) total += value(instance_from_key(kind, key)) * Rational(count);
    Expectation e;
    e.value = total * make_rational(1, dist.total);
    e.estimate = e.value.to_double();
    return e;
}

Expectation monte_carlo(const std::function<double(const Instance &)> &value,
                        const std::function<Instance(Rng &)> &draw, const ExpectationOptions &opts) {
    if (opts.samples < 2) throw Error("Monte Carlo needs at least two samples");
    Rng rng(opts.seed);
    double sum = 0.0, sum_sq = 0.0;
    for (uint64_t s = 0; s < opts.samples; ++s) {
        double v = value(draw(rng));
        sum += v;
        sum_sq += v * v;
    }
    double k = static_cast<double>(opts.samples);
    double mean = sum / k;
    double var = std::max(0.0, (sum_sq - k * mean * mean) / (k - 1));
    Expectation e;
    e.exact = false;
    e.estimate = mean;
    e.std_error = std::sqrt(var / k);
    e.samples = opts.samples;
    return e;
}

}  // namespace

LatticePoly assemble_q(const MultilinearPoly &p, int n, int T, const AssembleOptions &opts) {
    if (!opts.override_hypotheses && !collision_hypothesis_holds(n, T)) {
        throw Error("hypothesis T <= sqrt(n)/3 fails for n=" + std::to_string(n) + ", T=" + std::to_string(T) +
                    " (override to continue)");
    }
    return assemble(p, T, 2, [&](const Monomial &m) { return q_tilde(m, n, T); });
}

LatticePoly assemble_q3(const MultilinearPoly &p, int n, int T, const AssembleOptions &opts) {
    if (!opts.override_hypotheses && !setcomp_hypothesis_holds(n, T)) {
        throw Error("hypothesis T <= n^(1/3)/8 fails for n=" + std::to_string(n) + ", T=" + std::to_string(T) +
                    " (override to continue)");
    }
    return assemble(p, T, 3, [&](const Monomial &m) { return q_tilde3(m, n, T); });
}

Expectation expected_acceptance(const MultilinearPoly &p, const QuasilatticePoint &point, int n,
                                const ExpectationOptions &opts) {
    try {
        return from_counts([&](const Instance &inst) { return evaluate_poly(p, inst); },
                           collision_input_distribution(point, n, opts.cap), InstanceKind::collision);
    } catch (const EnumerationTooLarge &) {
        if (!opts.monte_carlo_fallback) throw;
    }
    return monte_carlo([&](const Instance &inst) { return evaluate_poly(p, inst).to_double(); },
                       [&](Rng &rng) { return sample_collision_input(point, n, rng); }, opts);
}

Expectation expected_acceptance(const ExactAlgorithm &alg, const QuasilatticePoint &point,
                                const ExpectationOptions &opts) {
    try {
        return from_counts([&](const Instance &inst) { return acceptance_probability(alg, inst); },
                           collision_input_distribution(point, alg.n(), opts.cap), InstanceKind::collision);
    } catch (const EnumerationTooLarge &) {
        if (!opts.monte_carlo_fallback) throw;
    }
    FloatAlgorithm f = to_float(alg);
    return monte_carlo([&](const Instance &inst) { return acceptance_probability(f, inst); },
                       [&](Rng &rng) { return sample_collision_input(point, alg.n(), rng); }, opts);
}

Expectation expected_acceptance(const MultilinearPoly &p, const SuperQuasilatticePoint &point, int n,
                                const ExpectationOptions &opts) {
    try {
        return from_counts([&](const Instance &inst) { return evaluate_poly(p, inst); },
                           setcomp_input_distribution(point, n, opts.cap), InstanceKind::setcomp);
    } catch (const EnumerationTooLarge &) {
        if (!opts.monte_carlo_fallback) throw;
    }
    return monte_carlo([&](const Instance &inst) { return evaluate_poly(p, inst).to_double(); },
                       [&](Rng &rng) { return sample_setcomp_input(point, n, rng); }, opts);
}

Expectation expected_acceptance(const ExactAlgorithm &alg, const SuperQuasilatticePoint &point,
                                const ExpectationOptions &opts) {
    try {
        return from_counts([&](const Instance &inst) { return acceptance_probability(alg, inst); },
                           setcomp_input_distribution(point, alg.n(), opts.cap), InstanceKind::setcomp);
    } catch (const EnumerationTooLarge &) {
        if (!opts.monte_carlo_fallback) throw;
    }
    FloatAlgorithm f = to_float(alg);
    return monte_carlo([&](const Instance &inst) { return acceptance_probability(f, inst); },
                       [&](Rng &rng) { return sample_setcomp_input(point, alg.n(), rng); }, opts);
}

}  // namespace querylab
