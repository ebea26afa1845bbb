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

#include <gtest/gtest.h>

#include <cmath>

#include "querylab/assemble.hpp"
#include "querylab/chain.hpp"
#include "querylab/circuits.hpp"
#include "querylab/derivative.hpp"
#include "querylab/extract.hpp"
#include "querylab/markov.hpp"
#include "querylab/sampling.hpp"

namespace querylab {
namespace {

TEST(Markov, LinearCase) {
    EXPECT_DOUBLE_EQ(markov_bound(1, 0, 1, 0, 1), 1.0);
    UniPoly x{{0.0, 1.0}};
    EXPECT_NEAR(max_abs_derivative(x, 0, 1).value, 1.0, 1e-12);
}

TEST(Markov, CubicChebyshev) {
    EXPECT_DOUBLE_EQ(markov_bound(3, -1, 1, -1, 1), 9.0);
    EXPECT_NEAR(chebyshev(3).derivative()(1.0), 9.0, 1e-12);
}

TEST(Markov, ChebyshevAttainsBound) {
    for (int d = 2; d <= 8; ++d) {
        double measured = max_abs_derivative(chebyshev(d), -1, 1).value;
        EXPECT_NEAR(measured, d * d, 1e-9) << d;
        double ratio = measured / markov_bound(d, -1, 1, -1, 1);
        EXPECT_GE(ratio, 1 - 1e-9);
        EXPECT_LE(ratio, 1 + 1e-12);
    }
}

TEST(Markov, RandomPolynomialsNeverExceed) {
    Rng rng(1000);
    for (int k = 0; k < 1000; ++k) {
        int d = 1 + static_cast<int>(uniform_index(rng, 8));
        UniPoly p;
        for (int j = 0; j <= d; ++j) p.coeffs.push_back(2 * uniform_unit(rng) - 1);
        double a = -1 + 2 * uniform_unit(rng), b = a + 0.1 + uniform_unit(rng);
        auto [lo, hi] = range_on_interval(p, a, b);
        if (hi - lo < 1e-9) continue;
        double bound = markov_bound(p.degree(), a, b, lo, hi);
        EXPECT_LE(max_abs_derivative(p, a, b).value, bound + 1e-9);
    }
}

TEST(WeightedDerivative, ConstantIsZero) {
    Region r = collision_region(100, 1, 3);
    EXPECT_EQ(weighted_max_derivative(LatticePoly::constant(2, 5), r).value, 0.0);
}

TEST(WeightedDerivative, HalfG) {
    Region r = collision_region(100, 1, 3);
    auto q = LatticePoly::variable(2, 0) * Rational(1, 2);
    auto rep = weighted_max_derivative(q, r);
    EXPECT_NEAR(rep.value, 0.5, 1e-12);
    EXPECT_EQ(rep.direction, "g");
}

TEST(WeightedDerivative, RealCircuitConvergesUnderRefinement) {
    auto alg = builtin_algorithm("interference", 4);
    auto q = assemble_q(extract_polynomial(alg), 4, 1, AssembleOptions{true});
    Region r = collision_region(4, 1, 2);
    double coarse = weighted_max_derivative(q, r).value;
    DerivativeOptions fine;
    fine.resolution = 5120;
    EXPECT_NEAR(coarse, weighted_max_derivative(q, r, fine).value, 1e-6);

    auto mixer = assemble_q(extract_polynomial(builtin_algorithm("mixer", 4)), 4, 2, AssembleOptions{true});
    EXPECT_NEAR(weighted_max_derivative(mixer, r).value, weighted_max_derivative(mixer, r, fine).value, 1e-6);
}

TEST(WeightedDerivative, MonotoneUnderNestedGrids) {
    auto q = assemble_q(extract_polynomial(builtin_algorithm("mixer", 4)), 4, 2, AssembleOptions{true});
    Region r = collision_region(4, 2, 2);
    double last = 0.0;
    for (int res = 4; res <= 1024; res *= 2) {
        DerivativeOptions o;
        o.resolution = res;
        o.refinement_rounds = 0;
        double v = weighted_max_derivative(q, r, o).value;
        EXPECT_GE(v, last - 1e-9) << res;
        last = v;
    }
}

TEST(WeightedDerivative, ThreeVariables) {
    Region r = setcomp_region(1000, 1, 3);
    auto q = LatticePoly::variable(3, 2) * Rational(3);
    auto rep = weighted_max_derivative(q, r);
    EXPECT_NEAR(rep.value, 3 * r.weights[2], 1e-9);
    EXPECT_EQ(rep.direction, "M");
}

TEST(DegreeBound, FixedConstantsExample) {
    double v = degree_lower_bound(0.436, 101, 10, 100000);
    EXPECT_NEAR(v, std::sqrt(4.36e6 / (2.236e5 + 8.720 * 10 * 101 * 100)), 1e-9);
    EXPECT_NEAR(v, 1.987, 5e-4);
}

TEST(DegreeBound, ZeroDerivativeGivesZero) {
    EXPECT_EQ(degree_lower_bound(0.0, 10, 1, 10000), 0.0);
    EXPECT_EQ(general_degree_bound(0.0, 10, 0.182, 2.0), 0.0);
}

TEST(DegreeBound, IncreasingInD) {
    double last = 0.0;
    for (double d = 0.01; d < 100; d *= 1.5) {
        double v = general_degree_bound(d, 20, 0.1, 2.0);
        EXPECT_GT(v, last);
        last = v;
    }
}

TEST(Chain, AlwaysAcceptIsTrivial) {
    auto rep = verify_inequality_chain(builtin_algorithm("always-accept", 4), ChainVariant::collision);
    EXPECT_FALSE(rep.distinguisher);
    EXPECT_EQ(rep.derivative.value, 0.0);
    EXPECT_EQ(rep.bound, 0.0);
    EXPECT_TRUE(rep.consistent);
}

TEST(Chain, OneQueryCircuitIsConsistent) {
    auto rep = verify_inequality_chain(builtin_algorithm("interference", 4), ChainVariant::collision);
    EXPECT_TRUE(rep.consistent);
    EXPECT_TRUE(rep.slope_consistent);
    EXPECT_LE(rep.q_degree, rep.degree_cap);
    ASSERT_FALSE(rep.rows.empty());
    for (const auto &row : rep.rows) {
        EXPECT_EQ(row.P, row.prefactor * row.q);
        EXPECT_LE(row.deviation, row.deviation_bound);
    }
    ASSERT_TRUE(rep.p_one && rep.p_two);
    EXPECT_EQ(*rep.p_one, Rational(1, 4));
    EXPECT_EQ(*rep.p_two, Rational(1, 2));
}

TEST(Chain, EveryBuiltinIsConsistent) {
    for (const char *name : {"always-accept", "x1-equals-1", "interference", "pair-equality", "mixer"}) {
        auto rep = verify_inequality_chain(builtin_algorithm(name, 4), ChainVariant::collision);
        EXPECT_TRUE(rep.consistent) << name;
        EXPECT_GE(rep.degree_cap, rep.bound) << name;
    }
    auto rep = verify_inequality_chain(builtin_algorithm("register-compare", 8), ChainVariant::setcomp);
    EXPECT_TRUE(rep.consistent);
    EXPECT_LE(rep.q_degree, 8 * rep.T);
}

TEST(Chain, WrongVariantRejected) {
    EXPECT_THROW(verify_inequality_chain(builtin_algorithm("interference", 4), ChainVariant::setcomp), Error);
}

TEST(Chain, NegativeControlIsInconsistent) {
    auto rep = negative_control();
    EXPECT_TRUE(rep.synthetic);
    EXPECT_FALSE(rep.consistent);
    EXPECT_GT(rep.bound, rep.degree_cap);
}

}  // namespace
}  // namespace querylab
