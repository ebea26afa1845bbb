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

#include "querylab/assemble.hpp"
#include "querylab/circuits.hpp"
#include "querylab/extract.hpp"
#include "querylab/gamma.hpp"
#include "querylab/lattice.hpp"
#include "querylab/sampling.hpp"
#include "test_support.hpp"

namespace querylab {
namespace {

Indicator X(int i, int h) { return Indicator{Register::X, i, h}; }
Indicator Y(int i, int h) { return Indicator{Register::Y, i, h}; }
Monomial mono(std::vector<Indicator> f) { return *Monomial::from(std::move(f)); }

const AssembleOptions kOverride{true};

TEST(Extract, AlwaysAcceptIsConstantOne) {
    auto p = extract_polynomial(builtin_algorithm("always-accept", 4));
    EXPECT_EQ(p, MultilinearPoly(QSqrt2(1)));
    EXPECT_EQ(p.degree(), 0);
}

TEST(Extract, FirstValueTestIsSingleIndicator) {
    auto p = extract_polynomial(builtin_algorithm("x1-equals-1", 2));
    MultilinearPoly want;
    want.add(Monomial::single(X(1, 1)), QSqrt2(1));
    EXPECT_EQ(p, want);
    EXPECT_EQ(p.degree(), 1);
}

TEST(EvaluatePoly, Examples) {
    MultilinearPoly d;
    d.add(Monomial::single(X(1, 1)), QSqrt2(1));
    EXPECT_EQ(evaluate_poly(d, Instance::collision({1, 2})), QSqrt2(1));
    EXPECT_EQ(evaluate_poly(MultilinearPoly(QSqrt2(1)), Instance::collision({2, 2})), QSqrt2(1));
    auto alg = builtin_algorithm("interference", 2);
    Instance inst = Instance::collision({2, 1});
    EXPECT_EQ(evaluate_poly(extract_polynomial(alg), inst), acceptance_probability(alg, inst));
}

TEST(PolynomialRepresentation, ExhaustiveAtNFour) {
    for (const char *name : {"always-accept", "x1-equals-1", "interference", "pair-equality", "mixer"}) {
        auto alg = builtin_algorithm(name, 4);
        auto p = extract_polynomial(alg);
        EXPECT_LE(p.degree(), 2 * alg.queries()) << name;
        int checked = 0;
        testing::for_each_collision_instance(4, [&](const Instance &inst) {
            ASSERT_EQ(evaluate_poly(p, inst), acceptance_probability(alg, inst)) << name;
            ++checked;
        });
        EXPECT_EQ(checked, 256);
    }
}

TEST(PolynomialRepresentation, ExhaustiveSetComparisonAtNTwo) {
    auto alg = builtin_algorithm("register-compare", 2);
    auto p = extract_polynomial(alg);
    EXPECT_LE(p.degree(), 2 * alg.queries());
    testing::for_each_setcomp_instance(2, [&](const Instance &inst) {
        ASSERT_EQ(evaluate_poly(p, inst), acceptance_probability(alg, inst));
    });
}

TEST(PolynomialRepresentation, SampledAtNEight) {
    Rng rng(8);
    for (const char *name : {"x1-equals-1", "interference", "pair-equality", "mixer"}) {
        auto alg = builtin_algorithm(name, 8);
        auto p = extract_polynomial(alg);
        EXPECT_LE(p.degree(), 2 * alg.queries());
        for (int k = 0; k < 40; ++k) {
            std::vector<int> x(8);
            for (int &v : x) v = 1 + static_cast<int>(uniform_index(rng, 8));
            Instance inst = Instance::collision(x);
            ASSERT_EQ(evaluate_poly(p, inst), acceptance_probability(alg, inst)) << name;
        }
    }
}

TEST(PolynomialRepresentation, MixerHasIrrationalIntermediateAmplitudes) {
    auto sym = extract_amplitudes(builtin_algorithm("mixer", 4));
    bool irrational = false;
    for (const auto &[s, poly] : sym.amplitudes) irrational = irrational || !poly.has_rational_coefficients();
    EXPECT_TRUE(irrational);
}

TEST(PolyFile, RoundTrip) {
    auto p = extract_polynomial(builtin_algorithm("mixer", 4));
    EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
}

TEST(Monomial, ConflictingFactorsHaveNoMonomial) {
    EXPECT_FALSE(Monomial::from({X(1, 1), X(1, 2)}).has_value());
    EXPECT_EQ(mono({X(1, 1), X(1, 1)}).degree(), 1);
}

TEST(GammaClosed, SingleIndicatorIsOneOverN) {
    for (int g = 1; g <= 8; ++g) {
        for (int N = 4; N <= 8; ++N) {
            if (!is_collision_family_valid({g, N}, 4)) continue;
            for (int h = 1; h <= 4; ++h) {
                EXPECT_EQ(gamma_closed(Monomial::single(X(1, h)), g, N, 4, 1), Rational(1, 4));
                EXPECT_EQ(gamma_bruteforce(Monomial::single(X(1, h)), g, N, 4), Rational(1, 4));
            }
        }
    }
}

TEST(GammaClosed, PairExamples) {
    Monomial pair = mono({X(1, 2), X(2, 2)});
    EXPECT_EQ(gamma_closed(pair, 1, 4, 4, 1), 0);
    EXPECT_EQ(gamma_closed(pair, 2, 4, 4, 1), Rational(1, 12));
    EXPECT_EQ(gamma_bruteforce(pair, 2, 4, 4), Rational(1, 12));
}

TEST(GammaBruteforce, EmptyMonomialIsOne) {
    EXPECT_EQ(gamma_bruteforce(Monomial(), 2, 6, 4), 1);
    EXPECT_EQ(gamma3_bruteforce(Monomial(), 1, 2, 2, 2), 1);
    EXPECT_EQ(gamma3_closed(Monomial(), 1, 2, 2, 2, 1), 1);
}

TEST(GammaBruteforce, TableAgreesWithSingleMonomialWalk) {
    auto table = gamma_bruteforce_table(2, 6, 4, 3);
    Rng rng(6);
    auto all = all_monomials(1, 4, 4, 3);
    for (int k = 0; k < 30; ++k) {
        const auto &I = all[uniform_index(rng, all.size())];
        auto it = table.find(I);
        EXPECT_EQ(it == table.end() ? Rational(0) : it->second, gamma_bruteforce(I, 2, 6, 4)) << I.str();
    }
}

TEST(GammaClosed, BoundsAndVanishing) {
    for (const auto &I : all_monomials(1, 4, 4, 3)) {
        auto st = I.stats();
        int max_mult = 0;
        for (int m : st.mult) max_mult = std::max(max_mult, m);
        for (QuasilatticePoint p : {QuasilatticePoint{1, 4}, QuasilatticePoint{2, 4}, QuasilatticePoint{2, 6}}) {
            Rational v = gamma_closed(I, p.g, p.N, 4, 2);
            EXPECT_GE(v, 0);
            EXPECT_LE(v, 1);
            if (max_mult > p.g) {
                EXPECT_EQ(v, 0) << I.str();
            }
        }
    }
}

TEST(QTilde, SingleIndicatorAtNFour) {
    LatticePoly q = q_tilde(Monomial::single(X(1, 3)), 4, 1);
    EXPECT_EQ(q.evaluate(std::vector<Rational>{1, 4}), Rational(1, 4));
    // (3! 2! / (4!)^2) (N - 1) N
    LatticePoly want(2);
    want.add_term({0, 2, 0}, Rational(1, 48));
    want.add_term({0, 1, 0}, Rational(-1, 48));
    EXPECT_EQ(q, want);
}

TEST(QTilde, VanishesWhenMultiplicityExceedsG) {
    Monomial triple = mono({X(1, 2), X(2, 2), X(3, 2)});
    LatticePoly q = q_tilde(triple, 6, 2);
    for (int N : {6, 8, 10}) EXPECT_EQ(q.evaluate(std::vector<Rational>{2, N}), 0);
    EXPECT_NE(q.evaluate(std::vector<Rational>{3, 6}), 0);
}

TEST(QTilde, DegreeAtMostTwoT) {
    Rng rng(100);
    auto all = all_monomials(1, 6, 6, 6);
    for (int k = 0; k < 100; ++k) {
        const auto &I = all[uniform_index(rng, all.size())];
        int T = std::max(1, (I.degree() + 1) / 2);
        EXPECT_LE(q_tilde(I, 6, T).degree(), 2 * T) << I.str();
    }
}

TEST(Prefactor, Examples) {
    EXPECT_EQ(prefactor(100, 3, 100), 1);
    EXPECT_EQ(prefactor(100, 3, 102), make_rational(9120, 10302));
    for (int N = 10000; N <= 10030; ++N) {
        Rational p = prefactor(10000, 33, N);
        EXPECT_GE(p.get_d(), 0.818);
        EXPECT_LE(p, 1);
    }
}

TEST(AssembleQ, ConstantIsEmptyMonomialTerm) {
    auto q = assemble_q(MultilinearPoly(QSqrt2(1)), 4, 1, kOverride);
    EXPECT_EQ(q, q_tilde(Monomial(), 4, 1));
}

TEST(AssembleQ, SingleIndicator) {
    MultilinearPoly p;
    p.add(Monomial::single(X(1, 1)), QSqrt2(1));
    auto q = assemble_q(p, 4, 1, kOverride);
    EXPECT_EQ(q.evaluate(std::vector<Rational>{1, 4}), Rational(1, 4));
}

TEST(AssembleQ, Errors) {
    MultilinearPoly p;
    p.add(mono({X(1, 1), X(2, 1), X(3, 1)}), QSqrt2(1));
    try {
        assemble_q(p, 4, 1, kOverride);
        FAIL() << "expected degree violation";
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("degree violation"), std::string::npos);
    }
    MultilinearPoly irr;
    irr.add(Monomial::single(X(1, 1)), QSqrt2::sqrt2());
    EXPECT_THROW(assemble_q(irr, 4, 1, kOverride), Error);
    EXPECT_THROW(assemble_q(MultilinearPoly(QSqrt2(1)), 4, 1), Error);  // 9 T^2 > n
    EXPECT_NO_THROW(assemble_q(MultilinearPoly(QSqrt2(1)), 9, 1));
}

TEST(ExpectedAcceptance, Examples) {
    auto first = builtin_algorithm("x1-equals-1", 4);
    auto always = builtin_algorithm("always-accept", 4);
    for (QuasilatticePoint p : {QuasilatticePoint{1, 4}, QuasilatticePoint{2, 4}, QuasilatticePoint{2, 6}}) {
        EXPECT_EQ(expected_acceptance(first, p).value, QSqrt2(Rational(1, 4)));
        EXPECT_EQ(expected_acceptance(always, p).value, QSqrt2(1));
    }
}

TEST(ExpectedAcceptance, PolynomialAndAlgorithmAgree) {
    auto alg = builtin_algorithm("mixer", 4);
    auto p = extract_polynomial(alg);
    for (QuasilatticePoint pt : {QuasilatticePoint{1, 4}, QuasilatticePoint{2, 4}, QuasilatticePoint{2, 8}}) {
        EXPECT_EQ(expected_acceptance(alg, pt).value, expected_acceptance(p, pt, 4).value);
    }
}

TEST(ExpectedAcceptance, MonteCarloFallbackNearExact) {
    auto alg = builtin_algorithm("interference", 4);
    QuasilatticePoint pt{2, 8};
    double exact = expected_acceptance(alg, pt).value.to_double();
    ExpectationOptions o;
    o.cap = 10;
    o.monte_carlo_fallback = true;
    o.samples = 20000;
    o.seed = 5;
    auto mc = expected_acceptance(alg, pt, o);
    EXPECT_FALSE(mc.exact);
    EXPECT_LE(std::abs(mc.estimate - exact), 4 * mc.std_error + 1e-12);
    o.monte_carlo_fallback = false;
    EXPECT_THROW(expected_acceptance(alg, pt, o), EnumerationTooLarge);
}

TEST(Identity, OneQueryCircuitAtEveryFamilyPoint) {
    auto alg = builtin_algorithm("interference", 4);
    auto q = assemble_q(extract_polynomial(alg), 4, 1, kOverride);
    int checked = 0;
    for (int g = 1; g <= 8; ++g) {
        for (int N = 4; N <= 8; ++N) {
            if (!is_collision_family_valid({g, N}, 4)) continue;
            Rational pred = prefactor(4, 1, N) * q.evaluate(std::vector<Rational>{g, N});
            EXPECT_EQ(expected_acceptance(alg, QuasilatticePoint{g, N}).value, QSqrt2(pred)) << g << "," << N;
            ++checked;
        }
    }
    EXPECT_GT(checked, 5);
}

TEST(Theta, SingleIndicatorIsM) {
    LatticePoly t = theta_poly(Monomial::single(X(1, 3)));
    EXPECT_EQ(t, LatticePoly::variable(2, 1, {"g", "M"}));
}

TEST(Theta, VanishesWhereKappaIsOne) {
    LatticePoly t = theta_poly(mono({X(1, 2), X(2, 2)}));
    for (int g : {1, 2}) {
        for (int M : {4, 7, 10}) EXPECT_EQ(t.evaluate(std::vector<Rational>{g, M}), 0);
    }
    EXPECT_NE(t.evaluate(std::vector<Rational>{3, 27}), 0);
}

TEST(Theta, DegreeAtMostTwoR) {
    Rng rng(9);
    auto all = all_monomials(2, 4, 8, 4);
    for (int k = 0; k < 100; ++k) {
        const auto &I = all[uniform_index(rng, all.size())];
        EXPECT_LE(theta_poly(I).degree(), 2 * I.degree()) << I.str();
    }
}

TEST(Gamma3, SingleIndicatorMatchesBruteForce) {
    for (int h = 1; h <= 4; ++h) {
        Monomial I = Monomial::single(X(1, h));
        EXPECT_EQ(gamma3_closed(I, 1, 2, 2, 2, 1), gamma3_bruteforce(I, 1, 2, 2, 2));
    }
}

TEST(Gamma3, MixedRegistersMatchBruteForce) {
    Monomial I = mono({X(1, 1), Y(2, 3)});
    for (SuperQuasilatticePoint p : {SuperQuasilatticePoint{1, 2, 2}, SuperQuasilatticePoint{2, 2, 2},
                                     SuperQuasilatticePoint{2, 4, 3}}) {
        EXPECT_EQ(gamma3_closed(I, p.g, p.N, p.M, 2, 1), gamma3_bruteforce(I, p.g, p.N, p.M, 2)) << to_string(p);
    }
}

TEST(AssembleQ3, ConstantIsEmptyMonomialTerm) {
    auto q = assemble_q3(MultilinearPoly(QSqrt2(1)), 2, 1, kOverride);
    EXPECT_EQ(q, q_tilde3(Monomial(), 2, 1));
    Rational pref = prefactor3(2, 1, 2, 2, 1);
    EXPECT_EQ(pref * q.evaluate(std::vector<Rational>{1, 2, 2}), 1);
}

TEST(AssembleQ3, IdentityAtNTwo) {
    auto alg = builtin_algorithm("register-compare", 2);
    auto q = assemble_q3(extract_polynomial(alg), 2, 1, kOverride);
    EXPECT_LE(q.degree(), 8);
    for (const auto &p : super_quasilattice_points(2, 1, 1)) {
        Rational pred = prefactor3(2, 1, p.N, p.M, p.g) * q.evaluate(std::vector<Rational>{p.g, p.N, p.M});
        EXPECT_EQ(expected_acceptance(alg, p).value, QSqrt2(pred)) << to_string(p);
    }
}

TEST(AssembleQ3, DegreeAtMostEightT) {
    Rng rng(33);
    auto all = all_monomials(2, 4, 8, 2);
    for (int k = 0; k < 20; ++k) {
        MultilinearPoly p;
        for (int j = 0; j < 6; ++j) {
            Rational beta(static_cast<long>(uniform_index(rng, 21)) - 10, 1 + static_cast<long>(uniform_index(rng, 9)));
            beta.canonicalize();
            p.add(all[uniform_index(rng, all.size())], QSqrt2(beta));
        }
        EXPECT_LE(assemble_q3(p, 4, 1, kOverride).degree(), 8);
    }
}

}  // namespace
}  // namespace querylab
