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

#include "querylab/collision_finding.hpp"
#include "querylab/grover.hpp"
#include "querylab/sampling.hpp"
#include "querylab/setcomp.hpp"

namespace querylab {
namespace {

std::vector<int> iota(int from, int count) {
    std::vector<int> v(count);
    for (int i = 0; i < count; ++i) v[i] = from + i;
    return v;
}

Instance boundary_instance(int n) {
    int k = (n + 9) / 10;
    std::vector<int> y = iota(k + 1, n - k);
    for (int j = 0; j < k; ++j) y.push_back(n + 1 + j);
    return Instance::setcomp(iota(1, n), y);
}

TEST(ErasingSetcomp, EqualSetsNeverObserveOne) {
    Instance inst = Instance::setcomp({1, 2, 3, 4}, {1, 2, 3, 4});
    EXPECT_EQ(erasing_setcomp_probability(inst), QSqrt2(0));
    EXPECT_LE(std::abs(erasing_setcomp_probability_float(inst)), 1e-12);
    Instance shuffled = Instance::setcomp({4, 2, 1, 3}, {2, 3, 4, 1});
    EXPECT_EQ(erasing_setcomp_probability(shuffled), QSqrt2(0));
}

TEST(ErasingSetcomp, DisjointSetsGiveHalf) {
    Instance inst = Instance::setcomp({1, 2, 3, 4}, {5, 6, 7, 8});
    EXPECT_EQ(erasing_setcomp_probability(inst), QSqrt2(Rational(1, 2)));
    EXPECT_NEAR(erasing_setcomp_probability_float(inst), 0.5, 1e-12);
}

TEST(ErasingSetcomp, BoundaryInstanceAtTwenty) {
    Instance inst = boundary_instance(20);
    EXPECT_EQ(set_union_size(inst), 22);
    QSqrt2 p = erasing_setcomp_probability(inst);
    EXPECT_GE((p - QSqrt2(Rational(1, 20))).sign(), 0);
}

TEST(ErasingSetcomp, MatchesSymmetricDifference) {
    Rng rng(4);
    for (int k = 0; k < 200; ++k) {
        int n = 2 + static_cast<int>(uniform_index(rng, 7));
        auto x = sample_subset(2 * n, n, rng);
        auto y = sample_subset(2 * n, n, rng);
        shuffle_in_place(x, rng);
        shuffle_in_place(y, rng);
        Instance inst = Instance::setcomp(x, y);
        Rational want = setcomp_unmatched_probability(inst);
        EXPECT_EQ(erasing_setcomp_probability(inst), QSqrt2(want));
        EXPECT_NEAR(erasing_setcomp_probability_float(inst), want.get_d(), 1e-12);
    }
}

TEST(ErasingSetcomp, ShotsDecide) {
    Rng rng(1);
    EXPECT_EQ(erasing_setcomp_decide(Instance::setcomp({1, 2, 3, 4}, {4, 3, 2, 1}), 200, rng).decision, "equal");
    EXPECT_EQ(erasing_setcomp_decide(boundary_instance(20), 200, rng).decision, "far");
}

TEST(Grover, FourItemsOneIteration) {
    auto r = grover_search<QSqrt2>(4, [](int i) { return i == 3; }, 1);
    EXPECT_EQ(r.marked_probability, QSqrt2(1));
    EXPECT_EQ(r.probabilities[2], QSqrt2(1));
}

TEST(Grover, ZeroIterationsIsUniform) {
    auto r = grover_search<QSqrt2>(8, [](int i) { return i == 5; }, 0);
    for (const auto &p : r.probabilities) EXPECT_EQ(p, QSqrt2(Rational(1, 8)));
}

TEST(Grover, NoMarkedItemsStaysUniform) {
    for (int t = 0; t < 5; ++t) {
        auto r = grover_search<QSqrt2>(8, [](int) { return false; }, t);
        for (const auto &p : r.probabilities) EXPECT_EQ(p, QSqrt2(Rational(1, 8)));
    }
}

TEST(Grover, ClosedFormCrossCheck) {
    for (int m : {4, 7, 16, 30}) {
        for (int marked = 1; marked <= 3; ++marked) {
            for (int t = 0; t <= 4; ++t) {
                auto r = grover_search<double>(m, [marked](int i) { return i <= marked; }, t);
                EXPECT_NEAR(r.marked_probability, grover_closed_form(marked, r.padded, t), 1e-9);
                auto e = grover_search<QSqrt2>(m, [marked](int i) { return i <= marked; }, t);
                EXPECT_NEAR(e.marked_probability.to_double(), r.marked_probability, 1e-9);
            }
        }
    }
}

TEST(Bht, OneToOneAlwaysReportsOneToOne) {
    Rng rng(27);
    for (int k = 0; k < 200; ++k) {
        Instance inst = sample_one_to_one(27, rng);
        auto r = bht_collision(inst, rng);
        EXPECT_EQ(r.decision, "one-to-one");
        EXPECT_FALSE(r.collision.has_value());
    }
}

TEST(Bht, PairedInputsAtTwentySeven) {
    int found = 0;
    for (uint64_t t = 0; t < 500; ++t) {
        Rng rng(derive_seed(27, t));
        Instance inst = sample_paired(27, rng);
        ASSERT_TRUE(is_paired(inst));
        auto r = bht_collision(inst, rng);
        if (r.collision) {
            ++found;
            EXPECT_EQ(inst.x()[r.collision->first - 1], inst.x()[r.collision->second - 1]);
            EXPECT_NE(r.collision->first, r.collision->second);
        }
    }
    EXPECT_GE(found * 3, 500 * 2);
}

TEST(Bht, PromiseViolationThrows) {
    Rng rng(1);
    try {
        bht_collision(Instance::collision({1, 1, 1, 2}), rng);
        FAIL() << "expected promise error";
    } catch (const Error &e) {
        EXPECT_STREQ(e.what(), "not k-to-one");
    }
}

TEST(Bht, DeterministicUnderSeed) {
    Rng a(5), b(5);
    Instance inst = Instance::collision({3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 8, 9, 2, 6, 4, 8});
    for (int k = 0; k < 20; ++k) {
        auto ra = bht_collision(inst, a), rb = bht_collision(inst, b);
        EXPECT_EQ(ra.decision, rb.decision);
        EXPECT_EQ(ra.collision, rb.collision);
        EXPECT_EQ(ra.queries_used, rb.queries_used);
    }
}

TEST(Bht, SampleSize) {
    EXPECT_EQ(bht_sample_size(27), 3);
    EXPECT_EQ(bht_sample_size(28), 4);
    EXPECT_EQ(bht_sample_size(64), 4);
}

TEST(Birthday, OneToOneNeverCollides) {
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        auto r = classical_birthday(sample_one_to_one(64, rng), rng, 64);
        EXPECT_FALSE(r.collision.has_value());
    }
}

TEST(Birthday, TwoToOneAtSixtyFour) {
    Rng rng(64);
    int found = 0;
    const int trials = 1000;
    for (int k = 0; k < trials; ++k) {
        Instance inst = sample_paired(64, rng);
        auto r = classical_birthday(inst, rng, 24);  // 3 sqrt(n)
        if (r.collision) {
            ++found;
            EXPECT_EQ(inst.x()[r.collision->first - 1], inst.x()[r.collision->second - 1]);
        }
    }
    EXPECT_GE(found, 0.9 * trials);
}

TEST(Paired, Structure) {
    Rng rng(2);
    for (int n : {2, 3, 8, 27, 64}) {
        Instance inst = sample_paired(n, rng);
        EXPECT_TRUE(is_paired(inst)) << n;
        if (n % 2 == 0) {
            EXPECT_TRUE(validate_instance(inst, 2));
        }
    }
    EXPECT_FALSE(is_paired(Instance::collision({1, 2, 3, 4})));
}

}  // namespace
}  // namespace querylab
