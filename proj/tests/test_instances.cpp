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
#include <map>
#include <set>

#include "querylab/enumeration.hpp"
#include "querylab/instance.hpp"
#include "querylab/lattice.hpp"
#include "querylab/sampling.hpp"

namespace querylab {
namespace {

TEST(Kappa, SmallValues) {
    EXPECT_EQ(kappa(1), 1);
    EXPECT_EQ(kappa(2), 1);
    EXPECT_EQ(kappa(3), 9);
    EXPECT_EQ(kappa(4), 25);
}

TEST(Quasilattice, HundredThreeTwo) {
    auto pts = quasilattice_points(100, 3, 2);
    std::vector<QuasilatticePoint> want{{1, 100}, {2, 100}, {2, 102}};
    EXPECT_EQ(pts, want);
}

TEST(Quasilattice, HundredThreeThreeAddsOnePoint) {
    auto pts = quasilattice_points(100, 3, 3);
    std::vector<QuasilatticePoint> want{{1, 100}, {2, 100}, {2, 102}, {3, 102}};
    EXPECT_EQ(pts, want);
}

TEST(Quasilattice, GAboveRootNThrows) {
    EXPECT_THROW(quasilattice_points(100, 3, 11), Error);
    EXPECT_THROW(super_quasilattice_points(100, 2, 5), Error);
}

TEST(Quasilattice, EveryPointPassesRecheck) {
    for (int n : {16, 50, 100, 400}) {
        for (int T = 1; T <= 3; ++T) {
            int G = static_cast<int>(std::sqrt(n));
            for (const auto &p : quasilattice_points(n, T, G)) {
                EXPECT_EQ(p.N % p.g, 0);
                EXPECT_LE(p.g * p.g, n);
                EXPECT_GE(p.N, n);
                EXPECT_LE(Rational(p.N), Rational(n) + Rational(n) / (10 * T));
                if (p.g == 1) {
                    EXPECT_EQ(p.N, n);
                }
            }
        }
    }
}

TEST(SuperQuasilattice, HundredTwoFour) {
    auto pts = super_quasilattice_points(100, 2, 4);
    std::vector<SuperQuasilatticePoint> want{{1, 100, 100}, {2, 100, 100}, {4, 100, 100}};
    EXPECT_EQ(pts, want);
}

TEST(SuperQuasilattice, ThreeDoesNotDivideHundred) {
    for (const auto &p : super_quasilattice_points(100, 2, 3)) EXPECT_NE(p.g, 3);
}

TEST(SuperQuasilattice, EveryPointPassesRecheck) {
    for (int n : {8, 27, 100, 1000}) {
        int G = static_cast<int>(std::cbrt(n + 0.5));
        for (const auto &p : super_quasilattice_points(n, 1, G)) {
            EXPECT_LE(p.g * p.g * p.g, n);
            EXPECT_EQ(p.N % p.g, 0);
            EXPECT_EQ(p.M % kappa(p.g), 0);
            EXPECT_GE(p.N, n);
            EXPECT_GE(p.M, n);
            if (p.g == 1) {
                EXPECT_EQ(p.N, n);
            }
            if (p.g == 2) {
                EXPECT_EQ(p.M, n);
            }
        }
    }
}

TEST(Enumeration, CountsMatchFormula) {
    auto count = [](QuasilatticePoint p, int n) {
        CollisionSupportEnumerator it(p, n);
        CollisionSupport s;
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        while (it.next(s)) seen.emplace(s.support, s.x_full);
        return seen.size();
    };
    EXPECT_EQ(count({2, 4}, 4), 36u);
    EXPECT_EQ(count({1, 2}, 2), 2u);
    EXPECT_EQ(count({3, 6}, 6), 300u);
    EXPECT_EQ(collision_support_count({3, 6}, 6), 300);
    EXPECT_EQ(collision_support_count({2, 4}, 4), 36);
    for (QuasilatticePoint p : {QuasilatticePoint{2, 6}, QuasilatticePoint{2, 8}, QuasilatticePoint{4, 8}}) {
        EXPECT_EQ(Integer(count(p, 6)), collision_support_count(p, 6));
    }
}

TEST(Enumeration, CapExceeded) {
    try {
        CollisionSupportEnumerator it({2, 8}, 8, 100);
        FAIL() << "expected cap error";
    } catch (const EnumerationTooLarge &e) {
        EXPECT_NE(std::string(e.what()).find("enumeration too large"), std::string::npos);
    }
}

TEST(Enumeration, SetcompCountMatchesWalk) {
    for (SuperQuasilatticePoint p : {SuperQuasilatticePoint{1, 2, 2}, SuperQuasilatticePoint{2, 2, 2},
                                     SuperQuasilatticePoint{2, 4, 3}}) {
        Integer walked = 0;
        for_each_setcomp_support(p, 2, default_enumeration_cap(), [&](const SetcompSupport &) { ++walked; });
        EXPECT_EQ(walked, setcomp_support_count(p, 2)) << to_string(p);
    }
}

TEST(Sampling, PermutationAtGOne) {
    Rng rng(1);
    for (int k = 0; k < 50; ++k) {
        auto inst = sample_collision_input({1, 10}, 10, rng);
        EXPECT_TRUE(validate_instance(inst, 1));
    }
}

TEST(Sampling, TwoToOneAtGTwo) {
    Rng rng(2);
    for (int k = 0; k < 50; ++k) {
        auto inst = sample_collision_input({2, 10}, 10, rng);
        EXPECT_TRUE(validate_instance(inst, 2));
    }
}

TEST(Sampling, LatentFunctionIsTwoToOneBeforeTruncation) {
    Rng rng(3);
    for (int k = 0; k < 50; ++k) {
        auto inst = sample_collision_input({2, 12}, 10, rng);
        ASSERT_TRUE(inst.latent().has_value());
        const auto &lat = *inst.latent();
        EXPECT_EQ(lat.x_full.size(), 12u);
        EXPECT_TRUE(is_k_to_one(lat.x_full, 2));
        for (int i = 0; i < 10; ++i) EXPECT_EQ(inst.x()[i], lat.x_full[i]);
        std::set<int> range(lat.x_full.begin(), lat.x_full.end());
        EXPECT_EQ(std::vector<int>(range.begin(), range.end()), lat.support);
    }
}

TEST(Sampling, UniformOverSupportsAtNFour) {
    Rng rng(2026);
    const int draws = 100000;
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> freq;
    for (int k = 0; k < draws; ++k) {
        auto inst = sample_collision_input({2, 4}, 4, rng);
        freq[{inst.latent()->support, inst.latent()->x_full}]++;
    }
    ASSERT_EQ(freq.size(), 36u);
    const double p = 1.0 / 36, mean = draws * p, sigma = std::sqrt(draws * p * (1 - p));
    for (const auto &[key, c] : freq) EXPECT_LE(std::abs(c - mean), 4 * sigma);
}

TEST(Sampling, SetcompStructure) {
    Rng rng(4);
    for (int k = 0; k < 30; ++k) {
        auto a = sample_setcomp_input({1, 8, 8}, 8, rng);
        EXPECT_TRUE(validate_instance(a, 1));
        EXPECT_EQ(a.latent()->support.size(), 16u);
        EXPECT_EQ(a.latent()->x_support.size(), 8u);
        EXPECT_EQ(a.latent()->y_support.size(), 8u);

        auto b = sample_setcomp_input({2, 8, 8}, 8, rng);
        EXPECT_TRUE(validate_instance(b, 1));
        EXPECT_EQ(b.latent()->support.size(), 8u);
        std::set<int> xs(b.x().begin(), b.x().end());
        for (int v : b.y()) EXPECT_TRUE(xs.count(v) == 1);

        auto c = sample_setcomp_input({3, 27, 27}, 27, rng);
        EXPECT_TRUE(is_k_to_one(c.latent()->x_full, 9));
        EXPECT_TRUE(is_k_to_one(c.latent()->y_full, 9));
    }
}

TEST(Sampling, SameSeedSameDraws) {
    Rng a(77), b(77);
    for (int k = 0; k < 20; ++k) {
        EXPECT_EQ(sample_collision_input({2, 20}, 20, a), sample_collision_input({2, 20}, 20, b));
    }
}

TEST(UnionSize, Examples) {
    EXPECT_EQ(set_union_size(Instance::setcomp({1, 2, 3, 4}, {4, 3, 2, 1})), 4);
    EXPECT_EQ(set_union_size(Instance::setcomp({1, 2, 3, 4}, {5, 6, 7, 8})), 8);
    std::vector<int> x(20), y(20);
    for (int i = 0; i < 20; ++i) {
        x[i] = i + 1;
        y[i] = i < 18 ? i + 1 : 21 + (i - 18);
    }
    EXPECT_EQ(set_union_size(Instance::setcomp(x, y)), 22);
}

TEST(Validate, Examples) {
    EXPECT_TRUE(validate_instance(Instance::collision({1, 2, 3, 4}), 1));
    EXPECT_TRUE(validate_instance(Instance::collision({1, 1, 3, 3}), 2));
    EXPECT_FALSE(validate_instance(Instance::collision({1, 1, 2, 3}), 2));
}

TEST(Chernoff, NoSmallUnionsAtTwoHundred) {
    Rng rng(200);
    int small = 0;
    for (int k = 0; k < 10000; ++k) {
        auto inst = sample_setcomp_input({1, 200, 200}, 200, rng);
        if (set_union_size(inst) * 10 < 11 * 200) ++small;
    }
    EXPECT_EQ(small, 0);
}

TEST(InstanceFile, RoundTrip) {
    Rng rng(8);
    auto a = sample_setcomp_input({2, 8, 8}, 8, rng);
    auto b = instance_from_json(instance_to_json(a));
    EXPECT_EQ(a, b);
    ASSERT_TRUE(b.latent().has_value());
    EXPECT_EQ(a.latent()->x_full, b.latent()->x_full);
    auto c = Instance::collision({2, 2, 1, 1});
    EXPECT_EQ(instance_from_json(instance_to_json(c)), c);
    EXPECT_THROW(instance_from_json(R"({"kind":"collision","x":[0,1]})"), Error);
}

}  // namespace
}  // namespace querylab
