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

#include "querylab/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace querylab {

uint64_t default_enumeration_cap() {
    if (const char *env = std::getenv("QUERYLAB_ENUM_CAP")) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultEnumerationCap;
}

namespace {

void check_cap(const Integer &count, uint64_t cap) {
    if (count > Integer(std::to_string(cap))) {
        throw EnumerationTooLarge("enumeration too large: " + count.get_str() + " outcomes exceed cap " +
                                  std::to_string(cap));
    }
}

Integer power(const Integer &base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Next k-combination of pool indices in lexicographic order.
bool next_combination(std::vector<int> &idx, int pool_size) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < pool_size - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Integer collision_support_count(const QuasilatticePoint &point, int n) {
    if (!is_collision_family_valid(point, n)) {
        throw Error("invalid collision distribution parameters " + to_string(point));
    }
    int s = point.N / point.g;
    return binomial(n, s) * factorial(point.N) / power(factorial(point.g), s);
}

CollisionSupportEnumerator::CollisionSupportEnumerator(const QuasilatticePoint &point, int n, uint64_t cap)
    : n_(n), g_(point.g), size_(0), total_(collision_support_count(point, n)) {
    check_cap(total_, cap);
    size_ = point.N / point.g;
    subset_.resize(size_);
    std::iota(subset_.begin(), subset_.end(), 1);
}

void CollisionSupportEnumerator::reset_function() {
    function_.clear();
    for (int v : subset_) {
        for (int c = 0; c < g_; ++c) function_.push_back(v);
    }
}

bool CollisionSupportEnumerator::advance_subset() {
    // subset_ holds values 1..n; shift to 0-based indices for the combination step.
    std::vector<int> idx(subset_.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = subset_[i] - 1;
    if (!next_combination(idx, n_)) return false;
    for (size_t i = 0; i < idx.size(); ++i) subset_[i] = idx[i] + 1;
    return true;
}

bool CollisionSupportEnumerator::next(CollisionSupport &out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        reset_function();
    } else if (!std::next_permutation(function_.begin(), function_.end())) {
        if (!advance_subset()) {
            done_ = true;
            return false;
        }
        reset_function();
    }
    out.support = subset_;
    out.x_full = function_;
    return true;
}

Integer setcomp_support_count(const SuperQuasilatticePoint &point, int n) {
    if (!is_setcomp_family_valid(point, n)) {
        throw Error("invalid set-comparison distribution parameters " + to_string(point));
    }
    long k = kappa(point.g);
    long s = 2L * point.N / point.g;
    long m = point.M / k;
    Integer functions = factorial(point.M) / power(factorial(k), m);
    return binomial(2 * n, s) * binomial(s, m) * binomial(s, m) * functions * functions;
}

void for_each_subset(const std::vector<int> &pool, int k, const std::function<void(const std::vector<int> &)> &fn) {
    int m = static_cast<int>(pool.size());
    if (k < 0 || k > m) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> subset(k);
    do {
        for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
        fn(subset);
    } while (next_combination(idx, m));
}

void for_each_k_to_one(const std::vector<int> &range, int multiplicity,
                       const std::function<void(const std::vector<int> &)> &fn) {
    std::vector<int> f;
    for (int v : range) {
        for (int c = 0; c < multiplicity; ++c) f.push_back(v);
    }
    std::sort(f.begin(), f.end());
    do {
        fn(f);
    } while (std::next_permutation(f.begin(), f.end()));
}

void for_each_setcomp_support(const SuperQuasilatticePoint &point, int n, uint64_t cap,
                              const std::function<void(const SetcompSupport &)> &fn) {
    check_cap(setcomp_support_count(point, n), cap);
    int k = static_cast<int>(kappa(point.g));
    int s = 2 * point.N / point.g;
    int m = point.M / k;
    std::vector<int> universe(2 * n);
    std::iota(universe.begin(), universe.end(), 1);
    SetcompSupport cur;
    for_each_subset(universe, s, [&](const std::vector<int> &S) {
        cur.support = S;
        for_each_subset(S, m, [&](const std::vector<int> &SX) {
            cur.x_support = SX;
            for_each_subset(S, m, [&](const std::vector<int> &SY) {
                cur.y_support = SY;
                for_each_k_to_one(SX, k, [&](const std::vector<int> &xf) {
                    cur.x_full = xf;
                    for_each_k_to_one(SY, k, [&](const std::vector<int> &yf) {
                        cur.y_full = yf;
                        fn(cur);
                    });
                });
            });
        });
    });
}

InputDistribution collision_input_distribution(const QuasilatticePoint &point, int n, uint64_t cap) {
    CollisionSupportEnumerator it(point, n, cap);
    InputDistribution dist;
    std::map<std::vector<int>, uint64_t> counts;
    CollisionSupport cs;
    uint64_t total = 0;
    while (it.next(cs)) {
        ++counts[std::vector<int>(cs.x_full.begin(), cs.x_full.begin() + n)];
        ++total;
    }
    for (auto &[key, c] : counts) dist.counts.emplace(key, Integer(std::to_string(c)));
    dist.total = Integer(std::to_string(total));
    return dist;
}

InputDistribution setcomp_input_distribution(const SuperQuasilatticePoint &point, int n, uint64_t cap) {
    InputDistribution dist;
    std::map<std::vector<int>, uint64_t> counts;
    uint64_t total = 0;
    std::vector<int> key(2 * n);
    for_each_setcomp_support(point, n, cap, [&](const SetcompSupport &s) {
        std::copy(s.x_full.begin(), s.x_full.begin() + n, key.begin());
        std::copy(s.y_full.begin(), s.y_full.begin() + n, key.begin() + n);
        ++counts[key];
        ++total;
    });
    for (auto &[k, c] : counts) dist.counts.emplace(k, Integer(std::to_string(c)));
    dist.total = Integer(std::to_string(total));
    return dist;
}

Instance instance_from_key(InstanceKind kind, const std::vector<int> &key) {
    if (kind == InstanceKind::collision) return Instance::collision(key);
    size_t n = key.size() / 2;
    return Instance::setcomp_unchecked(std::vector<int>(key.begin(), key.begin() + n),
                                       std::vector<int>(key.begin() + n, key.end()));
}

}  // namespace querylab
