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

#include "querylab/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "querylab/exact.hpp"

namespace querylab {

uint64_t uniform_index(Rng &rng, uint64_t bound) {
    if (bound == 0) throw Error("uniform_index: empty range");
    // Rejection sampling on the top of the 64-bit range.
    uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

double uniform_unit(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

uint64_t derive_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<int> sample_subset_of(const std::vector<int> &pool, int k, Rng &rng) {
    if (k < 0 || k > static_cast<int>(pool.size())) throw Error("subset size out of range");
    std::vector<int> p = pool;
    // Partial Fisher-Yates: the first k slots are a uniform k-subset.
    for (int i = 0; i < k; ++i) {
        size_t j = i + uniform_index(rng, p.size() - i);
        std::swap(p[i], p[j]);
    }
    p.resize(k);
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<int> sample_subset(int m, int k, Rng &rng) {
    std::vector<int> pool(m);
    std::iota(pool.begin(), pool.end(), 1);
    return sample_subset_of(pool, k, rng);
}

std::vector<int> sample_k_to_one(const std::vector<int> &range, int multiplicity, Rng &rng) {
    std::vector<int> f;
    f.reserve(range.size() * multiplicity);
    for (int v : range) {
        for (int c = 0; c < multiplicity; ++c) f.push_back(v);
    }
    // Every k-to-1 function arises from the same number of orderings.
    shuffle_in_place(f, rng);
    return f;
}

Instance sample_collision_input(const QuasilatticePoint &point, int n, Rng &rng) {
    if (!is_collision_family_valid(point, n)) {
        throw Error("invalid collision distribution parameters " + to_string(point));
    }
    LatentDraw latent;
    latent.support = sample_subset(n, point.N / point.g, rng);
    latent.x_full = sample_k_to_one(latent.support, point.g, rng);
    Instance inst = Instance::collision(std::vector<int>(latent.x_full.begin(), latent.x_full.begin() + n));
    inst.set_latent(std::move(latent));
    return inst;
}

Instance sample_setcomp_input(const SuperQuasilatticePoint &point, int n, Rng &rng) {
    if (!is_setcomp_family_valid(point, n)) {
        throw Error("invalid set-comparison distribution parameters " + to_string(point));
    }
    int k = static_cast<int>(kappa(point.g));
    int range_size = point.M / k;
    LatentDraw latent;
    latent.support = sample_subset(2 * n, 2 * point.N / point.g, rng);
    latent.x_support = sample_subset_of(latent.support, range_size, rng);
    latent.y_support = sample_subset_of(latent.support, range_size, rng);
    latent.x_full = sample_k_to_one(latent.x_support, k, rng);
    latent.y_full = sample_k_to_one(latent.y_support, k, rng);
    std::vector<int> x(latent.x_full.begin(), latent.x_full.begin() + n);
    std::vector<int> y(latent.y_full.begin(), latent.y_full.begin() + n);
    // kappa(g) > 1 makes the sequences many-to-one, outside the set-comparison promise.
    Instance inst = k == 1 ? Instance::setcomp(std::move(x), std::move(y))
                           : Instance::setcomp_unchecked(std::move(x), std::move(y));
    inst.set_latent(std::move(latent));
    return inst;
}

}  // namespace querylab
