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

#include "querylab/collision_finding.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "querylab/grover.hpp"

namespace querylab {

namespace {

AlgorithmResult verified_collision(const Instance &inst, int i, int j, int queries, int trials) {
    if (i == j || inst.value(Register::X, i) != inst.value(Register::X, j)) {
        throw Error("internal error: unverified collision");
    }
    AlgorithmResult r;
    r.decision = "collision";
    r.collision = std::make_pair(std::min(i, j), std::max(i, j));
    r.queries_used = queries;
    r.trials = trials;
    return r;
}

}  // namespace

bool is_paired(const Instance &inst) {
    if (inst.kind() != InstanceKind::collision) return false;
    std::map<int, int> counts;
    for (int v : inst.x()) ++counts[v];
    int singles = 0;
    for (const auto &[v, c] : counts) {
        if (c == 1) {
            ++singles;
        } else if (c != 2) {
            return false;
        }
    }
    return singles == inst.n() % 2;
}

Instance sample_one_to_one(int n, Rng &rng) {
    if (n < 1) throw Error("n must be positive");
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) x[i] = i + 1;
    shuffle_in_place(x, rng);
    return Instance::collision(std::move(x));
}

Instance sample_paired(int n, Rng &rng) {
    if (n < 2) throw Error("paired input needs n >= 2");
    std::vector<int> values = sample_subset(n, (n + 1) / 2, rng);
    std::vector<int> x;
    x.reserve(n);
    for (size_t j = 0; j < values.size(); ++j) {
        x.push_back(values[j]);
        if (static_cast<int>(x.size()) < n) x.push_back(values[j]);
    }
    shuffle_in_place(x, rng);
    return Instance::collision(std::move(x));
}

int bht_sample_size(int n) {
    int k = 1;
    while (static_cast<long>(k) * k * k < n) ++k;
    return k;
}

AlgorithmResult bht_collision(const Instance &inst, Rng &rng, const BhtOptions &opts) {
    if (inst.kind() != InstanceKind::collision) throw Error("collision finding needs a collision instance");
    if (!validate_instance(inst, 1) && !is_paired(inst)) throw Error("not k-to-one");
    const int n = inst.n();
    const int k = std::min(bht_sample_size(n), n);
    int queries = 0;

    std::vector<int> sample = sample_subset(n, k, rng);
    std::map<int, int> seen;  // value -> position
    for (int i : sample) {
        ++queries;
        int v = inst.value(Register::X, i);
        auto [it, inserted] = seen.emplace(v, i);
        if (!inserted) return verified_collision(inst, it->second, i, queries, 0);
    }

    std::vector<int> rest;
    {
        std::vector<bool> in_sample(n + 1, false);
        for (int i : sample) in_sample[i] = true;
        for (int i = 1; i <= n; ++i) {
            if (!in_sample[i]) rest.push_back(i);
        }
    }
    AlgorithmResult none;
    none.decision = "one-to-one";
    if (rest.empty()) {
        none.queries_used = queries;
        return none;
    }
    auto marked = [&](int j) { return seen.count(inst.value(Register::X, rest[j - 1])) > 0; };
    const int padded = grover_padding(static_cast<int>(rest.size()));
    const int iterations =
        static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(padded) / k)));
    auto search = grover_search<double>(static_cast<int>(rest.size()), marked, iterations);

    int trials = 0;
    for (int run = 0; run <= opts.reruns; ++run) {
        ++trials;
        queries += 2 * iterations;
        double u = uniform_unit(rng), acc = 0.0;
        int pick = padded;
        for (int j = 1; j <= padded; ++j) {
            acc += search.probabilities[j - 1];
            if (u < acc) {
                pick = j;
                break;
            }
        }
        if (pick > static_cast<int>(rest.size())) continue;
        int pos = rest[pick - 1];
        ++queries;
        auto it = seen.find(inst.value(Register::X, pos));
        if (it != seen.end()) return verified_collision(inst, it->second, pos, queries, trials);
    }
    none.queries_used = queries;
    none.trials = trials;
    return none;
}

AlgorithmResult classical_birthday(const Instance &inst, Rng &rng, int budget) {
    if (inst.kind() != InstanceKind::collision) throw Error("collision finding needs a collision instance");
    const int n = inst.n();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    shuffle_in_place(order, rng);
    std::map<int, int> seen;
    int queries = 0;
    for (int t = 0; t < std::min(budget, n); ++t) {
        int i = order[t];
        ++queries;
        auto [it, inserted] = seen.emplace(inst.value(Register::X, i), i);
        if (!inserted) return verified_collision(inst, it->second, i, queries, 1);
    }
    AlgorithmResult r;
    r.decision = "one-to-one";
    r.queries_used = queries;
    r.trials = 1;
    return r;
}

}  // namespace querylab
