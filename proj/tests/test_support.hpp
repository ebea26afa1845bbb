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

#include <functional>
#include <vector>

#include "querylab/instance.hpp"

namespace querylab::testing {

// Calls fn on every sequence in {1..alphabet}^length, lexicographically.
inline void for_each_sequence(int length, int alphabet, const std::function<void(const std::vector<int> &)> &fn) {
    std::vector<int> v(length, 1);
    while (true) {
        fn(v);
        int k = length - 1;
        while (k >= 0 && v[k] == alphabet) v[k--] = 1;
        if (k < 0) return;
        ++v[k];
    }
}

// Every collision input of size n (values 1..n): n^n of them.
inline void for_each_collision_instance(int n, const std::function<void(const Instance &)> &fn) {
    for_each_sequence(n, n, [&](const std::vector<int> &x) { fn(Instance::collision(x)); });
}

// Every set-comparison input of size n (values 1..2n): (2n)^(2n) of them.
inline void for_each_setcomp_instance(int n, const std::function<void(const Instance &)> &fn) {
    for_each_sequence(2 * n, 2 * n, [&](const std::vector<int> &xy) {
        fn(Instance::setcomp_unchecked(std::vector<int>(xy.begin(), xy.begin() + n),
                                       std::vector<int>(xy.begin() + n, xy.end())));
    });
}

}  // namespace querylab::testing
