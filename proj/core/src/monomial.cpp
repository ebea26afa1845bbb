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

#include "querylab/monomial.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace querylab {

std::string to_string(const Indicator &d) {
    return "D(" + to_string(d.reg) + std::to_string(d.position) + "," + std::to_string(d.value) + ")";
}

std::optional<Monomial> Monomial::from(std::vector<Indicator> factors) {
    std::sort(factors.begin(), factors.end());
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    for (size_t i = 1; i < factors.size(); ++i) {
        if (factors[i].reg == factors[i - 1].reg && factors[i].position == factors[i - 1].position) return std::nullopt;
    }
    return Monomial(std::move(factors));
}

std::optional<Monomial> Monomial::times(const Indicator &d) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), d,
                               [](const Indicator &a, const Indicator &b) {
                                   return std::tie(a.reg, a.position) < std::tie(b.reg, b.position);
                               });
    if (it != factors_.end() && it->reg == d.reg && it->position == d.position) {
        if (it->value == d.value) return *this;
        return std::nullopt;
    }
    std::vector<Indicator> out;
    out.reserve(factors_.size() + 1);
    out.insert(out.end(), factors_.begin(), it);
    out.push_back(d);
    out.insert(out.end(), it, factors_.end());
    return Monomial(std::move(out));
}

std::optional<Monomial> Monomial::times(const Monomial &other) const {
    std::vector<Indicator> out;
    out.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() ||
            (a != factors_.end() && std::tie(a->reg, a->position) < std::tie(b->reg, b->position))) {
            out.push_back(*a++);
        } else if (a == factors_.end() || std::tie(b->reg, b->position) < std::tie(a->reg, a->position)) {
            out.push_back(*b++);
        } else {
            if (a->value != b->value) return std::nullopt;
            out.push_back(*a++);
            ++b;
        }
    }
    return Monomial(std::move(out));
}

MonomialStats Monomial::stats() const {
    std::map<int, int> all, xs, ys;
    for (const auto &d : factors_) {
        ++all[d.value];
        ++(d.reg == Register::X ? xs : ys)[d.value];
    }
    MonomialStats s;
    s.r = degree();
    for (auto &[v, c] : all) {
        s.range.push_back(v);
        s.mult.push_back(c);
    }
    for (auto &[v, c] : xs) {
        s.range_x.push_back(v);
        s.mult_x.push_back(c);
        s.r_x += c;
    }
    for (auto &[v, c] : ys) {
        s.range_y.push_back(v);
        s.mult_y.push_back(c);
        s.r_y += c;
    }
    return s;
}

bool Monomial::uses_register(Register reg) const {
    return std::any_of(factors_.begin(), factors_.end(), [reg](const Indicator &d) { return d.reg == reg; });
}

bool Monomial::holds(const Instance &inst) const {
    for (const auto &d : factors_) {
        if (inst.value(d.reg, d.position) != d.value) return false;
    }
    return true;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto &d : factors_) {
        if (!out.empty()) out += "*";
        out += to_string(d);
    }
    return out;
}

std::vector<Monomial> all_monomials(int registers, int n, int alphabet, int max_degree) {
    std::vector<std::pair<Register, int>> slots;
    for (int r = 0; r < registers; ++r) {
        for (int i = 1; i <= n; ++i) slots.emplace_back(static_cast<Register>(r), i);
    }
    std::vector<Monomial> out;
    std::vector<Indicator> current;
    std::function<void(size_t)> rec = [&](size_t start) {
        out.push_back(*Monomial::from(current));
        if (static_cast<int>(current.size()) == max_degree) return;
        for (size_t k = start; k < slots.size(); ++k) {
            for (int h = 1; h <= alphabet; ++h) {
                current.push_back({slots[k].first, slots[k].second, h});
                rec(k + 1);
                current.pop_back();
            }
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace querylab
