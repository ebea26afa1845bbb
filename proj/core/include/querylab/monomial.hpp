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

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "querylab/instance.hpp"

namespace querylab {

/// Delta(reg_position, value): 1 iff the input at that position equals value.
struct Indicator {
    Register reg = Register::X;
    int position = 1;
    int value = 1;
    auto operator<=>(const Indicator &) const = default;
};

std::string to_string(const Indicator &d);

/// Degree statistics of a monomial. Multiplicities are listed by increasing value.
struct MonomialStats {
    int r = 0;                   // total degree
    std::vector<int> range;      // Z(I), distinct values
    std::vector<int> mult;       // r_j(I) for each value in range
    int r_x = 0, r_y = 0;
    std::vector<int> range_x, range_y;  // Z_X(I), Z_Y(I)
    std::vector<int> mult_x, mult_y;    // r_{X,j}(I), r_{Y,j}(I)

    int w() const { return static_cast<int>(range.size()); }
    int w_x() const { return static_cast<int>(range_x.size()); }
    int w_y() const { return static_cast<int>(range_y.size()); }
};

/// Product of indicators on distinct (register, position) pairs, kept sorted.
/// Monomials that would pin one position to two values are identically zero and are
/// never represented; the factories return nullopt for them.
class Monomial {
   public:
    Monomial() = default;

    /// Canonicalizes: sorts, merges repeated factors (Delta^2 = Delta), and returns
    /// nullopt on a conflicting pair.
    static std::optional<Monomial> from(std::vector<Indicator> factors);
    static Monomial single(Indicator d) { return Monomial({d}); }

    /// Product with canonicalization; nullopt if the result is identically zero.
    std::optional<Monomial> times(const Indicator &d) const;
    std::optional<Monomial> times(const Monomial &other) const;

    const std::vector<Indicator> &factors() const { return factors_; }
    int degree() const { return static_cast<int>(factors_.size()); }
    MonomialStats stats() const;
    bool uses_register(Register reg) const;

    /// 1 if every factor holds on inst, else 0.
    bool holds(const Instance &inst) const;

    /// "1" for the empty monomial, else "D(X1,3)*D(Y2,1)".
    std::string str() const;

    auto operator<=>(const Monomial &) const = default;

   private:
    explicit Monomial(std::vector<Indicator> sorted) : factors_(std::move(sorted)) {}
    std::vector<Indicator> factors_;
};

/// Every canonical monomial of degree <= max_degree over the given registers,
/// positions 1..n and values 1..alphabet, sorted.
std::vector<Monomial> all_monomials(int registers, int n, int alphabet, int max_degree);

}  // namespace querylab
