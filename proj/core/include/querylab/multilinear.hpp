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

#include <map>
#include <string>

#include "querylab/exact.hpp"
#include "querylab/instance.hpp"
#include "querylab/monomial.hpp"

namespace querylab {

/// Sum of beta_I * I over canonical monomials, beta_I in Q(sqrt 2). Zero
/// coefficients are never stored.
class MultilinearPoly {
   public:
    MultilinearPoly() = default;
    /// The constant c.
    explicit MultilinearPoly(const QSqrt2 &c);

    void add(const Monomial &m, const QSqrt2 &c);
    void add(const MultilinearPoly &other, const QSqrt2 &scale);
    /// This polynomial times Delta(d); conflicting terms vanish.
    MultilinearPoly times(const Indicator &d) const;
    MultilinearPoly operator*(const MultilinearPoly &other) const;
    MultilinearPoly &operator*=(const QSqrt2 &c);
    MultilinearPoly &operator+=(const MultilinearPoly &other);

    const std::map<Monomial, QSqrt2> &terms() const { return terms_; }
    QSqrt2 coefficient(const Monomial &m) const;
    bool is_zero() const { return terms_.empty(); }
    /// Max monomial degree; 0 for the zero polynomial.
    int degree() const;
    bool has_rational_coefficients() const;

    friend bool operator==(const MultilinearPoly &, const MultilinearPoly &) = default;

   private:
    std::map<Monomial, QSqrt2> terms_;
};

/// Substitutes Delta(x_i, h) := [x_i = h] and sums, exactly.
QSqrt2 evaluate_poly(const MultilinearPoly &p, const Instance &inst);

/// {"degree": d, "terms": [{"monomial": [["X",1,3],...], "coefficient": "p/q"}, ...]}
std::string poly_to_json(const MultilinearPoly &p);
MultilinearPoly poly_from_json(const std::string &text);

}  // namespace querylab
