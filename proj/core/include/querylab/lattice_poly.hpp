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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "querylab/exact.hpp"

namespace querylab {

/// Polynomial with rational coefficients in two or three named variables, usually
/// (g, N) or (g, N, M). Exponent tuples always have three slots; unused slots stay 0.
class LatticePoly {
   public:
    using Exponents = std::array<int, 3>;

    LatticePoly() : LatticePoly(2) {}
    explicit LatticePoly(int arity, std::vector<std::string> names = {});

    static LatticePoly constant(int arity, const Rational &c, std::vector<std::string> names = {});
    /// The polynomial equal to variable `index`.
    static LatticePoly variable(int arity, int index, std::vector<std::string> names = {});

    int arity() const { return arity_; }
    const std::vector<std::string> &names() const { return names_; }
    const std::map<Exponents, Rational> &terms() const { return terms_; }

    void add_term(const Exponents &e, const Rational &c);
    Rational coefficient(const Exponents &e) const;
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; 0 for the zero polynomial.
    int degree() const;

    LatticePoly &operator+=(const LatticePoly &o);
    LatticePoly &operator-=(const LatticePoly &o);
    LatticePoly &operator*=(const Rational &c);
    friend LatticePoly operator+(LatticePoly a, const LatticePoly &b) { return a += b; }
    friend LatticePoly operator-(LatticePoly a, const LatticePoly &b) { return a -= b; }
    friend LatticePoly operator*(LatticePoly a, const Rational &c) { return a *= c; }
    friend LatticePoly operator*(const Rational &c, LatticePoly a) { return a *= c; }
    friend LatticePoly operator*(const LatticePoly &a, const LatticePoly &b);
    friend bool operator==(const LatticePoly &a, const LatticePoly &b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    Rational evaluate(const std::vector<Rational> &point) const;
    double evaluate(const std::vector<double> &point) const;

    /// Partial derivative with respect to variable `index`.
    LatticePoly derivative(int index) const;
    /// p(x + offset), expanded exactly.
    LatticePoly shifted(const std::vector<Rational> &offset) const;
    /// Re-indexes variables: slot k of this polynomial becomes slot target[k] of a
    /// polynomial of the given arity.
    LatticePoly embed(int arity, const std::vector<int> &target, std::vector<std::string> names = {}) const;

    /// {"variables": [...], "degree": d, "terms": [{"exponents": [..], "coefficient": "p/q"}]}
    std::string to_json() const;

   private:
    int arity_;
    std::vector<std::string> names_;
    std::map<Exponents, Rational> terms_;
};

/// Product over the given linear factors a + b*g + c*N (+ d*M); convenience for
/// building the closed-form products.
LatticePoly linear(int arity, const Rational &constant, const std::vector<Rational> &coeffs,
                   std::vector<std::string> names = {});

}  // namespace querylab
