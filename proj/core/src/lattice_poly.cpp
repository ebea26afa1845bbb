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

#include "querylab/lattice_poly.hpp"

#include <cmath>

#include "json.hpp"

namespace querylab {

namespace {

std::vector<std::string> default_names(int arity) {
    if (arity == 2) return {"g", "N"};
    return {"g", "N", "M"};
}

}  // namespace

LatticePoly::LatticePoly(int arity, std::vector<std::string> names) : arity_(arity), names_(std::move(names)) {
    if (arity != 2 && arity != 3) throw Error("lattice polynomials have arity 2 or 3");
    if (names_.empty()) names_ = default_names(arity);
    if (static_cast<int>(names_.size()) != arity) throw Error("variable name count does not match arity");
}

LatticePoly LatticePoly::constant(int arity, const Rational &c, std::vector<std::string> names) {
    LatticePoly p(arity, std::move(names));
    p.add_term({0, 0, 0}, c);
    return p;
}

LatticePoly LatticePoly::variable(int arity, int index, std::vector<std::string> names) {
    if (index < 0 || index >= arity) throw Error("variable index out of range");
    LatticePoly p(arity, std::move(names));
    Exponents e{0, 0, 0};
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

void LatticePoly::add_term(const Exponents &e, const Rational &c) {
    if (sgn(c) == 0) return;
    for (int k = arity_; k < 3; ++k) {
        if (e[k] != 0) throw Error("exponent in unused slot");
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational LatticePoly::coefficient(const Exponents &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LatticePoly::degree() const {
    int d = 0;
    for (const auto &[e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

LatticePoly &LatticePoly::operator+=(const LatticePoly &o) {
    if (o.arity_ != arity_) throw Error("arity mismatch");
    for (const auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
}

LatticePoly &LatticePoly::operator-=(const LatticePoly &o) {
    if (o.arity_ != arity_) throw Error("arity mismatch");
    for (const auto &[e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LatticePoly &LatticePoly::operator*=(const Rational &c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_) v *= c;
    return *this;
}

LatticePoly operator*(const LatticePoly &a, const LatticePoly &b) {
    if (a.arity_ != b.arity_) throw Error("arity mismatch");
    LatticePoly out(a.arity_, a.names_);
    for (const auto &[e1, c1] : a.terms_) {
        for (const auto &[e2, c2] : b.terms_) {
            out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        }
    }
    return out;
}

Rational LatticePoly::evaluate(const std::vector<Rational> &point) const {
    if (static_cast<int>(point.size()) != arity_) throw Error("evaluation point has wrong arity");
    Rational total = 0;
    for (const auto &[e, c] : terms_) {
        Rational term = c;
        for (int k = 0; k < arity_; ++k) {
            for (int p = 0; p < e[k]; ++p) term *= point[k];
        }
        total += term;
    }
    return total;
}

double LatticePoly::evaluate(const std::vector<double> &point) const {
    if (static_cast<int>(point.size()) != arity_) throw Error("evaluation point has wrong arity");
    double total = 0.0;
    for (const auto &[e, c] : terms_) {
        double term = c.get_d();
        for (int k = 0; k < arity_; ++k) term *= std::pow(point[k], e[k]);
        total += term;
    }
    return total;
}

LatticePoly LatticePoly::derivative(int index) const {
    if (index < 0 || index >= arity_) throw Error("variable index out of range");
    LatticePoly out(arity_, names_);
    for (const auto &[e, c] : terms_) {
        if (e[index] == 0) continue;
        Exponents f = e;
        --f[index];
        out.add_term(f, c * e[index]);
    }
    return out;
}

LatticePoly LatticePoly::shifted(const std::vector<Rational> &offset) const {
    if (static_cast<int>(offset.size()) != arity_) throw Error("shift has wrong arity");
    // (x + a)^k expanded per variable, then multiplied out term by term.
    LatticePoly out(arity_, names_);
    for (const auto &[e, c] : terms_) {
        LatticePoly term = constant(arity_, c, names_);
        for (int k = 0; k < arity_; ++k) {
            if (e[k] == 0) continue;
            LatticePoly factor(arity_, names_);
            Rational power = 1;
            for (int j = 0; j <= e[k]; ++j) {
                // C(e_k, j) x^(e_k - j) a^j
                Exponents f{0, 0, 0};
                f[k] = e[k] - j;
                factor.add_term(f, Rational(binomial(e[k], j)) * power);
                power *= offset[k];
            }
            term = term * factor;
        }
        out += term;
    }
    return out;
}

LatticePoly LatticePoly::embed(int arity, const std::vector<int> &target, std::vector<std::string> names) const {
    if (static_cast<int>(target.size()) != arity_) throw Error("embedding needs one target per variable");
    LatticePoly out(arity, std::move(names));
    for (const auto &[e, c] : terms_) {
        Exponents f{0, 0, 0};
        for (int k = 0; k < arity_; ++k) {
            if (target[k] < 0 || target[k] >= arity) throw Error("embedding target out of range");
            f[target[k]] += e[k];
        }
        out.add_term(f, c);
    }
    return out;
}

std::string LatticePoly::to_json() const {
    nlohmann::ordered_json j;
    j["variables"] = names_;
    j["degree"] = degree();
    auto terms = nlohmann::ordered_json::array();
    for (const auto &[e, c] : terms_) {
        std::vector<int> ex(e.begin(), e.begin() + arity_);
        terms.push_back({{"exponents", ex}, {"coefficient", format_rational(c)}});
    }
    j["terms"] = terms;
    return j.dump(2) + "\n";
}

LatticePoly linear(int arity, const Rational &constant, const std::vector<Rational> &coeffs,
                   std::vector<std::string> names) {
    if (static_cast<int>(coeffs.size()) != arity) throw Error("linear form has wrong arity");
    LatticePoly p = LatticePoly::constant(arity, constant, std::move(names));
    for (int k = 0; k < arity; ++k) {
        LatticePoly::Exponents e{0, 0, 0};
        e[k] = 1;
        p.add_term(e, coeffs[k]);
    }
    return p;
}

}  // namespace querylab
