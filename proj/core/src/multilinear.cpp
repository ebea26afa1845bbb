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

#include "querylab/multilinear.hpp"

#include "json.hpp"

namespace querylab {

using nlohmann::ordered_json;

MultilinearPoly::MultilinearPoly(const QSqrt2 &c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

void MultilinearPoly::add(const Monomial &m, const QSqrt2 &c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultilinearPoly::add(const MultilinearPoly &other, const QSqrt2 &scale) {
    for (const auto &[m, c] : other.terms_) add(m, c * scale);
}

MultilinearPoly MultilinearPoly::times(const Indicator &d) const {
    MultilinearPoly out;
    for (const auto &[m, c] : terms_) {
        if (auto prod = m.times(d)) out.add(*prod, c);
    }
    return out;
}

MultilinearPoly MultilinearPoly::operator*(const MultilinearPoly &other) const {
    MultilinearPoly out;
    for (const auto &[m1, c1] : terms_) {
        for (const auto &[m2, c2] : other.terms_) {
            if (auto prod = m1.times(m2)) out.add(*prod, c1 * c2);
        }
    }
    return out;
}

MultilinearPoly &MultilinearPoly::operator*=(const QSqrt2 &c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_) v *= c;
    return *this;
}

MultilinearPoly &MultilinearPoly::operator+=(const MultilinearPoly &other) {
    add(other, QSqrt2(1));
    return *this;
}

QSqrt2 MultilinearPoly::coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QSqrt2() : it->second;
}

int MultilinearPoly::degree() const {
    int d = 0;
    for (const auto &[m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool MultilinearPoly::has_rational_coefficients() const {
    for (const auto &[m, c] : terms_) {
        if (!c.is_rational()) return false;
    }
    return true;
}

QSqrt2 evaluate_poly(const MultilinearPoly &p, const Instance &inst) {
    QSqrt2 total;
    for (const auto &[m, c] : p.terms()) {
        if (m.holds(inst)) total += c;
    }
    return total;
}

std::string poly_to_json(const MultilinearPoly &p) {
    ordered_json j;
    j["degree"] = p.degree();
    ordered_json terms = ordered_json::array();
    for (const auto &[m, c] : p.terms()) {
        ordered_json mono = ordered_json::array();
        for (const auto &d : m.factors()) mono.push_back(ordered_json::array({to_string(d.reg), d.position, d.value}));
        terms.push_back({{"monomial", mono}, {"coefficient", c.str()}});
    }
    j["terms"] = terms;
    return j.dump(2) + "\n";
}

MultilinearPoly poly_from_json(const std::string &text) {
    try {
        auto j = ordered_json::parse(text);
        MultilinearPoly p;
        for (const auto &t : j.at("terms")) {
            std::vector<Indicator> factors;
            for (const auto &f : t.at("monomial")) {
                std::string reg = f.at(0).get<std::string>();
                if (reg != "X" && reg != "Y") throw Error("unknown register '" + reg + "'");
                factors.push_back({reg == "X" ? Register::X : Register::Y, f.at(1).get<int>(), f.at(2).get<int>()});
            }
            auto m = Monomial::from(std::move(factors));
            if (!m) throw Error("polynomial term pins one position to two values");
            p.add(*m, QSqrt2::parse(t.at("coefficient").get<std::string>()));
        }
        return p;
    } catch (const ordered_json::exception &e) {
        throw Error(std::string("malformed polynomial file: ") + e.what());
    }
}

}  // namespace querylab
