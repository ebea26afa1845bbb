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

#include "querylab/exact.hpp"

#include <cctype>
#include <cmath>

namespace querylab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Strips a trailing sqrt(2) marker; returns true if one was present.
bool strip_sqrt2(std::string_view &s) {
    static constexpr std::string_view markers[] = {"*√2", "√2", "*sqrt2", "sqrt2", "*sqrt(2)", "sqrt(2)"};
    for (auto m : markers) {
        if (s.size() >= m.size() && s.substr(s.size() - m.size()) == m) {
            s.remove_suffix(m.size());
            s = trim(s);
            return true;
        }
    }
    return false;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    num = trim(num);
    den = trim(den);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw Error("malformed rational: '" + std::string(text) + "'");
    }
    std::string n(num.front() == '+' ? num.substr(1) : num);
    std::string d(den.front() == '+' ? den.substr(1) : den);
    Integer dz(d);
    if (dz == 0) throw Error("zero denominator in rational: '" + std::string(text) + "'");
    Rational r(Integer(n), dz);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational &value) {
    Rational v = value;
    v.canonicalize();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational make_rational(const Integer &num, const Integer &den) {
    if (sgn(den) == 0) throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer factorial(long n) {
    if (n < 0) throw Error("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

const Rational &QSqrt2::as_rational() const {
    if (!is_rational()) throw Error("expected a rational value, got " + str());
    return a_;
}

QSqrt2 &QSqrt2::operator*=(const QSqrt2 &o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QSqrt2 QSqrt2::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw Error("division by zero in Q(sqrt 2)");
    return QSqrt2(a_ / n, -b_ / n);
}

int QSqrt2::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2.
    int cmp = ::cmp(a_ * a_, 2 * b_ * b_);
    return cmp > 0 ? sa : (cmp < 0 ? sb : 0);
}

double QSqrt2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::string QSqrt2::str() const {
    if (is_rational()) return format_rational(a_);
    std::string out;
    if (sgn(a_) != 0) {
        out = format_rational(a_);
        if (sgn(b_) > 0) out += "+";
    }
    out += format_rational(b_) + "√2";
    return out;
}

QSqrt2 QSqrt2::parse(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw Error("empty Q(sqrt 2) literal");
    // Split at a top-level '+' or '-' that is not the leading sign.
    size_t split = std::string_view::npos;
    for (size_t i = 1; i < text.size(); ++i) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/') {
            split = i;
            break;
        }
    }
    auto parse_term = [&](std::string_view term, Rational &a, Rational &b) {
        term = trim(term);
        bool irr = strip_sqrt2(term);
        Rational v;
        if (term.empty() || term == "+") {
            v = 1;
        } else if (term == "-") {
            v = -1;
        } else {
            v = parse_rational(term);
        }
        (irr ? b : a) += v;
    };
    Rational a, b;
    if (split == std::string_view::npos) {
        parse_term(text, a, b);
    } else {
        parse_term(text.substr(0, split), a, b);
        parse_term(text.substr(split), a, b);
    }
    return QSqrt2(a, b);
}

double AmplitudeTraits<double>::inv_sqrt2() { return 1.0 / std::sqrt(2.0); }

}  // namespace querylab
