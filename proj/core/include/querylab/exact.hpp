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

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace querylab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a brute-force enumeration would exceed its configured cap.
struct EnumerationTooLarge : Error {
    using Error::Error;
};

/// num/den in lowest terms. Throws Error on a zero denominator.
Rational make_rational(const Integer &num, const Integer &den);

/// Parses "p/q", "p", or "-p/q". Throws Error on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q" (integers come out as "p/1") so serialized reports have one shape.
std::string format_rational(const Rational &value);

Integer factorial(long n);
Integer binomial(long n, long k);

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
class QSqrt2 {
   public:
    QSqrt2() = default;
    QSqrt2(long value) : a_(value) {}
    QSqrt2(Rational a) : a_(std::move(a)) { a_.canonicalize(); }
    QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    static QSqrt2 sqrt2() { return QSqrt2(0, 1); }
    /// 1/sqrt(2) = sqrt(2)/2.
    static QSqrt2 inv_sqrt2() { return QSqrt2(0, Rational(1, 2)); }

    const Rational &rational_part() const { return a_; }
    const Rational &sqrt2_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    /// Returns the rational value; throws Error if the sqrt(2) part is nonzero.
    const Rational &as_rational() const;

    /// Field norm a^2 - 2 b^2.
    Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
    QSqrt2 conjugate() const { return QSqrt2(a_, -b_); }
    QSqrt2 inverse() const;
    int sign() const;

    double to_double() const;
    /// "a+b√2" with both parts as "p/q"; rational elements print as just "p/q".
    std::string str() const;
    /// Accepts "p/q", "p/q√2", "p/q*sqrt2", "p/q+r/s√2", "-r/s√2", "√2".
    static QSqrt2 parse(std::string_view text);

    QSqrt2 &operator+=(const QSqrt2 &o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QSqrt2 &operator-=(const QSqrt2 &o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QSqrt2 &operator*=(const QSqrt2 &o);
    QSqrt2 &operator*=(const Rational &r) {
        a_ *= r;
        b_ *= r;
        return *this;
    }
    QSqrt2 &operator/=(const QSqrt2 &o) { return *this *= o.inverse(); }

    friend QSqrt2 operator+(QSqrt2 x, const QSqrt2 &y) { return x += y; }
    friend QSqrt2 operator-(QSqrt2 x, const QSqrt2 &y) { return x -= y; }
    friend QSqrt2 operator*(QSqrt2 x, const QSqrt2 &y) { return x *= y; }
    friend QSqrt2 operator*(QSqrt2 x, const Rational &y) { return x *= y; }
    friend QSqrt2 operator*(const Rational &y, QSqrt2 x) { return x *= y; }
    friend QSqrt2 operator/(QSqrt2 x, const QSqrt2 &y) { return x /= y; }
    friend QSqrt2 operator-(const QSqrt2 &x) { return QSqrt2(-x.a_, -x.b_); }
    friend bool operator==(const QSqrt2 &x, const QSqrt2 &y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator<(const QSqrt2 &x, const QSqrt2 &y) { return (x - y).sign() < 0; }

   private:
    Rational a_;
    Rational b_;
};

/// Uniform interface over the two amplitude representations (exact Q(sqrt 2), float).
template <class A>
struct AmplitudeTraits;

template <>
struct AmplitudeTraits<QSqrt2> {
    static constexpr bool exact = true;
    static QSqrt2 one() { return QSqrt2(1); }
    static bool is_zero(const QSqrt2 &v) { return v.is_zero(); }
    static double to_double(const QSqrt2 &v) { return v.to_double(); }
    static QSqrt2 from_exact(const QSqrt2 &v) { return v; }
    static QSqrt2 inv_sqrt2() { return QSqrt2::inv_sqrt2(); }
};

template <>
struct AmplitudeTraits<double> {
    static constexpr bool exact = false;
    static double one() { return 1.0; }
    static bool is_zero(double v) { return v == 0.0; }
    static double to_double(double v) { return v; }
    static double from_exact(const QSqrt2 &v) { return v.to_double(); }
    static double inv_sqrt2();
};

}  // namespace querylab
