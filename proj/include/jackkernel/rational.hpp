/*
   Copyright 2026 The jackkernel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <gmpxx.h>

#include <string>

#include "jackkernel/errors.hpp"

namespace jk {

using BigInt = mpz_class;

// Arbitrary-precision rational in canonical form (gcd one, positive
// denominator).  Thin eager wrapper over GMP: the lazy gmpxx expression
// templates would otherwise leak into overload resolution across the
// generic polynomial code.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(unsigned n) : v_(static_cast<unsigned long>(n)) {}
    Rational(unsigned long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) fail(Errc::inexact_division, "rational with zero denominator");
        v_.canonicalize();
    }
    Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) fail(Errc::inexact_division, "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) {}

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) fail(Errc::inexact_division, "division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline bool is_integer(const Rational& q) { return q.den() == 1; }

inline BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) fail(Errc::pole, "zero raised to a negative power");
        return Rational(0);
    }
    Rational acc(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    for (long i = 0, n = e > 0 ? e : -e; i < n; ++i) acc *= b;
    return acc;
}

// Parses "p" or "p/q" with optional sign.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

} // namespace jk
