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
#include "jackkernel/ratfunc.hpp"

namespace jk {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(Errc::inexact_division, "rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        UniPoly g = UniPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = UniPoly::div_exact(num_, g);
            den_ = UniPoly::div_exact(den_, g);
        }
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) fail(Errc::inexact_division, "division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(Rational(1));
    if (is_zero()) {
        if (e < 0) fail(Errc::pole, "zero rational function raised to a negative power");
        return RatFunc();
    }
    RatFunc base = e > 0 ? *this : RatFunc(Rational(1)) / *this;
    RatFunc acc(Rational(1));
    for (long i = 0, n = e > 0 ? e : -e; i < n; ++i) acc = acc * base;
    return acc;
}

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) fail(Errc::pole, "substitution hits a pole of a rational function");
    return num_.eval(x) / d;
}

RatFunc RatFunc::subst_square(const std::string& new_sym) const {
    return RatFunc(num_.stretch_square(new_sym), den_.stretch_square(new_sym));
}

RatFunc RatFunc::unsubst_square(const std::string& new_sym) const {
    return RatFunc(num_.unstretch_square(new_sym), den_.unstretch_square(new_sym));
}

void RatFunc::integer_form(UniPoly& num_out, UniPoly& den_out) const {
    Rational fn, fd;
    UniPoly pn = num_.primitive_part(fn);
    UniPoly pd = den_.primitive_part(fd);
    // num/den == (fn/fd) * pn/pd with pn, pd primitive over the integers.
    Rational f = fn / fd;
    num_out = pn * Rational(f.num());
    den_out = pd * Rational(f.den());
    if (den_out.leading() < 0) {
        num_out = -num_out;
        den_out = -den_out;
    }
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) {
        if (den_.coeff(0) == 1) return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace jk
