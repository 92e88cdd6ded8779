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

#include <string>

#include "jackkernel/unipoly.hpp"

namespace jk {

// Rational function in one symbol: numerator / denominator with coprime
// parts and a monic, nonzero denominator.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RatFunc(UniPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    RatFunc(UniPoly num, UniPoly den);

    static RatFunc variable(const std::string& sym) { return RatFunc(UniPoly::variable(sym)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    const std::string& symbol() const { return num_.symbol().empty() ? den_.symbol() : num_.symbol(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc pow(long e) const;

    // Substitutes the symbol by a rational value; reports a pole distinctly.
    Rational eval(const Rational& x) const;

    // alpha := new_sym^2 (maps Q(alpha) into Q(s) with alpha = s^2).
    RatFunc subst_square(const std::string& new_sym) const;
    // Inverse direction; defined only when all degrees involved are even.
    RatFunc unsubst_square(const std::string& new_sym) const;

    // Integer-coefficient presentation: scales numerator and denominator by
    // the same rational so both have coprime integer coefficients and the
    // denominator has a positive leading coefficient.
    void integer_form(UniPoly& num_out, UniPoly& den_out) const;

    std::string to_string() const;

private:
    void reduce();

    UniPoly num_;
    UniPoly den_;
};

} // namespace jk
