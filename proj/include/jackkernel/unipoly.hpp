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
#include <vector>

#include "jackkernel/rational.hpp"

namespace jk {

// Dense univariate polynomial over the rationals, tagged with a symbol name.
// A value with an empty symbol is a plain constant and combines with any
// symbol; two nonempty symbols must agree.  No trailing zero coefficients;
// the zero polynomial has an empty coefficient list.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& c);
    UniPoly(std::string sym, std::vector<Rational> coeffs);

    static UniPoly variable(const std::string& sym);

    const std::string& symbol() const { return sym_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly operator*(const Rational& c) const;

    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly pow(unsigned e) const;
    Rational eval(const Rational& x) const;

    // Substitutes x := y^2 (used to map a polynomial in alpha to one in s).
    UniPoly stretch_square(const std::string& new_sym) const;
    // Inverse of stretch_square; fails unless all odd coefficients vanish.
    UniPoly unstretch_square(const std::string& new_sym) const;

    // Quotient and remainder; exact division helper raises on nonzero remainder.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    static UniPoly div_exact(const UniPoly& a, const UniPoly& b);
    // Monic greatest common divisor.
    static UniPoly gcd(UniPoly a, UniPoly b);

    // Clears denominators and the content: returns the primitive
    // integer-coefficient multiple and the rational factor taken out, so that
    // *this == factor * primitive.
    UniPoly primitive_part(Rational& factor) const;

    std::string to_string() const;

private:
    void normalize();
    static std::string unify(const std::string& a, const std::string& b);

    std::string sym_;
    std::vector<Rational> c_;
};

} // namespace jk
