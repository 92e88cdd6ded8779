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

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jackkernel/rational.hpp"

namespace jk {

using SymbolList = std::vector<std::string>;
using SymbolsPtr = std::shared_ptr<const SymbolList>;

inline SymbolsPtr make_symbols(SymbolList names) {
    return std::make_shared<const SymbolList>(std::move(names));
}

// Graded lexicographic order on exponent vectors: total degree first.
struct GradedLexLess {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial over Q in a fixed ordered symbol list,
// localized at (1 + b): the value is numerator / (1+b)^loc.  The exponent
// loc is kept minimal (the numerator is not divisible by 1+b when loc > 0).
// A value with a null symbol list is a promotable constant.
class MultiPolyLoc {
public:
    using Expo = std::vector<unsigned>;
    using TermMap = std::map<Expo, Rational, GradedLexLess>;

    MultiPolyLoc() = default;
    MultiPolyLoc(const Rational& c) {
        if (c != Rational(0)) t_.emplace(Expo{}, c);
    }
    static MultiPolyLoc constant(const Rational& c);
    static MultiPolyLoc variable(const SymbolsPtr& syms, std::size_t index);
    static MultiPolyLoc monomial(const SymbolsPtr& syms, const Expo& e, const Rational& c);

    const SymbolsPtr& symbols() const { return syms_; }
    const TermMap& terms() const { return t_; }
    unsigned loc_exp() const { return loc_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    // The constant value; fails if the polynomial is not constant.
    Rational constant_value() const;

    MultiPolyLoc operator-() const;
    friend MultiPolyLoc operator+(const MultiPolyLoc& a, const MultiPolyLoc& b);
    friend MultiPolyLoc operator-(const MultiPolyLoc& a, const MultiPolyLoc& b);
    friend MultiPolyLoc operator*(const MultiPolyLoc& a, const MultiPolyLoc& b);
    MultiPolyLoc& operator+=(const MultiPolyLoc& o) { return *this = *this + o; }
    MultiPolyLoc& operator-=(const MultiPolyLoc& o) { return *this = *this - o; }
    MultiPolyLoc& operator*=(const MultiPolyLoc& o) { return *this = *this * o; }
    MultiPolyLoc operator*(const Rational& c) const;

    bool operator==(const MultiPolyLoc& o) const;
    bool operator!=(const MultiPolyLoc& o) const { return !(*this == o); }

    MultiPolyLoc pow(unsigned e) const;

    // Divides by (1 + b); always possible in the localized ring.
    MultiPolyLoc div_one_plus_b() const;

    // Exact polynomial division; fails with inexact_division otherwise.
    MultiPolyLoc div_exact(const MultiPolyLoc& d) const;

    // Substitution of one symbol.  The replacement must live over the same
    // symbol list (or be a constant).
    MultiPolyLoc substitute(std::size_t index, const MultiPolyLoc& value) const;
    MultiPolyLoc substitute(std::size_t index, const Rational& value) const;

    // Full evaluation; reports a pole if loc > 0 and b = -1.
    Rational eval(const std::vector<Rational>& values) const;

    // Transports the polynomial to another symbol list, matching by name.
    // Fails if a symbol with a nonzero exponent is missing from the target.
    MultiPolyLoc project(const SymbolsPtr& target) const;

    // Copy with the exponents of two symbols swapped in every term.
    MultiPolyLoc swap_symbols(std::size_t i, std::size_t j) const;

    // Copy with each term scaled by (-1)^(sum of exponents of the selected
    // symbols); i.e. the rewriting x -> -x for those symbols.
    MultiPolyLoc negate_symbols(const std::vector<std::size_t>& indices) const;

    // Total degree of a term in the selected symbols.
    static unsigned degree_in(const Expo& e, const std::vector<std::size_t>& indices);

    std::size_t find_symbol(const std::string& name) const;

    std::string to_string() const;

private:
    void insert_term(const Expo& e, const Rational& c);
    void reduce();
    bool divide_one_plus_b_once();
    std::size_t b_index() const;
    static void align(const MultiPolyLoc& a, const MultiPolyLoc& b, MultiPolyLoc& aa, MultiPolyLoc& bb);
    MultiPolyLoc promoted(const SymbolsPtr& syms) const;

    SymbolsPtr syms_;
    TermMap t_;
    unsigned loc_ = 0;
};

} // namespace jk
