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

#include "jackkernel/multipoly.hpp"
#include "jackkernel/ratfunc.hpp"

namespace jk {

// Runtime descriptor of a coefficient ring containing the deformation
// parameter: carries the values alpha and b = alpha - 1 and knows how to
// divide exactly by alpha = 1 + b.  The symmetric-function layer is
// templated on the concrete coefficient type and takes one of these.
template <class R>
struct Ring;

template <>
struct Ring<Rational> {
    Rational alpha;
    Rational b;

    Rational embed(const Rational& q) const { return q; }
    Rational div_alpha(const Rational& v) const {
        if (alpha == 0) fail(Errc::pole, "alpha = 0 is outside the numeric coefficient ring");
        return v / alpha;
    }
};

template <>
struct Ring<RatFunc> {
    RatFunc alpha;
    RatFunc b;

    RatFunc embed(const Rational& q) const { return RatFunc(q); }
    RatFunc div_alpha(const RatFunc& v) const { return v / alpha; }
};

template <>
struct Ring<MultiPolyLoc> {
    MultiPolyLoc alpha;
    MultiPolyLoc b;
    SymbolsPtr syms;

    // Constants promote lazily when they meet a symbol-carrying value.
    MultiPolyLoc embed(const Rational& q) const { return MultiPolyLoc::constant(q); }
    MultiPolyLoc div_alpha(const MultiPolyLoc& v) const {
        if (!v.symbols() && syms) return v.project(syms).div_one_plus_b();
        return v.div_one_plus_b();
    }
};

// Q(alpha): rational functions in the symbol "alpha".
inline Ring<RatFunc> alpha_field() {
    RatFunc a = RatFunc::variable("alpha");
    return Ring<RatFunc>{a, a - RatFunc(Rational(1))};
}

// Q(s) with alpha = s^2 (hosts half-integer powers of alpha).
inline Ring<RatFunc> sqrt_field() {
    RatFunc s = RatFunc::variable("s");
    RatFunc a = s * s;
    return Ring<RatFunc>{a, a - RatFunc(Rational(1))};
}

inline RatFunc sqrt_alpha() { return RatFunc::variable("s"); }

// gamma = 1/sqrt(alpha) - sqrt(alpha) = (1 - s^2)/s.
inline RatFunc gamma_value() {
    RatFunc s = RatFunc::variable("s");
    return (RatFunc(Rational(1)) - s * s) / s;
}

// Q with alpha specialized to a rational value.
inline Ring<Rational> numeric_field(const Rational& alpha_value) {
    return Ring<Rational>{alpha_value, alpha_value - 1};
}

// Polynomials in b, s_1..s_k, r_1..r_k over Q, localized at 1 + b.
struct StanleyRing {
    Ring<MultiPolyLoc> ring;
    SymbolsPtr syms;
    unsigned k = 0;

    MultiPolyLoc b() const { return MultiPolyLoc::variable(syms, 0); }
    MultiPolyLoc s(unsigned i) const { return MultiPolyLoc::variable(syms, i); }
    MultiPolyLoc r(unsigned i) const { return MultiPolyLoc::variable(syms, k + i); }
};

inline StanleyRing stanley_ring(unsigned k) {
    SymbolList names;
    names.push_back("b");
    for (unsigned i = 1; i <= k; ++i) names.push_back("s" + std::to_string(i));
    for (unsigned i = 1; i <= k; ++i) names.push_back("r" + std::to_string(i));
    SymbolsPtr syms = make_symbols(std::move(names));
    MultiPolyLoc b = MultiPolyLoc::variable(syms, 0);
    MultiPolyLoc alpha = MultiPolyLoc::constant(Rational(1)) + b;
    StanleyRing sr;
    sr.ring = Ring<MultiPolyLoc>{alpha, b, syms};
    sr.syms = syms;
    sr.k = k;
    return sr;
}

// Polynomials in b alone, localized at 1 + b (for operator-series work).
inline Ring<MultiPolyLoc> b_ring() {
    SymbolsPtr syms = make_symbols({"b"});
    MultiPolyLoc b = MultiPolyLoc::variable(syms, 0);
    return Ring<MultiPolyLoc>{MultiPolyLoc::constant(Rational(1)) + b, b, syms};
}

inline bool ring_zero(const Rational& v) { return v == 0; }
inline bool ring_zero(const RatFunc& v) { return v.is_zero(); }
inline bool ring_zero(const MultiPolyLoc& v) { return v.is_zero(); }

inline Rational ring_div(const Rational& a, const Rational& b) {
    if (b == 0) fail(Errc::inexact_division, "division by zero");
    return a / b;
}
inline RatFunc ring_div(const RatFunc& a, const RatFunc& b) { return a / b; }
inline MultiPolyLoc ring_div(const MultiPolyLoc& a, const MultiPolyLoc& b) { return a.div_exact(b); }

inline Rational ring_pow(const Rational& a, unsigned e) { return pow_rational(a, e); }
inline RatFunc ring_pow(const RatFunc& a, unsigned e) { return a.pow(e); }
inline MultiPolyLoc ring_pow(const MultiPolyLoc& a, unsigned e) { return a.pow(e); }

// Maps a value of Q(alpha) into Q(s) via alpha = s^2.
inline RatFunc to_sqrt_ring(const RatFunc& v) {
    if (!v.symbol().empty() && v.symbol() != "alpha")
        fail(Errc::ring_mismatch, "expected a value in Q(alpha)");
    return v.subst_square("s");
}

// Inverse of to_sqrt_ring on even-degree values.
inline RatFunc from_sqrt_ring(const RatFunc& v) {
    if (!v.symbol().empty() && v.symbol() != "s") fail(Errc::ring_mismatch, "expected a value in Q(s)");
    return v.unsubst_square("alpha");
}

} // namespace jk
