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
#include "jackkernel/scalar.hpp"

namespace jk {

namespace {

// Promotes rationals into the partner's ring; anything else must match.
std::pair<Scalar, Scalar> unify(const Scalar& a, const Scalar& b) {
    if (a.index() == b.index()) return {a, b};
    if (std::holds_alternative<Rational>(a)) {
        const Rational& q = std::get<Rational>(a);
        if (std::holds_alternative<RatFunc>(b)) return {Scalar(RatFunc(q)), b};
        return {Scalar(MultiPolyLoc::constant(q)), b};
    }
    if (std::holds_alternative<Rational>(b)) {
        auto [bb, aa] = unify(b, a);
        return {aa, bb};
    }
    fail(Errc::ring_mismatch, "scalar operands live in different rings");
}

template <class T>
Scalar arith_impl(const T& x, const T& y, ScalarOp op) {
    switch (op) {
    case ScalarOp::add: return x + y;
    case ScalarOp::sub: return x - y;
    case ScalarOp::mul: return x * y;
    case ScalarOp::neg: return -x;
    case ScalarOp::div_exact:
        if constexpr (std::is_same_v<T, Rational>) {
            if (y == 0) fail(Errc::inexact_division, "division by zero");
            return Rational(x / y);
        } else if constexpr (std::is_same_v<T, RatFunc>) {
            return x / y;
        } else {
            return x.div_exact(y);
        }
    }
    fail(Errc::internal_check, "unknown scalar operation");
}

} // namespace

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    auto [x, y] = unify(a, b);
    return std::visit(
        [&](const auto& xx) -> Scalar {
            using T = std::decay_t<decltype(xx)>;
            return arith_impl(xx, std::get<T>(y), op);
        },
        x);
}

Scalar substitute(const Scalar& a, const std::string& symbol, const Rational& value) {
    if (std::holds_alternative<Rational>(a)) return a;
    if (std::holds_alternative<RatFunc>(a)) {
        const RatFunc& f = std::get<RatFunc>(a);
        if (!f.symbol().empty() && f.symbol() != symbol)
            fail(Errc::ring_mismatch, "value does not involve symbol '" + symbol + "'");
        return Scalar(f.eval(value));
    }
    const MultiPolyLoc& p = std::get<MultiPolyLoc>(a);
    return Scalar(p.substitute(p.find_symbol(symbol), value));
}

bool scalar_is_zero(const Scalar& a) {
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) return x == 0;
            else return x.is_zero();
        },
        a);
}

std::string scalar_to_string(const Scalar& a) {
    return std::visit(
        [](const auto& x) -> std::string {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) return to_string(x);
            else return x.to_string();
        },
        a);
}

} // namespace jk
