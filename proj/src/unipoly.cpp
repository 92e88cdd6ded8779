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
#include "jackkernel/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace jk {

namespace {
std::string rat_str(const Rational& q) {
    if (q.den() == 1) return q.num().get_str();
    return q.num().get_str() + "/" + q.den().get_str();
}
} // namespace

UniPoly::UniPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

UniPoly::UniPoly(std::string sym, std::vector<Rational> coeffs) : sym_(std::move(sym)), c_(std::move(coeffs)) {
    normalize();
}

UniPoly UniPoly::variable(const std::string& sym) {
    return UniPoly(sym, {Rational(0), Rational(1)});
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) sym_.clear();
}

std::string UniPoly::unify(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty() || a == b) return a;
    fail(Errc::ring_mismatch, "univariate symbols differ: '" + a + "' vs '" + b + "'");
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    sym_ = unify(sym_, o.sym_);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    sym_ = unify(sym_, o.sym_);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly r;
    r.sym_ = UniPoly::unify(a.sym_, b.sym_);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

UniPoly UniPoly::operator*(const Rational& c) const {
    if (c == 0) return UniPoly();
    UniPoly r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

bool UniPoly::operator==(const UniPoly& o) const {
    if (c_ != o.c_) return false;
    if (c_.empty() || is_constant()) return true;
    return sym_.empty() || o.sym_.empty() || sym_ == o.sym_;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly acc{Rational(1)};
    for (unsigned i = 0; i < e; ++i) acc *= *this;
    return acc;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::stretch_square(const std::string& new_sym) const {
    std::vector<Rational> out(c_.empty() ? 0 : 2 * c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[2 * i] = c_[i];
    return UniPoly(new_sym, std::move(out));
}

UniPoly UniPoly::unstretch_square(const std::string& new_sym) const {
    std::vector<Rational> out((c_.size() + 1) / 2, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i % 2 == 1) {
            if (c_[i] != 0) fail(Errc::inexact_division, "polynomial has odd-degree terms");
        } else {
            out[i / 2] = c_[i];
        }
    }
    return UniPoly(new_sym, std::move(out));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) fail(Errc::inexact_division, "division by the zero polynomial");
    std::string sym = unify(a.sym_, b.sym_);
    r = a;
    q = UniPoly();
    q.sym_ = sym;
    r.sym_ = sym;
    if (a.degree() < b.degree()) return;
    q.c_.assign(a.c_.size() - b.c_.size() + 1, Rational(0));
    Rational lead = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        Rational f = r.leading() / lead;
        q.c_[shift] += f;
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
        r.normalize();
    }
    q.normalize();
}

UniPoly UniPoly::div_exact(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) fail(Errc::inexact_division, "polynomial division leaves a remainder");
    return q;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    std::string sym = unify(a.sym_, b.sym_);
    while (!b.is_zero()) {
        UniPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) {
            // Keep coefficients small: rescale the remainder to be primitive.
            Rational f;
            b = b.primitive_part(f);
        }
    }
    if (a.is_zero()) return a;
    UniPoly monic = a * (Rational(1) / a.leading());
    monic.sym_ = sym;
    return monic;
}

UniPoly UniPoly::primitive_part(Rational& factor) const {
    if (is_zero()) {
        factor = Rational(1);
        return *this;
    }
    BigInt den_lcm(1);
    for (const auto& c : c_) {
        BigInt d = c.den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    BigInt num_gcd(0);
    for (const auto& c : c_) {
        BigInt scaled_num = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    if (leading() < 0) num_gcd = -num_gcd;
    factor = Rational(num_gcd, den_lcm);
    UniPoly prim(*this);
    Rational inv = Rational(1) / factor;
    for (auto& c : prim.c_) c *= inv;
    return prim;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::string sym = sym_.empty() ? "x" : sym_;
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && k > 0;
        if (!unit) os << rat_str(a);
        if (k > 0) {
            if (!unit) os << "*";
            os << sym;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string to_string(const Rational& q) { return rat_str(q); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) fail(Errc::parse, "empty rational literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(text);
            return Rational(n);
        }
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        fail(Errc::parse, "malformed rational literal '" + text + "'");
    }
}

} // namespace jk
