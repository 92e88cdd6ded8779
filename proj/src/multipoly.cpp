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
#include "jackkernel/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "jackkernel/errors.hpp"

namespace jk {

MultiPolyLoc MultiPolyLoc::constant(const Rational& c) {
    MultiPolyLoc p;
    if (c != 0) p.t_.emplace(Expo{}, c);
    return p;
}

MultiPolyLoc MultiPolyLoc::variable(const SymbolsPtr& syms, std::size_t index) {
    if (!syms || index >= syms->size()) fail(Errc::internal_check, "symbol index out of range");
    MultiPolyLoc p;
    p.syms_ = syms;
    Expo e(syms->size(), 0);
    e[index] = 1;
    p.t_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPolyLoc MultiPolyLoc::monomial(const SymbolsPtr& syms, const Expo& e, const Rational& c) {
    if (!syms || e.size() != syms->size()) fail(Errc::internal_check, "monomial exponent length mismatch");
    MultiPolyLoc p;
    p.syms_ = syms;
    if (c != 0) p.t_.emplace(e, c);
    return p;
}

bool MultiPolyLoc::is_constant() const {
    if (loc_ != 0) return false;
    if (t_.empty()) return true;
    if (t_.size() > 1) return false;
    const Expo& e = t_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational MultiPolyLoc::constant_value() const {
    if (!is_constant()) fail(Errc::inexact_division, "polynomial is not a constant");
    return t_.empty() ? Rational(0) : t_.begin()->second;
}

void MultiPolyLoc::insert_term(const Expo& e, const Rational& c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

std::size_t MultiPolyLoc::b_index() const {
    if (syms_) {
        for (std::size_t i = 0; i < syms_->size(); ++i)
            if ((*syms_)[i] == "b") return i;
    }
    fail(Errc::ring_mismatch, "localized ring requires a symbol named 'b'");
}

MultiPolyLoc MultiPolyLoc::promoted(const SymbolsPtr& syms) const {
    if (!syms || syms_ == syms) return *this;
    MultiPolyLoc r;
    r.syms_ = syms;
    r.loc_ = loc_;
    std::size_t n = syms->size();
    if (!syms_) {
        for (const auto& [e, c] : t_) {
            (void)e;
            r.t_.emplace(Expo(n, 0), c);
        }
        return r;
    }
    if (*syms_ == *syms) {
        r.t_ = t_;
        return r;
    }
    fail(Errc::ring_mismatch, "multivariate symbol lists differ");
}

void MultiPolyLoc::align(const MultiPolyLoc& a, const MultiPolyLoc& b, MultiPolyLoc& aa, MultiPolyLoc& bb) {
    SymbolsPtr syms = a.syms_ ? a.syms_ : b.syms_;
    aa = a.promoted(syms);
    bb = b.promoted(syms);
}

MultiPolyLoc MultiPolyLoc::operator-() const {
    MultiPolyLoc r(*this);
    for (auto& [e, c] : r.t_) {
        (void)e;
        c = -c;
    }
    return r;
}

MultiPolyLoc operator+(const MultiPolyLoc& a, const MultiPolyLoc& b) {
    MultiPolyLoc aa, bb;
    MultiPolyLoc::align(a, b, aa, bb);
    // Common denominator (1+b)^max(la, lb).  The numerators are raised with
    // the localization exponent pinned to zero so that the intermediate
    // products do not reduce the factor straight back out.
    unsigned l = std::max(aa.loc_, bb.loc_);
    if (aa.loc_ < l || bb.loc_ < l) {
        SymbolsPtr syms = aa.syms_ ? aa.syms_ : bb.syms_;
        if (!syms) fail(Errc::ring_mismatch, "localized constant without symbols");
        MultiPolyLoc one_plus_b;
        one_plus_b.syms_ = syms;
        one_plus_b = MultiPolyLoc::constant(Rational(1)).promoted(syms);
        one_plus_b = one_plus_b + MultiPolyLoc::variable(syms, one_plus_b.b_index());
        auto lift = [&](MultiPolyLoc& v) {
            unsigned have = v.loc_;
            v.loc_ = 0;
            for (unsigned i = have; i < l; ++i) v = v * one_plus_b;
            v.loc_ = l;
        };
        lift(aa);
        lift(bb);
    }
    MultiPolyLoc r;
    r.syms_ = aa.syms_;
    r.loc_ = l;
    r.t_ = aa.t_;
    for (const auto& [e, c] : bb.t_) r.insert_term(e, c);
    r.reduce();
    return r;
}

MultiPolyLoc operator-(const MultiPolyLoc& a, const MultiPolyLoc& b) { return a + (-b); }

MultiPolyLoc operator*(const MultiPolyLoc& a, const MultiPolyLoc& b) {
    MultiPolyLoc aa, bb;
    MultiPolyLoc::align(a, b, aa, bb);
    MultiPolyLoc r;
    r.syms_ = aa.syms_;
    r.loc_ = aa.loc_ + bb.loc_;
    for (const auto& [ea, ca] : aa.t_) {
        for (const auto& [eb, cb] : bb.t_) {
            MultiPolyLoc::Expo e = ea;
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.insert_term(e, ca * cb);
        }
    }
    r.reduce();
    return r;
}

MultiPolyLoc MultiPolyLoc::operator*(const Rational& c) const {
    if (c == 0) return MultiPolyLoc();
    MultiPolyLoc r(*this);
    for (auto& [e, x] : r.t_) {
        (void)e;
        x *= c;
    }
    return r;
}

bool MultiPolyLoc::operator==(const MultiPolyLoc& o) const {
    MultiPolyLoc aa, bb;
    align(*this, o, aa, bb);
    return aa.loc_ == bb.loc_ && aa.t_ == bb.t_;
}

MultiPolyLoc MultiPolyLoc::pow(unsigned e) const {
    MultiPolyLoc acc = MultiPolyLoc::constant(Rational(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

MultiPolyLoc MultiPolyLoc::div_one_plus_b() const {
    if (is_zero()) return *this;
    MultiPolyLoc r(*this);
    if (!r.syms_) fail(Errc::ring_mismatch, "cannot localize a bare constant; promote it first");
    r.loc_ += 1;
    r.reduce();
    return r;
}

void MultiPolyLoc::reduce() {
    if (t_.empty()) {
        loc_ = 0;
        return;
    }
    while (loc_ > 0 && divide_one_plus_b_once()) loc_ -= 1;
}

// Attempts to divide the numerator by (1+b); returns false (leaving the
// value untouched) when the division is not exact.
bool MultiPolyLoc::divide_one_plus_b_once() {
    std::size_t bi = b_index();
    // Group terms by their exponents outside b, then run synthetic division
    // of each univariate-in-b slice by (b + 1).
    std::map<Expo, std::map<unsigned, Rational>> groups;
    for (const auto& [e, c] : t_) {
        Expo rest = e;
        unsigned bd = rest[bi];
        rest[bi] = 0;
        groups[rest][bd] = c;
    }
    TermMap out;
    for (auto& [rest, slice] : groups) {
        unsigned top = slice.rbegin()->first;
        // Divide sum c_d b^d by (b+1): q_d = c_{d+1} - q_{d+1}, remainder c_0 - q_0.
        std::vector<Rational> c(top + 1, Rational(0));
        for (const auto& [d, v] : slice) c[d] = v;
        std::vector<Rational> q(top, Rational(0));
        for (unsigned d = top; d-- > 0;) {
            q[d] = c[d + 1] - (d + 1 < top ? q[d + 1] : Rational(0));
        }
        Rational rem = top > 0 ? c[0] - q[0] : c[0];
        if (rem != 0) return false;
        for (unsigned d = 0; d < top; ++d) {
            if (q[d] == 0) continue;
            Expo e = rest;
            e[bi] = d;
            out[e] = q[d];
        }
    }
    t_ = std::move(out);
    return true;
}

MultiPolyLoc MultiPolyLoc::div_exact(const MultiPolyLoc& d) const {
    if (d.is_zero()) fail(Errc::inexact_division, "division by zero polynomial");
    MultiPolyLoc num, den;
    align(*this, d, num, den);
    if (num.is_zero()) return MultiPolyLoc();
    MultiPolyLoc q;
    q.syms_ = num.syms_;
    // loc bookkeeping: (n/(1+b)^a) / (m/(1+b)^bq) = (n/m) * (1+b)^(bq-a).
    int locdiff = static_cast<int>(num.loc_) - static_cast<int>(den.loc_);
    MultiPolyLoc rem = num;
    rem.loc_ = 0;
    MultiPolyLoc dd = den;
    dd.loc_ = 0;
    const auto& [elead, clead] = *dd.t_.rbegin();
    while (!rem.is_zero()) {
        const auto& [etop, ctop] = *rem.t_.rbegin();
        Expo diff(etop.size(), 0);
        bool ok = true;
        for (std::size_t i = 0; i < etop.size(); ++i) {
            if (etop[i] < elead[i]) {
                ok = false;
                break;
            }
            diff[i] = etop[i] - elead[i];
        }
        if (!ok) fail(Errc::inexact_division, "multivariate division leaves a remainder");
        Rational f = ctop / clead;
        MultiPolyLoc mono;
        mono.syms_ = q.syms_;
        mono.t_.emplace(diff, f);
        q = q + mono;
        rem = rem - mono * dd;
    }
    if (locdiff > 0) {
        q.loc_ += static_cast<unsigned>(locdiff);
        q.reduce();
    } else {
        for (int i = 0; i < -locdiff; ++i) {
            std::size_t bi = q.b_index();
            MultiPolyLoc one_plus_b =
                MultiPolyLoc::constant(Rational(1)).promoted(q.syms_) + MultiPolyLoc::variable(q.syms_, bi);
            q = q * one_plus_b;
        }
    }
    return q;
}

MultiPolyLoc MultiPolyLoc::substitute(std::size_t index, const MultiPolyLoc& value) const {
    if (loc_ > 0 && index == b_index())
        fail(Errc::ring_mismatch, "cannot substitute a polynomial for the localized symbol");
    MultiPolyLoc val = value.promoted(syms_);
    MultiPolyLoc r;
    r.syms_ = syms_;
    // Cache powers of the replacement value.
    std::vector<MultiPolyLoc> powers{MultiPolyLoc::constant(Rational(1)).promoted(syms_)};
    for (const auto& [e, c] : t_) {
        unsigned d = index < e.size() ? e[index] : 0;
        while (powers.size() <= d) powers.push_back(powers.back() * val);
        Expo e0 = e;
        if (index < e0.size()) e0[index] = 0;
        MultiPolyLoc mono;
        mono.syms_ = syms_;
        mono.t_.emplace(e0, c);
        r = r + mono * powers[d];
    }
    // Reattach this value's own localized denominator.
    r.loc_ += loc_;
    r.reduce();
    return r;
}

MultiPolyLoc MultiPolyLoc::substitute(std::size_t index, const Rational& value) const {
    Rational scale(1);
    unsigned keep_loc = loc_;
    if (loc_ > 0 && index == b_index()) {
        // The localized denominator becomes the constant (1 + value)^loc.
        if (value == -1) fail(Errc::pole, "substituting b = -1 hits the localized denominator");
        scale = Rational(1) / pow_rational(Rational(1) + value, loc_);
        keep_loc = 0;
    }
    MultiPolyLoc r;
    r.syms_ = syms_;
    r.loc_ = keep_loc;
    for (const auto& [e, c] : t_) {
        unsigned d = index < e.size() ? e[index] : 0;
        Expo e0 = e;
        if (index < e0.size()) e0[index] = 0;
        r.insert_term(e0, c * pow_rational(value, d) * scale);
    }
    r.reduce();
    return r;
}

Rational MultiPolyLoc::eval(const std::vector<Rational>& values) const {
    if (syms_ && values.size() != syms_->size()) fail(Errc::ring_mismatch, "evaluation vector length mismatch");
    Rational acc(0);
    for (const auto& [e, c] : t_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) term *= pow_rational(values[i], e[i]);
        acc += term;
    }
    if (loc_ > 0) {
        Rational d = Rational(1) + values[b_index()];
        if (d == 0) fail(Errc::pole, "evaluation at b = -1 hits the localized denominator");
        acc /= pow_rational(d, loc_);
    }
    return acc;
}

MultiPolyLoc MultiPolyLoc::project(const SymbolsPtr& target) const {
    if (!syms_) return promoted(target);
    std::vector<std::size_t> where(syms_->size(), SIZE_MAX);
    for (std::size_t i = 0; i < syms_->size(); ++i) {
        for (std::size_t j = 0; j < target->size(); ++j)
            if ((*syms_)[i] == (*target)[j]) where[i] = j;
    }
    MultiPolyLoc r;
    r.syms_ = target;
    r.loc_ = loc_;
    for (const auto& [e, c] : t_) {
        Expo ne(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] == SIZE_MAX)
                fail(Errc::ring_mismatch, "symbol '" + (*syms_)[i] + "' missing from the target list");
            ne[where[i]] += e[i];
        }
        r.insert_term(ne, c);
    }
    return r;
}

MultiPolyLoc MultiPolyLoc::swap_symbols(std::size_t i, std::size_t j) const {
    MultiPolyLoc r;
    r.syms_ = syms_;
    r.loc_ = loc_;
    for (const auto& [e, c] : t_) {
        Expo ne = e;
        if (std::max(i, j) < ne.size()) std::swap(ne[i], ne[j]);
        r.insert_term(ne, c);
    }
    return r;
}

MultiPolyLoc MultiPolyLoc::negate_symbols(const std::vector<std::size_t>& indices) const {
    MultiPolyLoc r;
    r.syms_ = syms_;
    r.loc_ = loc_;
    for (const auto& [e, c] : t_) {
        unsigned d = degree_in(e, indices);
        r.insert_term(e, d % 2 == 0 ? c : -c);
    }
    return r;
}

unsigned MultiPolyLoc::degree_in(const Expo& e, const std::vector<std::size_t>& indices) {
    unsigned d = 0;
    for (std::size_t i : indices)
        if (i < e.size()) d += e[i];
    return d;
}

std::size_t MultiPolyLoc::find_symbol(const std::string& name) const {
    if (syms_) {
        for (std::size_t i = 0; i < syms_->size(); ++i)
            if ((*syms_)[i] == name) return i;
    }
    fail(Errc::ring_mismatch, "unknown symbol '" + name + "'");
}

std::string MultiPolyLoc::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            mono << (*syms_)[i];
            if (e[i] > 1) mono << "^" << e[i];
            any = true;
        }
        if (!any || a != 1) {
            os << jk::to_string(a);
            if (any) os << "*";
        }
        os << mono.str();
    }
    if (loc_ > 0) return "(" + os.str() + ")/(1+b)^" + std::to_string(loc_);
    return os.str();
}

} // namespace jk
