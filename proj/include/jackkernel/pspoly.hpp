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

#include <map>
#include <sstream>
#include <utility>

#include "jackkernel/partition.hpp"
#include "jackkernel/ring.hpp"

namespace jk {

/*
 * Sparse symmetric functions in the power-sum basis.
 *
 * A PSPoly maps partitions to coefficients: the key lambda stands for the
 * monomial p_lambda = p_{lambda_1} ... p_{lambda_l}.  The weight of a term
 * is the size of its key.  All operators below act term by term on the
 * sparse map; nothing is ever densified.
 */
template <class R>
class PSPoly {
public:
    using Terms = std::map<Partition, R>;

    PSPoly() = default;

    static PSPoly one(const R& c) { return monomial(Partition(), c); }
    static PSPoly monomial(const Partition& lam, const R& c) {
        PSPoly f;
        f.add(lam, c);
        return f;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    R coeff(const Partition& lam) const {
        auto it = t_.find(lam);
        return it == t_.end() ? R() : it->second;
    }

    void add(const Partition& lam, const R& c) {
        if (ring_zero(c)) return;
        auto it = t_.find(lam);
        if (it == t_.end()) {
            t_.emplace(lam, c);
        } else {
            it->second += c;
            if (ring_zero(it->second)) t_.erase(it);
        }
    }

    PSPoly operator-() const {
        PSPoly r;
        for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
        return r;
    }
    PSPoly& operator+=(const PSPoly& o) {
        for (const auto& [k, c] : o.t_) add(k, c);
        return *this;
    }
    PSPoly& operator-=(const PSPoly& o) {
        for (const auto& [k, c] : o.t_) add(k, -c);
        return *this;
    }
    friend PSPoly operator+(PSPoly a, const PSPoly& b) { return a += b; }
    friend PSPoly operator-(PSPoly a, const PSPoly& b) { return a -= b; }

    PSPoly scaled(const R& c) const {
        PSPoly r;
        if (ring_zero(c)) return r;
        for (const auto& [k, v] : t_) r.add(k, v * c);
        return r;
    }
    PSPoly scaled_q(const Rational& q) const {
        PSPoly r;
        if (q == 0) return r;
        for (const auto& [k, v] : t_) r.add(k, v * q);
        return r;
    }

    bool operator==(const PSPoly& o) const { return t_ == o.t_; }
    bool operator!=(const PSPoly& o) const { return !(*this == o); }

    // Multiplication by the generator p_k.
    PSPoly mul_p(unsigned k) const {
        PSPoly r;
        for (const auto& [lam, c] : t_) r.add(lam.with_part(k), c);
        return r;
    }

    // The unscaled partial derivative with respect to p_k.
    PSPoly deriv_p(unsigned k) const {
        PSPoly r;
        for (const auto& [lam, c] : t_) {
            unsigned m = lam.multiplicity(k);
            if (m == 0) continue;
            r.add(lam.without_part(k), c * Rational(m));
        }
        return r;
    }

    // Multiplies the whole polynomial by p_mu.
    PSPoly mul_plam(const Partition& mu) const {
        PSPoly r = *this;
        for (unsigned p : mu.parts()) r = r.mul_p(p);
        return r;
    }

    unsigned max_weight() const {
        unsigned w = 0;
        for (const auto& [k, c] : t_) w = std::max(w, k.size());
        return w;
    }

    bool is_homogeneous(unsigned w) const {
        for (const auto& [k, c] : t_)
            if (k.size() != w) return false;
        return true;
    }

    template <class F>
    auto map_coeffs(F&& f) const -> PSPoly<std::decay_t<decltype(f(std::declval<R>()))>> {
        PSPoly<std::decay_t<decltype(f(std::declval<R>()))>> r;
        for (const auto& [k, c] : t_) r.add(k, f(c));
        return r;
    }

    std::string to_string() const;

private:
    Terms t_;
};

template <class R>
std::string PSPoly<R>::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(";
        if constexpr (std::is_same_v<R, Rational>) os << to_string(c);
        else os << c.to_string();
        os << ")";
        if (!k.empty()) os << "*p[" << k.to_string() << "]";
    }
    return os.str();
}

/*
 * Element of the catalytic space: every monomial carries exactly one
 * y-variable, recorded in the key as (y index, partition).  Weight of a
 * term = y index + partition size.
 */
template <class R>
class CatPoly {
public:
    struct Key {
        unsigned y;
        Partition lam;
        bool operator==(const Key& o) const { return y == o.y && lam == o.lam; }
        bool operator<(const Key& o) const {
            if (y != o.y) return y < o.y;
            return lam < o.lam;
        }
    };
    using Terms = std::map<Key, R>;

    CatPoly() = default;
    static CatPoly monomial(unsigned y, const Partition& lam, const R& c) {
        CatPoly g;
        g.add(y, lam, c);
        return g;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(unsigned y, const Partition& lam, const R& c) {
        if (ring_zero(c)) return;
        Key k{y, lam};
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (ring_zero(it->second)) t_.erase(it);
        }
    }

    CatPoly& operator+=(const CatPoly& o) {
        for (const auto& [k, c] : o.t_) add(k.y, k.lam, c);
        return *this;
    }
    friend CatPoly operator+(CatPoly a, const CatPoly& b) { return a += b; }

    CatPoly scaled(const R& c) const {
        CatPoly r;
        if (ring_zero(c)) return r;
        for (const auto& [k, v] : t_) r.add(k.y, k.lam, v * c);
        return r;
    }

    bool operator==(const CatPoly& o) const { return t_ == o.t_; }

    bool is_homogeneous(unsigned w) const {
        for (const auto& [k, c] : t_)
            if (k.y + k.lam.size() != w) return false;
        return true;
    }

private:
    Terms t_;
};

// Two-alphabet polynomial: key = (partition in p, partition in q).
template <class R>
class BiPSPoly {
public:
    using Key = std::pair<Partition, Partition>;
    using Terms = std::map<Key, R>;

    BiPSPoly() = default;

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Partition& p, const Partition& q, const R& c) {
        if (ring_zero(c)) return;
        Key k{p, q};
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (ring_zero(it->second)) t_.erase(it);
        }
    }

    BiPSPoly& operator+=(const BiPSPoly& o) {
        for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
        return *this;
    }

    bool operator==(const BiPSPoly& o) const { return t_ == o.t_; }

private:
    Terms t_;
};

// ---------------------------------------------------------------------------
// Operators on the power-sum algebra and the catalytic space.
// ---------------------------------------------------------------------------

// Laplace–Beltrami operator: the defining operator of the Jack family.
// Acts term by term through the three components (join, split, degree).
template <class R>
PSPoly<R> laplace_beltrami(const PSPoly<R>& f, const Ring<R>& ring) {
    PSPoly<R> out;
    Rational half(1, 2);
    for (const auto& [lam, c] : f.terms()) {
        std::vector<unsigned> mult = lam.multiplicities();
        // alpha/2 * sum_{i,j} p_{i+j} i j d^2/dp_i dp_j
        for (unsigned i = 1; i <= mult.size(); ++i) {
            if (mult[i - 1] == 0) continue;
            for (unsigned j = i; j <= mult.size(); ++j) {
                if (mult[j - 1] == 0) continue;
                Rational pairs;
                if (i == j) {
                    if (mult[i - 1] < 2) continue;
                    pairs = Rational(mult[i - 1]) * Rational(mult[i - 1] - 1); // ordered pairs
                } else {
                    pairs = Rational(2) * Rational(mult[i - 1]) * Rational(mult[j - 1]);
                }
                Partition base = lam.without_part(i).without_part(j).with_part(i + j);
                out.add(base, (c * ring.alpha) * (half * Rational(i) * Rational(j) * pairs));
            }
        }
        // 1/2 * sum_{i,j} p_i p_j (i+j) d/dp_{i+j}
        for (unsigned k = 1; k <= mult.size(); ++k) {
            if (mult[k - 1] == 0) continue;
            for (unsigned i = 1; i < k; ++i) {
                Partition base = lam.without_part(k).with_part(i).with_part(k - i);
                out.add(base, c * (half * Rational(k) * Rational(mult[k - 1])));
            }
        }
        // (alpha-1)/2 * sum_i p_i i(i-1) d/dp_i
        Rational degsum(0);
        for (unsigned i = 2; i <= mult.size(); ++i)
            degsum += Rational(i) * Rational(i - 1) * Rational(mult[i - 1]);
        if (degsum != 0) out.add(lam, (c * ring.b) * (half * degsum));
    }
    return out;
}

// sum_k k p_k d/dp_k: multiplies each term by its weight.
template <class R>
PSPoly<R> weight_scaling(const PSPoly<R>& f) {
    PSPoly<R> out;
    for (const auto& [lam, c] : f.terms()) out.add(lam, c * Rational(lam.size()));
    return out;
}

// Shifts every y index up by one.
template <class R>
CatPoly<R> y_plus(const CatPoly<R>& g) {
    CatPoly<R> out;
    for (const auto& [k, c] : g.terms()) out.add(k.y + 1, k.lam, c);
    return out;
}

// The catalytic one-edge operator: raises total weight by exactly one.
template <class R>
CatPoly<R> gamma_y(const CatPoly<R>& g, const Ring<R>& ring) {
    CatPoly<R> out;
    for (const auto& [k, c] : g.terms()) {
        unsigned m = k.y;
        // (1+b) sum_{i,j} y_{i+j} i d^2/(dp_i dy_{j-1}): forces j-1 = m.
        std::vector<unsigned> mult = k.lam.multiplicities();
        for (unsigned i = 1; i <= mult.size(); ++i) {
            if (mult[i - 1] == 0) continue;
            out.add(i + m + 1, k.lam.without_part(i), (c * ring.alpha) * (Rational(i) * Rational(mult[i - 1])));
        }
        // sum_{i,j} y_i p_j d/dy_{i+j-1}: i + j - 1 = m with i, j >= 1.
        for (unsigned i = 1; i <= m; ++i) {
            unsigned j = m + 1 - i;
            out.add(i, k.lam.with_part(j), c);
        }
        // b sum_i y_{i+1} i d/dy_i: i = m >= 1.
        if (m >= 1) out.add(m + 1, k.lam, (c * ring.b) * Rational(m));
    }
    return out;
}

// Forgets the catalytic variable: y_i -> p_i for i >= 1, kills y_0 terms.
template <class R>
PSPoly<R> theta_y(const CatPoly<R>& g) {
    PSPoly<R> out;
    for (const auto& [k, c] : g.terms()) {
        if (k.y == 0) continue;
        out.add(k.lam.with_part(k.y), c);
    }
    return out;
}

// Substitutes every p_i by the same value u.
template <class R>
R principal_eval(const PSPoly<R>& f, const R& u) {
    R acc{};
    for (const auto& [lam, c] : f.terms()) {
        R term = c;
        for (unsigned i = 0; i < lam.length(); ++i) term = term * u;
        acc += term;
    }
    return acc;
}

// Same substitution with u kept symbolic: coefficient list by u-degree.
template <class R>
std::vector<R> principal_upoly(const PSPoly<R>& f) {
    std::vector<R> out;
    for (const auto& [lam, c] : f.terms()) {
        if (out.size() <= lam.length()) out.resize(lam.length() + 1);
        out[lam.length()] += c;
    }
    return out;
}

// Homogeneous-weight accessor; fails on mixed weights.
template <class R>
unsigned homogeneous_weight(const PSPoly<R>& f) {
    unsigned w = f.max_weight();
    if (!f.is_homogeneous(w)) fail(Errc::internal_check, "polynomial is not homogeneous");
    return w;
}

// Expansion of a homogeneous polynomial in the monomial basis, computed by
// expanding the power sums in (weight) variables and reading off the
// coefficients of weakly decreasing exponent patterns.
template <class R>
std::map<Partition, R> to_monomial(const PSPoly<R>& f) {
    unsigned n = homogeneous_weight(f);
    std::map<Partition, R> out;
    if (n == 0) {
        for (const auto& [lam, c] : f.terms()) out.emplace(lam, c);
        return out;
    }
    for (const auto& [lam, c] : f.terms()) {
        // Integer expansion of p_lam in n variables.
        std::map<std::vector<unsigned>, long long> expo{{std::vector<unsigned>(n, 0), 1}};
        for (unsigned part : lam.parts()) {
            std::map<std::vector<unsigned>, long long> next;
            for (const auto& [e, v] : expo) {
                for (unsigned i = 0; i < n; ++i) {
                    std::vector<unsigned> e2 = e;
                    e2[i] += part;
                    next[e2] += v;
                }
            }
            expo = std::move(next);
        }
        for (const auto& [e, v] : expo) {
            bool sorted = true;
            for (unsigned i = 1; i < n && sorted; ++i) sorted = e[i - 1] >= e[i];
            if (!sorted) continue;
            std::vector<unsigned> parts;
            for (unsigned x : e)
                if (x > 0) parts.push_back(x);
            out[Partition(parts)] += c * Rational(static_cast<long>(v));
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (ring_zero(it->second)) it = out.erase(it);
        else ++it;
    }
    return out;
}

} // namespace jk
