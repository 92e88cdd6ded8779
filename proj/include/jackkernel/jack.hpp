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

#include <algorithm>
#include <vector>

#include "jackkernel/pspoly.hpp"

namespace jk {

// Coefficient list by degree in the formal parameter u.
template <class R>
using UPolyOf = std::vector<PSPoly<R>>;

// alpha-content of the box in row i, column j (1-based).
template <class R>
R alpha_content(unsigned i, unsigned j, const Ring<R>& ring) {
    return ring.alpha * Rational(static_cast<long>(j) - 1) + ring.embed(Rational(1 - static_cast<long>(i)));
}

// Sum of alpha-contents over the boxes of lambda (the Jack eigenvalue).
template <class R>
R contents_sum(const Partition& lam, const Ring<R>& ring) {
    R acc{};
    for (unsigned i = 1; i <= lam.length(); ++i)
        for (unsigned j = 1; j <= lam.parts()[i - 1]; ++j) acc += alpha_content(i, j, ring);
    return acc;
}

/*
 * One creation step, u kept symbolic.
 *
 * The operator seeds the catalytic space with y_0 f / (1+b), applies the
 * two-term raising operator n times while tracking the u-degree (each
 * index-shift application contributes exactly one power of u), then forgets
 * the catalytic variable.  Entry d of the result is the coefficient of u^d.
 */
template <class R>
UPolyOf<R> creation_upoly(const PSPoly<R>& f, unsigned n, const Ring<R>& ring) {
    std::vector<CatPoly<R>> cur(1);
    for (const auto& [lam, c] : f.terms()) cur[0].add(0, lam, ring.div_alpha(c));
    for (unsigned step = 0; step < n; ++step) {
        std::vector<CatPoly<R>> next(cur.size() + 1);
        for (std::size_t d = 0; d < cur.size(); ++d) {
            next[d] += gamma_y(cur[d], ring);
            next[d + 1] += y_plus(cur[d]);
        }
        cur = std::move(next);
    }
    UPolyOf<R> out(cur.size());
    for (std::size_t d = 0; d < cur.size(); ++d) out[d] = theta_y(cur[d]);
    return out;
}

// One creation step with a concrete parameter value.
template <class R>
PSPoly<R> creation(const PSPoly<R>& f, unsigned n, const R& u, const Ring<R>& ring) {
    UPolyOf<R> byu = creation_upoly(f, n, ring);
    PSPoly<R> out = byu[0];
    R upow = u;
    for (std::size_t d = 1; d < byu.size(); ++d) {
        out += byu[d].scaled(upow);
        upow = upow * u;
    }
    return out;
}

// Coefficient of u^l in the creation step of order l+k.  The (0,0) case is
// the identity by convention (the literal composite would be zero).
template <class R>
PSPoly<R> creation_coeff(const PSPoly<R>& f, unsigned l, unsigned k, const Ring<R>& ring) {
    if (l + k == 0) return f;
    return creation_upoly(f, l + k, ring)[l];
}

/*
 * [t^n] exp( r * sum_m (-t)^m B_m(p, u)/m ) applied to f, where B_m is the
 * creation step of order m.  Expanding the exponential over partitions nu
 * of n gives the weight (-1)^n r^{l(nu)} / (prod_i m_i(nu)! * prod_i nu_i)
 * for the composite of the B_{nu_i} (they commute for fixed u).
 */
template <class R>
PSPoly<R> insertion_op_weighted(const PSPoly<R>& f, unsigned n, const R& u, const R& rweight,
                                const Ring<R>& ring) {
    if (n == 0) return f;
    PSPoly<R> acc;
    for (const Partition& nu : partitions_of(n)) {
        PSPoly<R> h = f;
        Rational denom(1);
        for (unsigned part : nu.parts()) {
            h = creation(h, part, u, ring);
            denom *= Rational(part);
        }
        for (unsigned m : nu.multiplicities()) denom *= Rational(factorial(m));
        Rational factor = Rational((n % 2 == 0) ? 1 : -1) / denom;
        acc += h.scaled(ring_pow(rweight, nu.length())).scaled_q(factor);
    }
    return acc;
}

template <class R>
PSPoly<R> insertion_op(const PSPoly<R>& f, unsigned n, const R& u, const Ring<R>& ring) {
    return insertion_op_weighted(f, n, u, ring.embed(Rational(1)), ring);
}

/*
 * Memoized table of Jack polynomials in the power-sum basis.  J_lambda is
 * built from J of the partition with the largest part removed, by the
 * full-row insertion operator at u = -alpha * (largest part).
 */
template <class R>
class JackTable {
public:
    // With verify_on_insert set, every computed vector is checked against
    // the eigen-equation before it is stored.
    explicit JackTable(Ring<R> ring, bool verify_on_insert = false)
        : ring_(std::move(ring)), verify_(verify_on_insert) {}

    const Ring<R>& ring() const { return ring_; }

    const PSPoly<R>& at(const Partition& lam) {
        auto it = tab_.find(lam);
        if (it != tab_.end()) return it->second;
        PSPoly<R> value;
        if (lam.empty()) {
            value = PSPoly<R>::one(ring_.embed(Rational(1)));
        } else {
            unsigned n = lam.parts().front();
            const PSPoly<R>& below = at(lam.without_largest());
            R u = -(ring_.alpha * Rational(n));
            value = insertion_op(below, n, u, ring_);
        }
        if (verify_ && !(laplace_beltrami(value, ring_) == value.scaled(contents_sum(lam, ring_))))
            fail(Errc::internal_check,
                 "stored vector violates the eigen-equation at [" + lam.to_string() + "]");
        return tab_.emplace(lam, std::move(value)).first->second;
    }

private:
    Ring<R> ring_;
    bool verify_ = false;
    std::map<Partition, PSPoly<R>> tab_;
};

template <class R>
const PSPoly<R>& jack_polynomial(const Partition& lam, JackTable<R>& table) {
    return table.at(lam);
}

/*
 * Jack character: zero when |lambda| < |mu|, otherwise the coefficient of
 * p_{mu union 1^{|lambda|-|mu|}} in J_lambda scaled by the binomial
 * count of the added 1-parts.
 */
template <class R>
R jack_character(const Partition& mu, const Partition& lam, JackTable<R>& table) {
    if (lam.size() < mu.size()) return R{};
    unsigned extra = lam.size() - mu.size();
    unsigned m1 = mu.multiplicity(1);
    R c = table.at(lam).coeff(mu.with_ones(extra));
    return c * Rational(binomial(extra + m1, m1));
}

// Normalized character in Q(s): s^(l(mu)-|mu|) z_mu theta_mu(lambda).
inline RatFunc normalized_character(const Partition& mu, const Partition& lam, JackTable<RatFunc>& sqrt_table) {
    RatFunc theta = jack_character(mu, lam, sqrt_table);
    long e = static_cast<long>(mu.length()) - static_cast<long>(mu.size());
    return sqrt_alpha().pow(e) * RatFunc(Rational(mu.z())) * theta;
}

// Leading coefficient of J_lambda on m_lambda (one hook factor per box).
template <class R>
R hook_leading(const Partition& lam, const Ring<R>& ring) {
    R acc = ring.embed(Rational(1));
    Partition conj = lam.conjugate();
    for (unsigned i = 1; i <= lam.length(); ++i) {
        for (unsigned j = 1; j <= lam.parts()[i - 1]; ++j) {
            R arm = ring.alpha * Rational(lam.parts()[i - 1] - j);
            R leg = ring.embed(Rational(conj.parts()[j - 1] - i));
            acc = acc * (arm + leg + ring.embed(Rational(1)));
        }
    }
    return acc;
}

// Product of both hook factors over the boxes of lambda.
template <class R>
R hook_norm(const Partition& lam, const Ring<R>& ring) {
    R acc = ring.embed(Rational(1));
    Partition conj = lam.conjugate();
    for (unsigned i = 1; i <= lam.length(); ++i) {
        for (unsigned j = 1; j <= lam.parts()[i - 1]; ++j) {
            R arm = ring.alpha * Rational(lam.parts()[i - 1] - j);
            R leg = ring.embed(Rational(conj.parts()[j - 1] - i));
            acc = acc * (arm + leg + ring.embed(Rational(1))) * (arm + leg + ring.alpha);
        }
    }
    return acc;
}

struct JackVerifyReport {
    bool eigen_ok = false;
    bool triangular_ok = false;
    bool leading_ok = false;
    bool principal_ok = false;
    bool all() const { return eigen_ok && triangular_ok && leading_ok && principal_ok; }
};

// Checks the four defining properties of J_lambda: the eigen-equation of
// the Laplace-Beltrami operator, dominance triangularity in the monomial
// basis, the hook-product leading coefficient, and the principal
// specialization p_i = u as a product over box contents.
template <class R>
JackVerifyReport jack_verify(const Partition& lam, JackTable<R>& table) {
    const Ring<R>& ring = table.ring();
    const PSPoly<R>& j = table.at(lam);
    JackVerifyReport rep;

    rep.eigen_ok = laplace_beltrami(j, ring) == j.scaled(contents_sum(lam, ring));

    std::map<Partition, R> mono = to_monomial(j);
    rep.triangular_ok = true;
    for (const auto& [nu, c] : mono) {
        if (!dominance_leq(nu, lam)) {
            rep.triangular_ok = false;
            break;
        }
    }
    auto lead = mono.find(lam);
    rep.leading_ok = lead != mono.end() && lead->second == hook_leading(lam, ring);

    std::vector<R> lhs = principal_upoly(j);
    std::vector<R> rhs{ring.embed(Rational(1))};
    for (unsigned i = 1; i <= lam.length(); ++i) {
        for (unsigned jj = 1; jj <= lam.parts()[i - 1]; ++jj) {
            R c = alpha_content(i, jj, ring);
            std::vector<R> next(rhs.size() + 1);
            for (std::size_t d = 0; d < rhs.size(); ++d) {
                next[d + 1] += rhs[d];
                next[d] += rhs[d] * c;
            }
            rhs = std::move(next);
        }
    }
    while (!lhs.empty() && ring_zero(lhs.back())) lhs.pop_back();
    while (!rhs.empty() && ring_zero(rhs.back())) rhs.pop_back();
    rep.principal_ok = lhs.size() == rhs.size();
    if (rep.principal_ok)
        for (std::size_t d = 0; d < lhs.size(); ++d)
            if (!(lhs[d] == rhs[d])) {
                rep.principal_ok = false;
                break;
            }
    return rep;
}

// Expands f over the Jack basis of the table's ring (field rings only).
template <class R>
std::map<Partition, R> jack_expand(PSPoly<R> f, JackTable<R>& table) {
    std::map<Partition, R> out;
    while (!f.is_zero()) {
        unsigned w = f.max_weight();
        PSPoly<R> fw;
        for (const auto& [lam, c] : f.terms())
            if (lam.size() == w) fw.add(lam, c);
        std::map<Partition, R> mono = to_monomial(fw);
        if (mono.empty()) fail(Errc::internal_check, "monomial expansion lost all terms");
        // Pick a dominance-maximal partition in the monomial support.
        Partition top;
        bool have = false;
        for (const auto& [nu, cnu] : mono) {
            (void)cnu;
            bool dominated = false;
            for (const auto& [sig, csig] : mono) {
                (void)csig;
                if (!(sig == nu) && dominance_leq(nu, sig)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) {
                top = nu;
                have = true;
                break;
            }
        }
        if (!have) fail(Errc::internal_check, "no dominance-maximal monomial found");
        R c = ring_div(mono.at(top), hook_leading(top, table.ring()));
        out[top] += c;
        f -= table.at(top).scaled(c);
    }
    for (auto it = out.begin(); it != out.end();) {
        if (ring_zero(it->second)) it = out.erase(it);
        else ++it;
    }
    return out;
}

// Young-formula route at alpha = 1: sums sign(col) p_{cycle type} over the
// row and column stabilizers of the standard filling.  Exact and entirely
// independent of the creation-operator pipeline; factorial cost, so guarded.
PSPoly<Rational> young_alpha_one(const Partition& lam, unsigned guard = 6);

} // namespace jk
