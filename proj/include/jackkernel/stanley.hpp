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

#include <optional>

#include "jackkernel/jack.hpp"

namespace jk {

/*
 * Truncated power series in t with PSPoly coefficients.  Seeded at the
 * constant 1 and driven only by the insertion operators, the coefficient of
 * t^n stays homogeneous of p-weight n; assert_graded() keeps that redundancy
 * live as a structural check on the operator implementations.
 */
template <class R>
struct PSeries {
    std::vector<PSPoly<R>> c; // index = t-degree

    static PSeries seed(unsigned max_degree, const R& one) {
        PSeries s;
        s.c.assign(max_degree + 1, PSPoly<R>());
        s.c[0] = PSPoly<R>::one(one);
        return s;
    }

    unsigned max_degree() const { return c.empty() ? 0 : static_cast<unsigned>(c.size()) - 1; }

    const PSPoly<R>& at(unsigned n) const {
        static const PSPoly<R> zero;
        return n < c.size() ? c[n] : zero;
    }

    void assert_graded() const {
        for (std::size_t n = 0; n < c.size(); ++n)
            if (!c[n].is_homogeneous(static_cast<unsigned>(n)))
                fail(Errc::internal_check, "series coefficient of t^" + std::to_string(n) +
                                               " is not homogeneous of matching weight");
    }
};

// Applies exp( r * B_inf(-t, p, u) ) to a truncated series: coefficient n of
// the result sums the order-(n-j) insertion operator over coefficients j.
template <class R>
PSeries<R> exp_insertion(const PSeries<R>& g, const R& u, const R& rweight, const Ring<R>& ring) {
    PSeries<R> out;
    out.c.assign(g.c.size(), PSPoly<R>());
    for (std::size_t n = 0; n < g.c.size(); ++n) {
        for (std::size_t j = 0; j <= n; ++j) {
            if (g.c[j].is_zero()) continue;
            out.c[n] += insertion_op_weighted(g.c[j], static_cast<unsigned>(n - j), u, rweight, ring);
        }
    }
    return out;
}

/*
 * Character generating series attached to row sizes (s_1 >= s_2 >= ... as
 * values in the ring): the operator for s_1 is applied last.  With all
 * row weights one this is the series whose [t^{|mu|} p_mu] coefficient is
 * the Jack character theta_mu.
 */
template <class R>
PSeries<R> char_series(const std::vector<R>& svals, const std::vector<R>& rvals, unsigned max_degree,
                       const Ring<R>& ring) {
    if (svals.size() != rvals.size()) fail(Errc::internal_check, "coordinate lists differ in length");
    PSeries<R> f = PSeries<R>::seed(max_degree, ring.embed(Rational(1)));
    for (std::size_t i = svals.size(); i-- > 0;) {
        R u = -(ring.alpha * svals[i]);
        f = exp_insertion(f, u, rvals[i], ring);
        f.assert_graded();
    }
    return f;
}

// Series for an integer partition (row weights all one).
template <class R>
PSeries<R> char_series(const Partition& lam, unsigned max_degree, const Ring<R>& ring) {
    std::vector<R> svals, rvals;
    for (unsigned p : lam.parts()) {
        svals.push_back(ring.embed(Rational(p)));
        rvals.push_back(ring.embed(Rational(1)));
    }
    return char_series(svals, rvals, max_degree, ring);
}

// Extraction [t^{|mu|} p_mu] from a truncated series.
template <class R>
R char_from_series(const Partition& mu, const PSeries<R>& f) {
    return f.at(mu.size()).coeff(mu);
}

// Character via the series route; must agree with jack_character.
template <class R>
R theta_via_series(const Partition& mu, const Partition& lam, const Ring<R>& ring) {
    PSeries<R> f = char_series(lam, mu.size(), ring);
    return char_from_series(mu, f);
}

/*
 * Symbolic multirectangular series over the localized polynomial ring in
 * (b, s_1..s_k, r_1..r_k).  The rectangle operators are applied with the
 * (s_1, r_1) factor outermost, the same orientation as the partition
 * series: the exponential factors do not commute, and only this order
 * reproduces the characters under the specialization s = lambda, r = 1 and
 * keeps the shifted-symmetry property.
 */
inline PSeries<MultiPolyLoc> stanley_series(const StanleyRing& sr, unsigned max_degree) {
    PSeries<MultiPolyLoc> f = PSeries<MultiPolyLoc>::seed(max_degree, MultiPolyLoc::constant(Rational(1)));
    for (unsigned i = sr.k; i >= 1; --i) {
        MultiPolyLoc u = -(sr.ring.alpha * sr.s(i));
        f = exp_insertion(f, u, sr.r(i), sr.ring);
        f.assert_graded();
    }
    return f;
}

// Jack character in multirectangular coordinates.  The result is a genuine
// polynomial: any surviving localized denominator signals a bug and is
// reported as a distinct failure class.
inline MultiPolyLoc stanley_character(const Partition& mu, unsigned k) {
    StanleyRing sr = stanley_ring(k);
    PSeries<MultiPolyLoc> f = stanley_series(sr, mu.size());
    MultiPolyLoc theta = char_from_series(mu, f);
    if (theta.loc_exp() != 0)
        fail(Errc::internal_check,
             "character in multirectangular coordinates kept a (1+b) denominator");
    return theta;
}

// All characters with |mu| <= maxw from a single series construction.
inline std::map<Partition, MultiPolyLoc> stanley_characters_upto(unsigned k, unsigned maxw) {
    StanleyRing sr = stanley_ring(k);
    PSeries<MultiPolyLoc> f = stanley_series(sr, maxw);
    std::map<Partition, MultiPolyLoc> out;
    for (const Partition& mu : partitions_up_to(maxw)) {
        MultiPolyLoc theta = char_from_series(mu, f);
        if (theta.loc_exp() != 0)
            fail(Errc::internal_check,
                 "character in multirectangular coordinates kept a (1+b) denominator");
        out.emplace(mu, std::move(theta));
    }
    return out;
}

struct PositivityReport {
    MultiPolyLoc rewritten;       // (-1)^{|mu|} z_mu theta in (b, -s, r)
    bool nonnegative = false;
    bool integral = false;
    std::vector<std::string> offending; // monomials violating the audit
    bool pass() const { return nonnegative && integral; }
};

// Audits the Lassalle polynomial: (-1)^{|mu|} z_mu theta~ rewritten in the
// variables (b, -s_1, ..., r_1, ...) must have nonnegative integer
// coefficients.
inline PositivityReport positivity_audit_of(const Partition& mu, unsigned k, const MultiPolyLoc& theta) {
    PositivityReport rep;
    Rational sign(mu.size() % 2 == 0 ? 1 : -1);
    MultiPolyLoc scaled = theta * (sign * Rational(mu.z()));
    std::vector<std::size_t> s_indices;
    for (unsigned i = 1; i <= k; ++i) s_indices.push_back(i);
    rep.rewritten = scaled.negate_symbols(s_indices);
    rep.nonnegative = true;
    rep.integral = true;
    for (const auto& [e, c] : rep.rewritten.terms()) {
        bool neg = c < Rational(0);
        bool frac = !is_integer(c);
        if (neg) rep.nonnegative = false;
        if (frac) rep.integral = false;
        if (neg || frac)
            rep.offending.push_back(
                MultiPolyLoc::monomial(rep.rewritten.symbols(), e, c).to_string());
    }
    return rep;
}

inline PositivityReport positivity_audit(const Partition& mu, unsigned k) {
    return positivity_audit_of(mu, k, stanley_character(mu, k));
}

// Vanishing property: [t^m] of the character series of lambda is zero for
// every m > |lambda|.
inline bool vanishing_check(const Partition& lam, unsigned m) {
    if (m <= lam.size()) fail(Errc::limit, "vanishing check requires m > |lambda|");
    Ring<RatFunc> ring = alpha_field();
    PSeries<RatFunc> f = char_series(lam, m, ring);
    return f.at(m).is_zero();
}

/*
 * Shifted-symmetry check: with all row weights one, substituting
 * s_i = sigma_i + i/(1+b) must yield a polynomial symmetric under every
 * adjacent transposition of the sigma's.
 */
inline bool shifted_symmetry_check_of(unsigned k, MultiPolyLoc theta) {
    if (k <= 1) return true;
    for (unsigned i = 1; i <= k; ++i)
        theta = theta.substitute(theta.find_symbol("r" + std::to_string(i)), Rational(1));

    // Move to symbols (b, sig_1..sig_k) via s_i = sig_i + i/(1+b).
    SymbolList names{"b"};
    for (unsigned i = 1; i <= k; ++i) names.push_back("sig" + std::to_string(i));
    SymbolsPtr target = make_symbols(std::move(names));
    std::vector<MultiPolyLoc> shifted; // image of s_i
    for (unsigned i = 1; i <= k; ++i) {
        MultiPolyLoc inv = MultiPolyLoc::constant(Rational(i)).project(target).div_one_plus_b();
        shifted.push_back(MultiPolyLoc::variable(target, i) + inv);
    }
    // Rebuild the polynomial term by term in the target ring; exponent
    // layout in the Stanley ring is (b, s_1..s_k, r_1..r_k).
    MultiPolyLoc result;
    for (const auto& [e, c] : theta.terms()) {
        MultiPolyLoc term = MultiPolyLoc::constant(c).project(target);
        term = term * MultiPolyLoc::variable(target, 0).pow(e[0]);
        for (unsigned i = 1; i <= k; ++i) term = term * shifted[i - 1].pow(e[i]);
        result += term;
    }
    for (unsigned i = 1; i < k; ++i) {
        if (!(result.swap_symbols(i, i + 1) == result)) return false;
    }
    return true;
}

inline bool shifted_symmetry_check(const Partition& mu, unsigned k) {
    if (k <= 1) return true;
    return shifted_symmetry_check_of(k, stanley_character(mu, k));
}

// Evaluates the character series at explicit multirectangular coordinates
// (numeric row sizes and weights) over Q(alpha).
inline RatFunc stanley_eval(const Partition& mu, const std::vector<unsigned>& svals,
                            const std::vector<unsigned>& rvals) {
    Ring<RatFunc> ring = alpha_field();
    std::vector<RatFunc> s, r;
    for (unsigned v : svals) s.push_back(RatFunc(Rational(v)));
    for (unsigned v : rvals) r.push_back(RatFunc(Rational(v)));
    PSeries<RatFunc> f = char_series(s, r, mu.size(), ring);
    return char_from_series(mu, f);
}

// Partition assembled from multirectangular coordinates: r_i rows of size
// s_i.  Zero-size rows and zero-weight rectangles contribute nothing.
inline Partition partition_from_coords(const std::vector<unsigned>& svals, const std::vector<unsigned>& rvals) {
    if (svals.size() != rvals.size()) fail(Errc::parse, "coordinate lists differ in length");
    std::vector<unsigned> parts;
    unsigned prev = 0;
    bool first = true;
    for (std::size_t i = 0; i < svals.size(); ++i) {
        if (rvals[i] == 0 || svals[i] == 0) continue; // zero-weight rectangles are free padding
        if (!first && svals[i] > prev) fail(Errc::parse, "row sizes must be weakly decreasing");
        prev = svals[i];
        first = false;
        parts.insert(parts.end(), rvals[i], svals[i]);
    }
    return Partition(std::move(parts));
}

// Checks that two multirectangular descriptions of the same partition give
// identical characters for every mu with |mu| <= |lambda|.
inline bool multirect_invariance_check(const Partition& lam, const std::vector<unsigned>& sA,
                                       const std::vector<unsigned>& rA, const std::vector<unsigned>& sB,
                                       const std::vector<unsigned>& rB) {
    if (!(partition_from_coords(sA, rA) == lam) || !(partition_from_coords(sB, rB) == lam))
        fail(Errc::parse, "coordinates do not describe the given partition");
    Ring<RatFunc> ring = alpha_field();
    auto build = [&](const std::vector<unsigned>& sv, const std::vector<unsigned>& rv) {
        std::vector<RatFunc> s, r;
        for (unsigned v : sv) s.push_back(RatFunc(Rational(v)));
        for (unsigned v : rv) r.push_back(RatFunc(Rational(v)));
        return char_series(s, r, lam.size(), ring);
    };
    PSeries<RatFunc> fa = build(sA, rA);
    PSeries<RatFunc> fb = build(sB, rB);
    for (const Partition& mu : partitions_up_to(lam.size()))
        if (!(char_from_series(mu, fa) == char_from_series(mu, fb))) return false;
    return true;
}

/*
 * Top-degree check: the top homogeneous part in (s_1..s_k) of the character
 * with row weights one equals alpha^{|mu|-l(mu)} / z_mu * p_mu(s_1..s_k).
 */
inline bool top_degree_check_of(const Partition& mu, unsigned k, MultiPolyLoc theta) {
    if (k < mu.length()) fail(Errc::limit, "top-degree check needs k >= l(mu)");
    for (unsigned i = 1; i <= k; ++i)
        theta = theta.substitute(theta.find_symbol("r" + std::to_string(i)), Rational(1));
    std::vector<std::size_t> s_idx;
    for (unsigned i = 1; i <= k; ++i) s_idx.push_back(i);
    unsigned top = 0;
    for (const auto& [e, c] : theta.terms()) top = std::max(top, MultiPolyLoc::degree_in(e, s_idx));
    if (top != mu.size()) return false;
    MultiPolyLoc top_part;
    for (const auto& [e, c] : theta.terms())
        if (MultiPolyLoc::degree_in(e, s_idx) == top)
            top_part += MultiPolyLoc::monomial(theta.symbols(), e, c);

    // alpha^{|mu|-l(mu)} / z_mu * prod_j (s_1^{mu_j} + ... + s_k^{mu_j})
    StanleyRing sr = stanley_ring(k);
    MultiPolyLoc expect = MultiPolyLoc::constant(Rational(1));
    for (unsigned part : mu.parts()) {
        MultiPolyLoc powersum;
        for (unsigned i = 1; i <= k; ++i) powersum += sr.s(i).pow(part);
        expect = expect * powersum;
    }
    expect = expect * sr.ring.alpha.pow(mu.size() - mu.length()) * (Rational(1) / Rational(mu.z()));
    return top_part == expect.project(theta.symbols());
}

inline bool top_degree_check(const Partition& mu, unsigned k) {
    return top_degree_check_of(mu, k, stanley_character(mu, k));
}

} // namespace jk
