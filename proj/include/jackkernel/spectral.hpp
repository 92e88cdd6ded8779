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

#include "jackkernel/jack.hpp"

namespace jk {

// ---------------------------------------------------------------------------
// Truncated power-series helpers (series in an auxiliary variable w = 1/z).
// ---------------------------------------------------------------------------

template <class F>
std::vector<F> series_mul(const std::vector<F>& a, const std::vector<F>& b, unsigned len) {
    std::vector<F> out(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (ring_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// 1/(1 + c w) as a truncated geometric series.
template <class F>
std::vector<F> series_geom(const F& c, unsigned len) {
    std::vector<F> out(len);
    out[0] = F(Rational(1));
    F minus_c = -c;
    F cur = F(Rational(1));
    for (unsigned j = 1; j < len; ++j) {
        cur = cur * minus_c;
        out[j] = cur;
    }
    return out;
}

/*
 * Moments of the transition measure attached to row sizes (rational or
 * symbolic parts), through the product form of the Cauchy transform
 * expanded around infinity.  Index 0 carries M_0 = 1.
 */
template <class F>
std::vector<F> transition_moments(const std::vector<F>& parts, unsigned lmax) {
    unsigned len = lmax + 1;
    std::vector<F> s(len);
    s[0] = F(Rational(1));
    unsigned l = static_cast<unsigned>(parts.size());
    for (unsigned i = 1; i <= l; ++i) {
        F ai = F(Rational(i)) - parts[i - 1];
        F bi = F(Rational(static_cast<long>(i) - 1)) - parts[i - 1];
        std::vector<F> lin(len);
        lin[0] = F(Rational(1));
        if (len > 1) lin[1] = ai;
        s = series_mul(s, lin, len);
        s = series_mul(s, series_geom(bi, len), len);
    }
    s = series_mul(s, series_geom(F(Rational(l)), len), len);
    return s;
}

// Deformed moments in Q(s): M_l(alpha * lambda) / s^l with alpha = s^2.
inline std::vector<RatFunc> alpha_moments(const Partition& lam, unsigned lmax) {
    RatFunc alpha = sqrt_alpha() * sqrt_alpha();
    std::vector<RatFunc> parts;
    for (unsigned p : lam.parts()) parts.push_back(alpha * Rational(p));
    std::vector<RatFunc> m = transition_moments(parts, lmax);
    RatFunc inv_s = RatFunc(Rational(1)) / sqrt_alpha();
    RatFunc scale(Rational(1));
    for (unsigned l = 1; l <= lmax; ++l) {
        scale = scale * inv_s;
        m[l] = m[l] * scale;
    }
    return m;
}

/*
 * Rectangle-symbolic moments: the telescoped Cauchy transform of the stack
 * of k rectangles (s_i x r_i), with the deformed row sizes alpha*s_i.
 * Entry l is sqrt(alpha)^l M^{(alpha)}_l as a polynomial in b, s, r.
 */
inline std::vector<MultiPolyLoc> rect_moments(unsigned k, unsigned lmax, const StanleyRing& sr) {
    unsigned len = lmax + 1;
    std::vector<MultiPolyLoc> s(len);
    s[0] = MultiPolyLoc::constant(Rational(1));
    MultiPolyLoc rsum; // r_1 + ... + r_{i-1}, updated in the loop
    MultiPolyLoc rtot;
    for (unsigned i = 1; i <= k; ++i) rtot += sr.r(i);
    for (unsigned i = 1; i <= k; ++i) {
        MultiPolyLoc as = sr.ring.alpha * sr.s(i);
        MultiPolyLoc upper = rsum + sr.r(i) - as; // R_i - alpha s_i
        MultiPolyLoc lower = rsum - as;           // R_{i-1} - alpha s_i
        std::vector<MultiPolyLoc> lin(len);
        lin[0] = MultiPolyLoc::constant(Rational(1));
        if (len > 1) lin[1] = upper;
        s = series_mul(s, lin, len);
        s = series_mul(s, series_geom(lower, len), len);
        rsum += sr.r(i);
    }
    s = series_mul(s, series_geom(rtot, len), len);
    return s;
}

// ---------------------------------------------------------------------------
// Boolean and free cumulants (triangular transforms of the moments).
// ---------------------------------------------------------------------------

// Forward sum over compositions into parts >= 2; W(0) = 1.
template <class R>
std::vector<R> moments_from_boolean(const std::vector<R>& b, unsigned lmax) {
    std::vector<R> w(lmax + 1);
    w[0] = R(Rational(1));
    for (unsigned l = 1; l <= lmax; ++l) {
        R acc{};
        for (unsigned k = 2; k <= l; ++k) {
            if (k >= b.size() || ring_zero(b[k])) continue;
            acc += b[k] * w[l - k];
        }
        w[l] = acc;
    }
    return w;
}

// Triangular inversion of the Boolean relation; entries 0 and 1 are 1, 0.
template <class R>
std::vector<R> boolean_from_moments(const std::vector<R>& m, unsigned lmax) {
    std::vector<R> b(lmax + 1), w(lmax + 1);
    w[0] = R(Rational(1));
    for (unsigned l = 2; l <= lmax; ++l) {
        R acc = m[l];
        for (unsigned k = 2; k + 2 <= l; ++k) acc -= b[k] * w[l - k];
        b[l] = acc;
        for (unsigned k = 2; k <= l; ++k) w[l] += b[k] * w[l - k];
    }
    return b;
}

// Falling factorial l (l-1) ... (l-j+1) with j factors.
inline Rational falling(unsigned l, unsigned j) {
    Rational acc(1);
    for (unsigned i = 0; i < j; ++i) acc *= Rational(static_cast<long>(l) - static_cast<long>(i));
    return acc;
}

// Convolution powers over compositions into parts >= 2: entry [n][l] sums
// prod x_{k_i} over compositions of l into exactly n parts, each >= 2.
template <class R>
std::vector<std::vector<R>> composition_powers(const std::vector<R>& x, unsigned lmax, unsigned nmax) {
    std::vector<std::vector<R>> c(nmax + 1, std::vector<R>(lmax + 1));
    for (unsigned l = 2; l <= lmax && l < x.size(); ++l) c[1][l] = x[l];
    for (unsigned n = 2; n <= nmax; ++n)
        for (unsigned l = 2; l <= lmax; ++l)
            for (unsigned k = 2; k + 2 <= l; ++k) c[n][l] += c[1][k] * c[n - 1][l - k];
    return c;
}

template <class R>
bool ring_zero_vecslot(const std::vector<std::vector<R>>& c, unsigned n, unsigned l) {
    return n >= c.size() || l >= c[n].size() || ring_zero(c[n][l]);
}

// Moment from free cumulants: the coefficient on the n-part composition
// class is the falling factorial (l)_{n-1} over n!.
template <class R>
std::vector<R> moments_from_free(const std::vector<R>& r, unsigned lmax) {
    unsigned nmax = lmax / 2 + 1;
    std::vector<std::vector<R>> c = composition_powers(r, lmax, nmax);
    std::vector<R> m(lmax + 1);
    m[0] = R(Rational(1));
    for (unsigned l = 2; l <= lmax; ++l) {
        R acc{};
        for (unsigned n = 1; n <= nmax; ++n) {
            if (ring_zero_vecslot(c, n, l)) continue;
            acc += c[n][l] * (falling(l, n - 1) / Rational(factorial(n)));
        }
        m[l] = acc;
    }
    return m;
}

// Triangular inversion of the free relation.
template <class R>
std::vector<R> free_from_moments(const std::vector<R>& m, unsigned lmax) {
    std::vector<R> r(lmax + 1);
    for (unsigned l = 2; l <= lmax; ++l) {
        // Compositions of l into n >= 2 parts only involve r_k with k <= l-2.
        unsigned nmax = l / 2 + 1;
        std::vector<std::vector<R>> c = composition_powers(r, l, nmax);
        R acc = m[l];
        for (unsigned n = 2; n <= nmax; ++n) {
            if (ring_zero_vecslot(c, n, l)) continue;
            acc -= c[n][l] * (falling(l, n - 1) / Rational(factorial(n)));
        }
        r[l] = acc;
    }
    return r;
}

// ---------------------------------------------------------------------------
// The banded spectral operator on the power-sum algebra over Q(s).
// ---------------------------------------------------------------------------

/*
 * Component vector: entry k (1-based) is a polynomial; along every
 * application of the band matrix the quantity (index + p-weight) is
 * conserved.  The row contraction divides by sqrt(alpha) = s, the column
 * lift multiplies by s k d/dp_k, the diagonal carries -(index) gamma.
 */
struct NSVector {
    std::vector<PSPoly<RatFunc>> comp; // index 0 unused; 1..N

    bool conserved(unsigned total) const {
        for (std::size_t k = 1; k < comp.size(); ++k) {
            if (comp[k].is_zero()) continue;
            if (k > total || !comp[k].is_homogeneous(total - static_cast<unsigned>(k))) return false;
        }
        return true;
    }
};

// P-dagger: lift a homogeneous polynomial into the component vector.
inline NSVector ns_lift(const PSPoly<RatFunc>& f, unsigned weight) {
    NSVector v;
    v.comp.assign(weight + 1, PSPoly<RatFunc>());
    RatFunc s = sqrt_alpha();
    for (unsigned k = 1; k <= weight; ++k) v.comp[k] = f.deriv_p(k).scaled(s * Rational(k));
    return v;
}

// One application of the band matrix.
inline NSVector ns_band(const NSVector& v, unsigned weight) {
    NSVector w;
    w.comp.assign(weight + 1, PSPoly<RatFunc>());
    RatFunc s = sqrt_alpha();
    RatFunc inv_s = RatFunc(Rational(1)) / s;
    RatFunc gam = gamma_value();
    for (unsigned i = 1; i <= weight; ++i) {
        PSPoly<RatFunc> acc;
        for (unsigned j = i + 1; j <= weight; ++j) {
            if (v.comp[j].is_zero()) continue;
            acc += v.comp[j].mul_p(j - i).scaled(inv_s);
        }
        if (!v.comp[i].is_zero()) acc += v.comp[i].scaled(-(gam * Rational(i)));
        for (unsigned j = 1; j < i; ++j) {
            if (v.comp[j].is_zero()) continue;
            acc += v.comp[j].deriv_p(i - j).scaled(s * Rational(i - j));
        }
        w.comp[i] = std::move(acc);
    }
    return w;
}

// P: contract the component vector back to a polynomial.
inline PSPoly<RatFunc> ns_contract(const NSVector& v, unsigned weight) {
    RatFunc inv_s = RatFunc(Rational(1)) / sqrt_alpha();
    PSPoly<RatFunc> out;
    for (unsigned k = 1; k <= weight; ++k) {
        if (v.comp[k].is_zero()) continue;
        out += v.comp[k].mul_p(k).scaled(inv_s);
    }
    return out;
}

// P L^ell P-dagger applied to f (any polynomial over Q(s)); processes each
// homogeneous component separately so the truncation is always exact.
inline PSPoly<RatFunc> ns_apply(const PSPoly<RatFunc>& f, unsigned ell) {
    std::map<unsigned, PSPoly<RatFunc>> byw;
    for (const auto& [lam, c] : f.terms()) byw[lam.size()].add(lam, c);
    PSPoly<RatFunc> out;
    for (const auto& [w, fw] : byw) {
        if (w == 0) continue; // derivative annihilates constants
        NSVector v = ns_lift(fw, w);
        for (unsigned step = 0; step < ell; ++step) {
            v = ns_band(v, w);
            if (!v.conserved(w)) fail(Errc::internal_check, "band operator broke index+weight conservation");
        }
        out += ns_contract(v, w);
    }
    return out;
}

/*
 * Spectral eigenvalue route: P L^ell P-dagger acts diagonally on the Jack
 * basis; returns the eigenvalue.  A result that is not an exact multiple of
 * J_lambda is reported as internal_check (distinct failure class).
 */
inline RatFunc ns_eigenvalue(const Partition& lam, unsigned ell, JackTable<RatFunc>& sqrt_table) {
    const PSPoly<RatFunc>& j = sqrt_table.at(lam);
    PSPoly<RatFunc> g = ns_apply(j, ell);
    if (g.is_zero()) return RatFunc();
    const auto& [lead_key, lead_coeff] = *j.terms().begin();
    RatFunc c = g.coeff(lead_key) / lead_coeff;
    if (!(g == j.scaled(c)))
        fail(Errc::internal_check, "spectral operator output is not proportional to the Jack vector");
    return c;
}

struct NSDiagnostic {
    PSPoly<RatFunc> lhs;        // (sqrt(alpha)/2) P L P-dagger f
    PSPoly<RatFunc> rhs;        // Laplace-Beltrami of f
    PSPoly<RatFunc> difference; // lhs - rhs
    bool matches_weight_correction = false;
};

// Compares the degree-one band contraction against the Laplace-Beltrami
// operator and reports the difference; checks empirically whether it equals
// ((alpha-1)/2) sum_k k p_k d/dp_k applied to f.  Neither side is asserted
// as ground truth.
inline NSDiagnostic ns_diagnostic(const PSPoly<RatFunc>& f) {
    Ring<RatFunc> ring = sqrt_field();
    NSDiagnostic d;
    RatFunc half_s = sqrt_alpha() * Rational(1, 2);
    d.lhs = ns_apply(f, 1).scaled(half_s);
    d.rhs = laplace_beltrami(f, ring);
    d.difference = d.lhs - d.rhs;
    PSPoly<RatFunc> correction = weight_scaling(f).scaled(ring.b * Rational(1, 2));
    d.matches_weight_correction = d.difference == correction;
    return d;
}

} // namespace jk
