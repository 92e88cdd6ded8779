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

#include "jackkernel/stanley.hpp"

namespace jk {

// Composition of two creation steps with u symbolic: returns the
// coefficients of the result by total u-degree (apply order first, then
// order second).
template <class R>
UPolyOf<R> creation_compose_upoly(const PSPoly<R>& f, unsigned first, unsigned second, const Ring<R>& ring) {
    UPolyOf<R> a = creation_upoly(f, first, ring);
    UPolyOf<R> out(first + second + 2);
    for (std::size_t d1 = 0; d1 < a.size(); ++d1) {
        if (a[d1].is_zero()) continue;
        UPolyOf<R> b = creation_upoly(a[d1], second, ring);
        for (std::size_t d2 = 0; d2 < b.size(); ++d2) out[d1 + d2] += b[d2];
    }
    return out;
}

// [B_l(u), B_m(u)] f = 0 with u symbolic.
template <class R>
bool creation_commute_check(unsigned l, unsigned m, const PSPoly<R>& f, const Ring<R>& ring) {
    UPolyOf<R> lhs = creation_compose_upoly(f, m, l, ring);
    UPolyOf<R> rhs = creation_compose_upoly(f, l, m, ring);
    std::size_t n = std::max(lhs.size(), rhs.size());
    lhs.resize(n);
    rhs.resize(n);
    for (std::size_t d = 0; d < n; ++d)
        if (!(lhs[d] == rhs[d])) return false;
    return true;
}

/*
 * The marginal-sum operator C_l(t, p) applied to a truncated series:
 *
 *   C_l = sum_{k>=1} t^{l+k}/(l+k) C_{l,k}  +  [l>0] t^l/l C_{l,0},
 *
 * where C_{l,k} extracts the u^l coefficient of the creation step of order
 * l+k.  The guard on the k=0 term avoids the ill-defined t^0/0 summand.
 */
template <class R>
PSeries<R> c_op_apply(unsigned l, const PSeries<R>& g, const Ring<R>& ring) {
    PSeries<R> out;
    out.c.assign(g.c.size(), PSPoly<R>());
    unsigned max_deg = g.max_degree();
    for (unsigned n_in = 0; n_in <= max_deg; ++n_in) {
        if (g.c[n_in].is_zero()) continue;
        unsigned k_min = (l == 0) ? 1 : 0;
        for (unsigned k = k_min; n_in + l + k <= max_deg; ++k) {
            if (l + k == 0) continue;
            PSPoly<R> piece = creation_coeff(g.c[n_in], l, k, ring);
            out.c[n_in + l + k] += piece.scaled_q(Rational(1, static_cast<long>(l + k)));
        }
    }
    return out;
}

struct COpReport {
    bool pass = false;
    std::string detail;
};

// Commutation of the marginal operators on a homogeneous test vector,
// truncated at the series cutoff:
//   [C_l, C_m] = 0 for l, m >= 1,   [C_0, C_m] = (m+1) C_{m+1} for m >= 1.
template <class R>
COpReport c_commutator_check(unsigned l, unsigned m, const PSPoly<R>& f, unsigned max_degree,
                             const Ring<R>& ring) {
    COpReport rep;
    unsigned w = f.is_zero() ? 0 : homogeneous_weight(f);
    if (w > max_degree) fail(Errc::limit, "test vector weight exceeds the series cutoff");
    PSeries<R> seed;
    seed.c.assign(max_degree + 1, PSPoly<R>());
    seed.c[w] = f;

    PSeries<R> ab = c_op_apply(l, c_op_apply(m, seed, ring), ring);
    PSeries<R> ba = c_op_apply(m, c_op_apply(l, seed, ring), ring);
    std::vector<PSPoly<R>> comm(max_degree + 1);
    for (unsigned n = 0; n <= max_degree; ++n) comm[n] = ab.c[n] - ba.c[n];

    std::vector<PSPoly<R>> expect(max_degree + 1);
    if (l == 0 && m > 0) {
        PSeries<R> next = c_op_apply(m + 1, seed, ring);
        for (unsigned n = 0; n <= max_degree; ++n) expect[n] = next.c[n].scaled_q(Rational(m + 1));
    }
    rep.pass = true;
    for (unsigned n = 0; n <= max_degree; ++n) {
        if (!(comm[n] == expect[n])) {
            rep.pass = false;
            rep.detail = "mismatch at t^" + std::to_string(n);
            return rep;
        }
    }
    return rep;
}

/*
 * Two-alphabet kernel series: t-degree -> u-degree -> two-alphabet
 * polynomial over Q(alpha).  Route "basis" sums J(p) J(q) J(u)/j over
 * partitions of each degree; route "ops" grows the series with the creation
 * steps, one q-monomial per composition class.  The two must agree term by
 * term, and the series intertwines d/dq_m with the creation step of order m.
 */
struct KernelSeries {
    std::vector<std::vector<BiPSPoly<RatFunc>>> c; // [t-degree][u-degree]

    unsigned max_degree() const { return c.empty() ? 0 : static_cast<unsigned>(c.size()) - 1; }

    void add(unsigned t, unsigned u, const Partition& p, const Partition& q, const RatFunc& v) {
        if (v.is_zero()) return;
        if (c[t].size() <= u) c[t].resize(u + 1);
        c[t][u].add(p, q, v);
    }

    bool operator==(const KernelSeries& o) const {
        unsigned n = std::max(c.size(), o.c.size());
        auto slice = [](const KernelSeries& k, unsigned t, unsigned u) -> BiPSPoly<RatFunc> {
            if (t < k.c.size() && u < k.c[t].size()) return k.c[t][u];
            return BiPSPoly<RatFunc>();
        };
        for (unsigned t = 0; t < n; ++t) {
            unsigned du = 0;
            if (t < c.size()) du = std::max<std::size_t>(du, c[t].size());
            if (t < o.c.size()) du = std::max<std::size_t>(du, o.c[t].size());
            for (unsigned u = 0; u < du; ++u)
                if (!(slice(*this, t, u) == slice(o, t, u))) return false;
        }
        return true;
    }
};

// Route 1: sum over the Jack basis.  The sum enumerates every partition of
// each degree, so the truncation order is guarded.
inline KernelSeries kernel_series_basis(unsigned max_degree, JackTable<RatFunc>& table) {
    if (max_degree > 5) fail(Errc::limit, "kernel truncation order exceeds the guard 5");
    KernelSeries ks;
    ks.c.assign(max_degree + 1, {});
    const Ring<RatFunc>& ring = table.ring();
    for (unsigned n = 0; n <= max_degree; ++n) {
        for (const Partition& xi : partitions_of(n)) {
            const PSPoly<RatFunc>& j = table.at(xi);
            // J(u): product of (u + content) over the boxes.
            std::vector<RatFunc> upoly{RatFunc(Rational(1))};
            for (unsigned i = 1; i <= xi.length(); ++i) {
                for (unsigned jj = 1; jj <= xi.parts()[i - 1]; ++jj) {
                    RatFunc cbox = alpha_content(i, jj, ring);
                    std::vector<RatFunc> next(upoly.size() + 1);
                    for (std::size_t d = 0; d < upoly.size(); ++d) {
                        next[d + 1] += upoly[d];
                        next[d] += upoly[d] * cbox;
                    }
                    upoly = std::move(next);
                }
            }
            RatFunc inv_norm = RatFunc(Rational(1)) / hook_norm(xi, ring);
            for (const auto& [lp, cp] : j.terms()) {
                for (const auto& [lq, cq] : j.terms()) {
                    RatFunc base = cp * cq * inv_norm;
                    for (std::size_t d = 0; d < upoly.size(); ++d)
                        ks.add(n, static_cast<unsigned>(d), lp, lq, base * upoly[d]);
                }
            }
        }
    }
    return ks;
}

// Route 2: creation-operator growth, one q-monomial per partition.
inline KernelSeries kernel_series_ops(unsigned max_degree, const Ring<RatFunc>& ring) {
    KernelSeries ks;
    ks.c.assign(max_degree + 1, {});
    for (unsigned n = 0; n <= max_degree; ++n) {
        for (const Partition& nu : partitions_of(n)) {
            Rational weight(1);
            for (unsigned mj : nu.multiplicities()) weight /= Rational(factorial(mj));
            // Chain of creation steps with u tracked by degree.
            UPolyOf<RatFunc> slices{PSPoly<RatFunc>::one(RatFunc(Rational(1)))};
            for (unsigned part : nu.parts()) {
                UPolyOf<RatFunc> next(slices.size() + part);
                for (std::size_t d = 0; d < slices.size(); ++d) {
                    if (slices[d].is_zero()) continue;
                    UPolyOf<RatFunc> stepped = creation_upoly(slices[d], part, ring);
                    for (std::size_t d2 = 0; d2 < stepped.size(); ++d2)
                        next[d + d2] += stepped[d2].scaled_q(Rational(1, part));
                }
                slices = std::move(next);
            }
            for (std::size_t d = 0; d < slices.size(); ++d)
                for (const auto& [lp, cp] : slices[d].terms())
                    ks.add(n, static_cast<unsigned>(d), lp, nu, cp * weight);
        }
    }
    return ks;
}

// d/dq_m applied to one t-slice of the kernel.
inline std::vector<BiPSPoly<RatFunc>> kernel_dq(const std::vector<BiPSPoly<RatFunc>>& slice, unsigned m) {
    std::vector<BiPSPoly<RatFunc>> out(slice.size());
    for (std::size_t u = 0; u < slice.size(); ++u) {
        for (const auto& [key, c] : slice[u].terms()) {
            unsigned mult = key.second.multiplicity(m);
            if (mult == 0) continue;
            out[u].add(key.first, key.second.without_part(m), c * Rational(mult));
        }
    }
    return out;
}

// Creation step of order m (u tracked) applied to the p-alphabet of a slice.
inline std::vector<BiPSPoly<RatFunc>> kernel_creation(const std::vector<BiPSPoly<RatFunc>>& slice, unsigned m,
                                                      const Ring<RatFunc>& ring) {
    std::vector<BiPSPoly<RatFunc>> out;
    for (std::size_t u = 0; u < slice.size(); ++u) {
        // Group the p-polynomials by q-partition.
        std::map<Partition, PSPoly<RatFunc>> byq;
        for (const auto& [key, c] : slice[u].terms()) byq[key.second].add(key.first, c);
        for (const auto& [q, fp] : byq) {
            UPolyOf<RatFunc> stepped = creation_upoly(fp, m, ring);
            for (std::size_t d = 0; d < stepped.size(); ++d) {
                if (stepped[d].is_zero()) continue;
                if (out.size() <= u + d) out.resize(u + d + 1);
                for (const auto& [lp, cp] : stepped[d].terms()) out[u + d].add(lp, q, cp);
            }
        }
    }
    return out;
}

// Intertwining: t^m B_m/m applied to the kernel equals d/dq_m of it.
inline bool kernel_intertwine_check(unsigned m, const KernelSeries& ks, const Ring<RatFunc>& ring) {
    unsigned last = ks.max_degree();
    for (unsigned n = 0; n <= last; ++n) {
        std::vector<BiPSPoly<RatFunc>> rhs = kernel_dq(ks.c[n], m);
        std::vector<BiPSPoly<RatFunc>> lhs;
        if (n >= m) {
            lhs = kernel_creation(ks.c[n - m], m, ring);
            for (auto& s : lhs) {
                BiPSPoly<RatFunc> scaled;
                for (const auto& [key, c] : s.terms()) scaled.add(key.first, key.second, c * Rational(1, m));
                s = std::move(scaled);
            }
        }
        std::size_t du = std::max(lhs.size(), rhs.size());
        lhs.resize(du);
        rhs.resize(du);
        for (std::size_t u = 0; u < du; ++u)
            if (!(lhs[u] == rhs[u])) return false;
    }
    return true;
}

} // namespace jk
