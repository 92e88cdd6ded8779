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
#include "jackkernel/verify.hpp"

#include <algorithm>
#include <functional>

#include "jackkernel/kernel.hpp"
#include "jackkernel/ribbon.hpp"

namespace jk {

namespace {

using RF = RatFunc;
using MP = MultiPolyLoc;
using PSA = PSPoly<RF>;
using PSB = PSPoly<MP>;

unsigned pick(unsigned requested, unsigned fallback) { return requested == 0 ? fallback : requested; }

void push(SuiteReport& rep, const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back(CheckResult{name, pass, pass ? "" : detail});
}

// 1. Jack construction: the four defining properties for every |lambda| <= n.
SuiteReport suite_jack(unsigned max_size) {
    unsigned n = pick(max_size, 6);
    SuiteReport rep{"jack", "defining properties of the Jack vectors up to weight " + std::to_string(n), {}};
    JackTable<MP> table(b_ring());
    for (const Partition& lam : partitions_up_to(n)) {
        JackVerifyReport r = jack_verify(lam, table);
        std::string which;
        if (!r.eigen_ok) which += " eigen";
        if (!r.triangular_ok) which += " triangularity";
        if (!r.leading_ok) which += " leading-coefficient";
        if (!r.principal_ok) which += " principal";
        push(rep, "jack[" + lam.to_string() + "]", r.all(), "failed:" + which);
    }
    return rep;
}

// 2. alpha = 1 oracle: specialization equals the stabilizer-sum route.
SuiteReport suite_young(unsigned max_size) {
    unsigned n = pick(max_size, 5);
    SuiteReport rep{"young", "alpha = 1 specialization against the stabilizer sums up to weight " +
                                 std::to_string(n),
                    {}};
    JackTable<MP> table(b_ring());
    for (const Partition& lam : partitions_up_to(n)) {
        PSPoly<Rational> specialized =
            table.at(lam).map_coeffs([](const MP& c) { return c.eval({Rational(0)}); });
        bool ok = specialized == young_alpha_one(lam, std::max(n, 6u));
        push(rep, "young[" + lam.to_string() + "]", ok, "specialization differs from the oracle");
    }
    return rep;
}

// 3. Character consistency: the series route equals the coefficient route,
// including the vanishing for |lambda| < |mu|.
SuiteReport suite_characters(unsigned max_size) {
    unsigned n = pick(max_size, 4);
    SuiteReport rep{"characters",
                    "series route against coefficient extraction for |mu|, |lambda| <= " + std::to_string(n),
                    {}};
    Ring<RF> ring = alpha_field();
    JackTable<RF> table(alpha_field());
    for (const Partition& lam : partitions_up_to(n)) {
        PSeries<RF> f = char_series(lam, n, ring);
        bool ok = true;
        std::string bad;
        for (const Partition& mu : partitions_up_to(n)) {
            RF via_series = char_from_series(mu, f);
            RF direct = jack_character(mu, lam, table);
            if (!(via_series == direct)) {
                ok = false;
                bad = "mu = [" + mu.to_string() + "]";
                break;
            }
        }
        push(rep, "characters[lambda=" + lam.to_string() + "]", ok, bad);
    }
    return rep;
}

// 4. Vanishing: [t^m] of the partition series is zero past the size.
SuiteReport suite_vanishing(unsigned max_size) {
    unsigned n = pick(max_size, 4);
    SuiteReport rep{"vanishing", "series coefficients above the size budget vanish, |lambda| <= " +
                                     std::to_string(n),
                    {}};
    Ring<MP> ring = b_ring();
    for (const Partition& lam : partitions_up_to(n)) {
        PSeries<MP> f = char_series(lam, lam.size() + 2, ring);
        for (unsigned m = lam.size() + 1; m <= lam.size() + 2; ++m) {
            push(rep, "vanishing[" + lam.to_string() + ", t^" + std::to_string(m) + "]", f.at(m).is_zero(),
                 "nonzero coefficient " + f.at(m).to_string());
        }
    }
    return rep;
}

// 5. Positivity and integrality in multirectangular coordinates.
SuiteReport suite_lassalle(unsigned max_size) {
    unsigned n = pick(max_size, 5);
    SuiteReport rep{"lassalle",
                    "positivity and integrality of the rewritten characters, |mu| <= " + std::to_string(n),
                    {}};
    for (unsigned k = 1; k <= 2; ++k) {
        std::map<Partition, MP> thetas = stanley_characters_upto(k, n);
        for (const auto& [mu, theta] : thetas) {
            if (mu.empty()) continue;
            PositivityReport audit = positivity_audit_of(mu, k, theta);
            std::string detail;
            for (const std::string& mono : audit.offending) detail += mono + "; ";
            push(rep, "lassalle[mu=" + mu.to_string() + ", k=" + std::to_string(k) + "]", audit.pass(),
                 detail);
        }
    }
    // Spot value: mu = [2], k = 1 is exactly the four unit monomials.
    PositivityReport spot = positivity_audit(Partition::of({2}), 1);
    StanleyRing sr = stanley_ring(1);
    MP expect = sr.s(1) * sr.s(1) * sr.r(1) + sr.b() * sr.s(1) * sr.s(1) * sr.r(1) +
                sr.b() * sr.s(1) * sr.r(1) + sr.s(1) * sr.r(1) * sr.r(1);
    bool spot_ok = spot.rewritten == expect.project(spot.rewritten.symbols()) &&
                   spot.rewritten.terms().size() == 4;
    push(rep, "lassalle[spot mu=2, k=1]", spot_ok, "rewritten polynomial is " + spot.rewritten.to_string());
    return rep;
}

// 6. Shifted symmetry and multirectangular invariance.
SuiteReport suite_symmetry(unsigned max_size) {
    unsigned n = pick(max_size, 4);
    SuiteReport rep{"symmetry", "shifted symmetry (k <= 3) and coordinate invariance, |mu| <= " +
                                    std::to_string(n),
                    {}};
    for (unsigned k = 2; k <= 3; ++k) {
        std::map<Partition, MP> thetas = stanley_characters_upto(k, n);
        for (const auto& [mu, theta] : thetas) {
            if (mu.empty()) continue;
            push(rep, "shifted-symmetry[mu=" + mu.to_string() + ", k=" + std::to_string(k) + "]",
                 shifted_symmetry_check_of(k, theta), "not symmetric in the shifted variables");
        }
    }
    push(rep, "multirect[2,2 | one square vs two rows]",
         multirect_invariance_check(Partition::of({2, 2}), {2}, {2}, {2, 2}, {1, 1}), "");
    push(rep, "multirect[2,2 | zero-weight padding]",
         multirect_invariance_check(Partition::of({2, 2}), {2}, {2}, {2, 5}, {2, 0}), "");
    push(rep, "multirect[3,1,1 | stacked vs rows]",
         multirect_invariance_check(Partition::of({3, 1, 1}), {3, 1}, {1, 2}, {3, 1, 1}, {1, 1, 1}), "");
    push(rep, "multirect[3,1,1 | padded rows]",
         multirect_invariance_check(Partition::of({3, 1, 1}), {3, 1}, {1, 2}, {3, 3, 1}, {1, 0, 2}), "");
    return rep;
}

// 7. Band-operator eigenvalues against the moment route.
SuiteReport suite_nazarov(unsigned max_size) {
    unsigned n = pick(max_size, 5);
    SuiteReport rep{"nazarov", "band-operator eigenvalues equal the Boolean cumulants, |lambda| <= " +
                                   std::to_string(n),
                    {}};
    JackTable<RF> stable(sqrt_field());
    for (const Partition& lam : partitions_up_to(n)) {
        std::vector<RF> m = alpha_moments(lam, 6);
        std::vector<RF> b = boolean_from_moments(m, 6);
        bool ok = true;
        std::string bad;
        for (unsigned ell = 0; ell <= 4; ++ell) {
            RF eig = ns_eigenvalue(lam, ell, stable);
            if (!(eig == b[ell + 2])) {
                ok = false;
                bad = "ell = " + std::to_string(ell);
                break;
            }
        }
        push(rep, "nazarov[" + lam.to_string() + "]", ok, bad);
    }
    RF gam = gamma_value();
    bool spot = ns_eigenvalue(Partition::of({1}), 0, stable) == RF(Rational(1)) &&
                ns_eigenvalue(Partition::of({1}), 1, stable) == -gam &&
                ns_eigenvalue(Partition::of({1}), 2, stable) == gam * gam;
    push(rep, "nazarov[spot one box: 1, -gamma, gamma^2]", spot, "");
    return rep;
}

// 8. Ribbon expansions evaluated through the normalized characters.
SuiteReport suite_ribbon(unsigned max_size) {
    unsigned total_max = pick(max_size, 7);
    SuiteReport rep{"ribbon", "path expansions evaluate to cumulant/moment products, sum of lengths <= " +
                                  std::to_string(total_max),
                    {}};
    JackTable<RF> stable(sqrt_field());
    std::vector<std::vector<unsigned>> tuples;
    for (unsigned l = 2; l <= total_max; ++l) tuples.push_back({l});
    for (unsigned l1 = 2; l1 <= total_max; ++l1)
        for (unsigned l2 = l1; l1 + l2 <= total_max; ++l2) tuples.push_back({l1, l2});
    if (total_max >= 5) tuples.push_back({3, 2}); // reversed tuple: order must not matter

    // Moment and cumulant data per diagram, shared across tuples.
    std::map<Partition, std::pair<std::vector<RF>, std::vector<RF>>> data;
    for (const Partition& lam : partitions_up_to(total_max)) {
        std::vector<RF> m = alpha_moments(lam, total_max);
        std::vector<RF> b = boolean_from_moments(m, total_max);
        data.emplace(lam, std::make_pair(std::move(m), std::move(b)));
    }

    for (const auto& lengths : tuples) {
        unsigned total = 0;
        for (unsigned l : lengths) total += l;
        std::string label;
        for (unsigned l : lengths) label += (label.empty() ? "" : ",") + std::to_string(l);
        auto bool_exp = product_expansion(lengths, ExpansionMode::boolean_cumulant);
        auto mom_exp = product_expansion(lengths, ExpansionMode::moment);
        bool ok = true;
        std::string bad;
        for (const Partition& lam : partitions_up_to(total)) {
            const auto& [m, b] = data.at(lam);
            RF want_b(Rational(1)), want_m(Rational(1));
            for (unsigned l : lengths) {
                want_b = want_b * b[l];
                want_m = want_m * m[l];
            }
            RF got_b, got_m;
            for (const auto& [mu, coeff] : bool_exp)
                got_b += eval_gamma_poly(coeff) * normalized_character(mu, lam, stable);
            for (const auto& [mu, coeff] : mom_exp)
                got_m += eval_gamma_poly(coeff) * normalized_character(mu, lam, stable);
            if (!(got_b == want_b) || !(got_m == want_m)) {
                ok = false;
                bad = "lambda = [" + lam.to_string() + "]";
                break;
            }
        }
        push(rep, "ribbon[" + label + "]", ok, bad);
    }

    // Spot identity: the length-4 Boolean expansion.
    auto b4 = product_expansion({4}, ExpansionMode::boolean_cumulant);
    auto g = [](std::initializer_list<long> c) {
        std::vector<Rational> v;
        for (long x : c) v.push_back(Rational(x));
        return UniPoly("gamma", std::move(v));
    };
    bool spot = b4.size() == 4 && b4.at(Partition::of({3})) == g({1}) &&
                b4.at(Partition::of({2})) == g({0, -3}) && b4.at(Partition::of({1, 1})) == g({1}) &&
                b4.at(Partition::of({1})) == g({0, 0, 1});
    push(rep, "ribbon[spot B4 = Ch3 - 3g Ch2 + Ch11 + g^2 Ch1]", spot, "");
    return rep;
}

// 9. Integrality: the character-to-moment inversion stays over Z[gamma].
SuiteReport suite_integrality(unsigned max_size) {
    unsigned n = pick(max_size, 5);
    SuiteReport rep{"integrality", "character/moment transitions over Z[gamma], |mu| <= " + std::to_string(n),
                    {}};
    // The table builder audits uni-triangularity and integrality internally
    // and throws on violation; the round trip is checked here explicitly.
    std::map<Partition, std::map<Partition, UniPoly>> table;
    try {
        table = char_in_moments_table(n);
        push(rep, "integrality[table builds over Z[gamma]]", true, "");
    } catch (const Error& e) {
        push(rep, "integrality[table builds over Z[gamma]]", false, e.what());
        return rep;
    }
    std::map<Partition, std::map<Partition, UniPoly>> forward;
    for (const Partition& rho : partitions_up_to(n)) {
        if (rho.empty()) {
            forward[rho] = {{Partition(), UniPoly(Rational(1))}};
            continue;
        }
        std::vector<unsigned> lengths;
        for (unsigned p : rho.parts()) lengths.push_back(p + 1);
        forward[rho] = product_expansion(lengths, ExpansionMode::moment);
    }
    for (const Partition& mu : partitions_up_to(n)) {
        std::map<Partition, UniPoly> recovered;
        for (const auto& [rho, coeff] : table.at(mu))
            for (const auto& [sig, f] : forward.at(rho)) recovered[sig] += coeff * f;
        for (auto it = recovered.begin(); it != recovered.end();) {
            if (it->second.is_zero()) it = recovered.erase(it);
            else ++it;
        }
        bool ok = recovered.size() == 1 && recovered.begin()->first == mu &&
                  recovered.begin()->second == UniPoly(Rational(1));
        push(rep, "integrality[round trip mu=" + mu.to_string() + "]", ok, "");
    }
    // Spot values: Ch_2 = M_3 + gamma M_2 and Ch_11 = M_2^2 - M_2.
    auto c2 = table.at(Partition::of({2}));
    auto c11 = table.at(Partition::of({1, 1}));
    bool spot = c2.size() == 2 && c2.at(Partition::of({2})) == UniPoly(Rational(1)) &&
                c2.at(Partition::of({1})) == UniPoly("gamma", {Rational(0), Rational(1)}) &&
                c11.size() == 2 && c11.at(Partition::of({1, 1})) == UniPoly(Rational(1)) &&
                c11.at(Partition::of({1})) == UniPoly(Rational(-1));
    push(rep, "integrality[spot Ch2, Ch11]", spot, "");

    // Cumulant conversions round-trip over the integers.
    unsigned long long state = 0x6a09e667f3bcc908ull;
    auto next = [&](unsigned bound) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<unsigned>(state % bound);
    };
    bool rt = true;
    for (int it = 0; it < 20 && rt; ++it) {
        std::vector<Rational> m(9, Rational(0));
        m[0] = Rational(1);
        for (unsigned l = 2; l <= 8; ++l) m[l] = Rational(static_cast<long>(next(31)) - 15);
        std::vector<Rational> bo = boolean_from_moments(m, 8);
        std::vector<Rational> fr = free_from_moments(m, 8);
        std::vector<Rational> mb = moments_from_boolean(bo, 8);
        std::vector<Rational> mf = moments_from_free(fr, 8);
        for (unsigned l = 2; l <= 8; ++l) {
            rt = rt && mb[l] == m[l] && mf[l] == m[l] && is_integer(bo[l]);
        }
    }
    push(rep, "integrality[cumulant round trips over Z]", rt, "");
    return rep;
}

// 10. Commutation of the creation steps and the marginal operators.
SuiteReport suite_commutation(unsigned max_size) {
    unsigned budget = pick(max_size, 7);
    SuiteReport rep{"commutation",
                    "creation-step and marginal-operator commutators to order " + std::to_string(budget),
                    {}};
    Ring<MP> ring = b_ring();

    for (unsigned l = 1; l <= budget; ++l) {
        for (unsigned m = l + 1; l + m <= budget; ++m) {
            bool ok = true;
            std::string bad;
            for (const Partition& lam : partitions_up_to(4)) {
                PSB f = PSB::monomial(lam, MP(Rational(1)));
                if (!creation_commute_check(l, m, f, ring)) {
                    ok = false;
                    bad = "on p[" + lam.to_string() + "]";
                    break;
                }
            }
            push(rep, "commutation[B" + std::to_string(l) + ", B" + std::to_string(m) + "]", ok, bad);
        }
    }

    std::vector<PSB> seeds{PSB::one(MP(Rational(1))), PSB::monomial(Partition::of({1}), MP(Rational(1)))};
    std::vector<std::pair<unsigned, unsigned>> cpairs{{1, 2}, {1, 3}, {2, 3}, {0, 1}, {0, 2}, {0, 3}};
    for (const auto& [l, m] : cpairs) {
        bool ok = true;
        std::string bad;
        for (const PSB& f : seeds) {
            COpReport r = c_commutator_check(l, m, f, budget, ring);
            if (!r.pass) {
                ok = false;
                bad = r.detail;
                break;
            }
        }
        push(rep, "commutation[C" + std::to_string(l) + ", C" + std::to_string(m) + "]", ok, bad);
    }
    return rep;
}

// 11. Two-alphabet kernel: both routes and the derivative intertwining.
SuiteReport suite_kernel(unsigned max_size) {
    unsigned n = pick(max_size, 4);
    SuiteReport rep{"kernel", "two-alphabet kernel routes and intertwining to order " + std::to_string(n),
                    {}};
    JackTable<RF> table(alpha_field());
    KernelSeries basis_route = kernel_series_basis(n, table);
    KernelSeries ops_route = kernel_series_ops(n, table.ring());
    push(rep, "kernel[basis route equals operator route]", basis_route == ops_route, "");
    for (unsigned m = 1; m <= n; ++m)
        push(rep, "kernel[derivative intertwining m=" + std::to_string(m) + "]",
             kernel_intertwine_check(m, ops_route, table.ring()), "");
    return rep;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"jack",   "young",  "characters",  "vanishing",   "lassalle", "symmetry",
            "nazarov", "ribbon", "integrality", "commutation", "kernel"};
}

SuiteReport run_suite(const std::string& name, unsigned max_size) {
    if (name == "jack") return suite_jack(max_size);
    if (name == "young") return suite_young(max_size);
    if (name == "characters") return suite_characters(max_size);
    if (name == "vanishing") return suite_vanishing(max_size);
    if (name == "lassalle") return suite_lassalle(max_size);
    if (name == "symmetry") return suite_symmetry(max_size);
    if (name == "nazarov") return suite_nazarov(max_size);
    if (name == "ribbon") return suite_ribbon(max_size);
    if (name == "integrality") return suite_integrality(max_size);
    if (name == "commutation") return suite_commutation(max_size);
    if (name == "kernel") return suite_kernel(max_size);
    if (name == "all") {
        SuiteReport all{"all", "every verification suite at its default size", {}};
        for (const std::string& s : suite_names()) {
            SuiteReport r = run_suite(s, max_size);
            for (auto& c : r.checks) all.checks.push_back(std::move(c));
        }
        return all;
    }
    fail(Errc::parse, "unknown suite '" + name + "'");
}

} // namespace jk
