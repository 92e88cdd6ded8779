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
#include "jackkernel/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace jk {

std::vector<Excursion> enumerate_excursions(unsigned len, unsigned dmax) {
    std::vector<Excursion> out;
    std::vector<int> steps;
    // DFS over step degrees, descending at each position for a stable order.
    std::function<void(unsigned, int)> go = [&](unsigned pos, int h) {
        if (pos == len) {
            if (h == 0) out.push_back(Excursion{steps});
            return;
        }
        unsigned rem = len - pos;
        for (int d = static_cast<int>(dmax); d >= -static_cast<int>(std::min<unsigned>(h, dmax)); --d) {
            if (d == 0 && h == 0) continue; // no horizontal step on the axis
            int h2 = h + d;
            if (h2 < 0) continue;
            if (rem == 1 && h2 != 0) continue;
            // Height must be killable by the remaining down steps.
            if (h2 > static_cast<int>(dmax) * static_cast<int>(rem - 1)) continue;
            steps.push_back(d);
            go(pos + 1, h2);
            steps.pop_back();
        }
    };
    if (len == 0) {
        out.push_back(Excursion{});
        return out;
    }
    go(0, 0);
    return out;
}

std::vector<int> RibbonPath::heights() const {
    std::vector<int> h(steps.size());
    int cur = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        cur += steps[i];
        h[i] = cur;
    }
    return h;
}

unsigned RibbonPath::axis_touches() const {
    unsigned n = 0;
    for (int h : heights())
        if (h == 0) ++n;
    return n;
}

namespace {

// Enumerates the step sequences site by site.  In Lukasiewicz mode an up
// step of degree >= 2 is admitted only when an unmatched earlier down step
// of the same degree exists (greedy prefix feasibility of the pairing).
void enumerate_steps(const std::vector<unsigned>& lengths, bool lukasiewicz, bool require_k_touches,
                     unsigned up_bound, std::vector<std::vector<int>>& out) {
    unsigned total = std::accumulate(lengths.begin(), lengths.end(), 0u);
    std::vector<int> steps;
    std::map<unsigned, int> spare_downs; // per degree: downs minus forced ups so far
    std::function<void(unsigned, unsigned, int)> go = [&](unsigned site, unsigned pos, int h) {
        if (site == lengths.size()) {
            out.push_back(steps);
            return;
        }
        unsigned len = lengths[site];
        if (pos == len) {
            go(site + 1, 0, 0);
            return;
        }
        unsigned rem = len - pos;
        // Down steps and horizontals.
        for (int d = -h; d <= 0; ++d) {
            if (d == 0 && h == 0) continue;
            int h2 = h + d;
            if (rem == 1 && h2 != 0) continue;
            if (require_k_touches && h2 == 0 && rem > 1) continue;
            if (d < 0) spare_downs[static_cast<unsigned>(-d)] += 1;
            steps.push_back(d);
            go(site, pos + 1, h2);
            steps.pop_back();
            if (d < 0) spare_downs[static_cast<unsigned>(-d)] -= 1;
        }
        if (rem == 1) return; // the last step of a site cannot go up
        // Up steps.
        for (unsigned d = 1; d <= up_bound; ++d) {
            bool forced_pairing = lukasiewicz && d >= 2;
            if (forced_pairing && spare_downs[d] <= 0) continue;
            if (forced_pairing) spare_downs[d] -= 1;
            steps.push_back(static_cast<int>(d));
            go(site, pos + 1, h + static_cast<int>(d));
            steps.pop_back();
            if (forced_pairing) spare_downs[d] += 1;
        }
    };
    (void)total;
    go(0, 0, 0);
}

// All partial injective matchings of downs into later ups of one degree;
// when force_all_ups is set every up must be covered.
void enumerate_matchings(const std::vector<unsigned>& downs, const std::vector<unsigned>& ups,
                         bool force_all_ups, std::size_t up_idx, std::vector<bool>& down_used,
                         std::vector<std::pair<unsigned, unsigned>>& acc,
                         std::vector<std::vector<std::pair<unsigned, unsigned>>>& out) {
    if (up_idx == ups.size()) {
        out.push_back(acc);
        return;
    }
    if (!force_all_ups) {
        // Leave this up step unpaired.
        enumerate_matchings(downs, ups, force_all_ups, up_idx + 1, down_used, acc, out);
    }
    for (std::size_t i = 0; i < downs.size(); ++i) {
        if (down_used[i] || downs[i] >= ups[up_idx]) continue;
        down_used[i] = true;
        acc.emplace_back(downs[i], ups[up_idx]);
        enumerate_matchings(downs, ups, force_all_ups, up_idx + 1, down_used, acc, out);
        acc.pop_back();
        down_used[i] = false;
    }
}

} // namespace

std::vector<RibbonPath> enumerate_ribbon_paths(const std::vector<unsigned>& lengths, bool lukasiewicz,
                                               bool require_k_touches, unsigned up_bound) {
    std::vector<std::vector<int>> step_lists;
    enumerate_steps(lengths, lukasiewicz, require_k_touches, up_bound, step_lists);

    unsigned total = std::accumulate(lengths.begin(), lengths.end(), 0u);
    std::vector<RibbonPath> out;
    for (const auto& steps : step_lists) {
        // Positions by degree.
        std::map<unsigned, std::vector<unsigned>> downs, ups;
        for (unsigned pos = 0; pos < steps.size(); ++pos) {
            if (steps[pos] < 0) downs[static_cast<unsigned>(-steps[pos])].push_back(pos);
            if (steps[pos] > 0) ups[static_cast<unsigned>(steps[pos])].push_back(pos);
        }
        // Per-degree matchings, then the cartesian product across degrees.
        std::vector<std::vector<std::vector<std::pair<unsigned, unsigned>>>> choices;
        bool feasible = true;
        for (const auto& [deg, up_list] : ups) {
            bool force = lukasiewicz && deg >= 2;
            std::vector<unsigned> down_list = downs.count(deg) ? downs.at(deg) : std::vector<unsigned>{};
            std::vector<std::vector<std::pair<unsigned, unsigned>>> m;
            std::vector<bool> used(down_list.size(), false);
            std::vector<std::pair<unsigned, unsigned>> acc;
            enumerate_matchings(down_list, up_list, force, 0, used, acc, m);
            if (m.empty()) {
                feasible = false;
                break;
            }
            choices.push_back(std::move(m));
        }
        if (!feasible) continue;
        // Cartesian product.
        std::vector<std::pair<unsigned, unsigned>> acc;
        std::function<void(std::size_t)> combine = [&](std::size_t level) {
            if (level == choices.size()) {
                RibbonPath p{lengths, steps, acc};
                std::sort(p.pairs.begin(), p.pairs.end());
                if (lukasiewicz) {
                    // Structural identity of the path family: the unpaired
                    // down degrees account for the length budget exactly.
                    RibbonWeight w = ribbon_weight(p);
                    unsigned horizontals = 0;
                    for (int s : steps) horizontals += (s == 0) ? 1 : 0;
                    unsigned lhs = w.mu.size() + w.mu.length();
                    unsigned rhs = total - horizontals - 2 * static_cast<unsigned>(p.pairs.size());
                    if (lhs != rhs)
                        fail(Errc::internal_check, "ribbon path violates the length-budget identity");
                }
                out.push_back(std::move(p));
                return;
            }
            for (const auto& m : choices[level]) {
                acc.insert(acc.end(), m.begin(), m.end());
                combine(level + 1);
                acc.resize(acc.size() - m.size());
            }
        };
        combine(0);
    }
    return out;
}

RibbonWeight ribbonWeight_impl(const RibbonPath& p) {
    RibbonWeight w;
    std::vector<bool> paired(p.steps.size(), false);
    BigInt pair_factor(1);
    for (const auto& [d, u] : p.pairs) {
        paired[d] = true;
        paired[u] = true;
        pair_factor *= BigInt(p.steps[u]);
    }
    std::vector<unsigned> mu_parts;
    for (unsigned pos = 0; pos < p.steps.size(); ++pos)
        if (p.steps[pos] < 0 && !paired[pos]) mu_parts.push_back(static_cast<unsigned>(-p.steps[pos]));
    std::sort(mu_parts.begin(), mu_parts.end(), std::greater<unsigned>());
    w.mu = Partition(std::move(mu_parts));

    std::vector<int> h = p.heights();
    BigInt coeff = pair_factor;
    unsigned gdeg = 0;
    for (unsigned pos = 0; pos < p.steps.size(); ++pos) {
        if (p.steps[pos] != 0) continue;
        coeff *= BigInt(-h[pos]);
        gdeg += 1;
    }
    std::vector<Rational> coeffs(gdeg + 1, Rational(0));
    coeffs[gdeg] = Rational(coeff);
    w.factor = UniPoly("gamma", std::move(coeffs));
    return w;
}

RibbonWeight ribbon_weight(const RibbonPath& p) { return ribbonWeight_impl(p); }

std::map<Partition, UniPoly> product_expansion(const std::vector<unsigned>& lengths, ExpansionMode mode) {
    for (unsigned l : lengths)
        if (l < 2) fail(Errc::limit, "site lengths must be at least 2");
    unsigned total = std::accumulate(lengths.begin(), lengths.end(), 0u);
    bool restrict_touches = (mode == ExpansionMode::boolean_cumulant);
    std::vector<RibbonPath> paths = enumerate_ribbon_paths(lengths, true, restrict_touches, total);
    std::map<Partition, UniPoly> out;
    for (const RibbonPath& p : paths) {
        RibbonWeight w = ribbon_weight(p);
        out[w.mu] += w.factor;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

namespace {

// Extended lexicographic order: by size first, then lexicographically on
// the parts (larger first part earlier).
bool ext_lex_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
}

} // namespace

std::map<Partition, UniPoly> char_in_moments(const Partition& mu) {
    return char_in_moments_table(mu.size()).at(mu);
}

std::map<Partition, std::map<Partition, UniPoly>> char_in_moments_table(unsigned maxw) {
    // Partitions up to the weight bound in increasing extended-lex order.
    std::vector<Partition> order = partitions_up_to(maxw);
    std::sort(order.begin(), order.end(), ext_lex_less);

    // Forward expansions: M-monomial of rho -> sum over characters.
    std::map<Partition, std::map<Partition, UniPoly>> forward;
    for (const Partition& rho : order) {
        if (rho.empty()) {
            forward[rho] = {{Partition(), UniPoly(Rational(1))}};
            continue;
        }
        std::vector<unsigned> lengths;
        for (unsigned p : rho.parts()) lengths.push_back(p + 1);
        forward[rho] = product_expansion(lengths, ExpansionMode::moment);
        // Uni-triangularity audit.
        for (const auto& [sig, coeff] : forward[rho]) {
            if (sig == rho) {
                if (!(coeff == UniPoly(Rational(1))))
                    fail(Errc::internal_check, "transition matrix diagonal is not one");
            } else if (ext_lex_less(rho, sig)) {
                fail(Errc::internal_check, "transition matrix is not triangular");
            }
            for (const Rational& c : coeff.coeffs())
                if (!is_integer(c)) fail(Errc::internal_check, "transition entry leaves Z[gamma]");
        }
    }

    // Invert by increasing order: Ch_rho over M-monomials.
    std::map<Partition, std::map<Partition, UniPoly>> inverse;
    for (const Partition& rho : order) {
        std::map<Partition, UniPoly> expansion{{rho, UniPoly(Rational(1))}};
        for (const auto& [sig, coeff] : forward[rho]) {
            if (sig == rho) continue;
            // Subtract coeff * Ch_sig expressed over M-monomials.
            for (const auto& [mkey, mcoeff] : inverse.at(sig)) {
                expansion[mkey] -= coeff * mcoeff;
            }
        }
        for (auto it = expansion.begin(); it != expansion.end();) {
            if (it->second.is_zero()) it = expansion.erase(it);
            else ++it;
        }
        for (const auto& [mkey, c] : expansion)
            for (const Rational& q : c.coeffs())
                if (!is_integer(q)) fail(Errc::internal_check, "character-to-moment entry leaves Z[gamma]");
        inverse[rho] = std::move(expansion);
    }
    return inverse;
}

RatFunc eval_gamma_poly(const UniPoly& g) {
    RatFunc gam = gamma_value();
    RatFunc acc;
    RatFunc pow(Rational(1));
    for (std::size_t d = 0; d < g.coeffs().size(); ++d) {
        acc += pow * g.coeff(d);
        pow = pow * gam;
    }
    return acc;
}

bool ns_combi_check(const std::vector<unsigned>& lengths, const PSPoly<RatFunc>& f) {
    for (unsigned l : lengths)
        if (l < 2) fail(Errc::limit, "site lengths must be at least 2");
    unsigned total = std::accumulate(lengths.begin(), lengths.end(), 0u);
    // The general path family grows fast; keep the enumeration at desk scale.
    if (total > 8 || f.max_weight() > 6)
        fail(Errc::limit, "combinatorial expansion guard: sum of lengths <= 8 and weight <= 6");

    // Operator side: sandwiched band operators, rightmost site first.
    PSPoly<RatFunc> op_side = f;
    for (std::size_t i = lengths.size(); i-- > 0;) op_side = ns_apply(op_side, lengths[i] - 2);

    // Ribbon side.
    unsigned up_bound = f.max_weight() + total;
    std::vector<RibbonPath> paths = enumerate_ribbon_paths(lengths, false, true, up_bound);
    RatFunc s = sqrt_alpha();
    RatFunc alpha = s * s;
    RatFunc gam = gamma_value();
    PSPoly<RatFunc> ribbon_side;
    for (const RibbonPath& p : paths) {
        std::vector<bool> paired(p.steps.size(), false);
        RatFunc factor(Rational(1));
        for (const auto& [d, u] : p.pairs) {
            paired[d] = true;
            paired[u] = true;
            factor = factor * alpha * Rational(p.steps[u]);
        }
        std::vector<int> h = p.heights();
        long horizontals = 0;
        for (unsigned pos = 0; pos < p.steps.size(); ++pos) {
            if (p.steps[pos] == 0) {
                factor = factor * (-(gam * Rational(h[pos])));
                ++horizontals;
            }
        }
        factor = factor * s.pow(horizontals - static_cast<long>(total));
        // Normal-ordered monomial: derivatives for unpaired downs, then
        // multiplications for unpaired ups.
        PSPoly<RatFunc> term = f;
        for (unsigned pos = 0; pos < p.steps.size() && !term.is_zero(); ++pos) {
            if (p.steps[pos] < 0 && !paired[pos]) {
                unsigned m = static_cast<unsigned>(-p.steps[pos]);
                term = term.deriv_p(m).scaled(alpha * Rational(m));
            }
        }
        if (term.is_zero()) continue;
        for (unsigned pos = 0; pos < p.steps.size(); ++pos)
            if (p.steps[pos] > 0 && !paired[pos]) term = term.mul_p(static_cast<unsigned>(p.steps[pos]));
        ribbon_side += term.scaled(factor);
    }
    return op_side == ribbon_side;
}

} // namespace jk
