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

#include "jackkernel/spectral.hpp"
#include "jackkernel/unipoly.hpp"

namespace jk {

/*
 * Excursion: a lattice path with steps (1, d), d an integer, that starts
 * and ends on the axis, never goes below it, and never takes a horizontal
 * step while on the axis (no two consecutive axis points).
 */
struct Excursion {
    std::vector<int> steps;
};

// All excursions of the given length with |step degree| <= dmax,
// deterministic order (degrees chosen descending at each position).
std::vector<Excursion> enumerate_excursions(unsigned len, unsigned dmax);

/*
 * Ribbon path: a tuple of excursions (the sites) plus a set of disjoint
 * pairings.  A pairing of degree n joins a down step of degree n to a
 * later up step of degree n (global step positions, the down one first).
 */
struct RibbonPath {
    std::vector<unsigned> lengths;                     // site lengths
    std::vector<int> steps;                            // concatenated степs
    std::vector<std::pair<unsigned, unsigned>> pairs;  // (down pos, up pos)

    std::vector<int> heights() const; // height after each step
    unsigned axis_touches() const;    // number of path points on the axis
};

/*
 * Enumerates ribbon paths on sites of the given lengths.
 *  - lukasiewicz: keep only paths whose unpaired up steps all have degree 1.
 *  - require_k_touches: keep only paths with exactly one axis point per site
 *    (the concatenated path touches the axis exactly k times).
 *  - up_bound: cap on up-step degrees (forced internally for the
 *    Lukasiewicz family; explicit for the general one, where the raw path
 *    set is infinite).
 */
std::vector<RibbonPath> enumerate_ribbon_paths(const std::vector<unsigned>& lengths, bool lukasiewicz,
                                               bool require_k_touches, unsigned up_bound);

struct RibbonWeight {
    Partition mu;      // unpaired down-step degrees
    UniPoly factor;    // integer multiple of a power of gamma
};

// Weight of one path: prod n^{#pairings of degree n} * prod over horizontal
// steps at height i of (-i gamma).
RibbonWeight ribbon_weight(const RibbonPath& p);

enum class ExpansionMode { boolean_cumulant, moment };

/*
 * Character expansion of a product of Boolean cumulants (axis-touch count
 * fixed to the number of sites) or moments (no restriction): collects the
 * path weights by the partition of unpaired down degrees.  Keys stand for
 * normalized characters; values are polynomials in gamma with integer
 * coefficients.
 */
std::map<Partition, UniPoly> product_expansion(const std::vector<unsigned>& lengths, ExpansionMode mode);

/*
 * Expansion of the normalized character Ch_mu over monomials in the
 * deformed moments: key rho stands for the product of M_{rho_i + 1}.  The
 * transition from the forward moment expansions is uni-triangular in the
 * extended lexicographic order, so the inverse stays over Z[gamma]; any
 * non-integral entry is reported as internal_check.
 */
std::map<Partition, UniPoly> char_in_moments(const Partition& mu);

// Full inverse table for every |mu| <= maxw (one pass over the forward
// expansions instead of one per character).
std::map<Partition, std::map<Partition, UniPoly>> char_in_moments_table(unsigned maxw);

// Evaluates a gamma-polynomial at gamma = (1 - s^2)/s.
RatFunc eval_gamma_poly(const UniPoly& g);

/*
 * Direct combinatorial expansion of the sandwiched band operators: the
 * ribbon-path sum with general (possibly unpaired, any degree) up steps
 * applied to f must reproduce the operator composition.  Up-step degrees
 * are capped at weight(f) + sum of lengths; larger ones cannot contribute.
 */
bool ns_combi_check(const std::vector<unsigned>& lengths, const PSPoly<RatFunc>& f);

} // namespace jk
