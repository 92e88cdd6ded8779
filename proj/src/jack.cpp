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
#include "jackkernel/jack.hpp"

#include <numeric>

namespace jk {

namespace {

using Perm = std::vector<unsigned>;

// All permutations fixing each block of the given set partition of 0..n-1.
std::vector<Perm> block_stabilizer(unsigned n, const std::vector<std::vector<unsigned>>& blocks) {
    std::vector<Perm> out{Perm(n)};
    std::iota(out[0].begin(), out[0].end(), 0u);
    for (const auto& block : blocks) {
        std::vector<unsigned> images = block;
        std::sort(images.begin(), images.end());
        std::vector<Perm> next;
        do {
            for (const Perm& base : out) {
                Perm p = base;
                for (std::size_t i = 0; i < block.size(); ++i) p[block[i]] = images[i];
                next.push_back(std::move(p));
            }
        } while (std::next_permutation(images.begin(), images.end()));
        out = std::move(next);
    }
    return out;
}

Partition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<unsigned> cyc;
    for (unsigned i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        cyc.push_back(len);
    }
    std::sort(cyc.begin(), cyc.end(), std::greater<unsigned>());
    return Partition(std::move(cyc));
}

} // namespace

PSPoly<Rational> young_alpha_one(const Partition& lam, unsigned guard) {
    unsigned n = lam.size();
    if (n > guard)
        fail(Errc::limit, "partition size " + std::to_string(n) + " exceeds the oracle guard " +
                              std::to_string(guard));
    if (n == 0) return PSPoly<Rational>::one(Rational(1));

    // Standard filling: row i holds consecutive numbers.
    std::vector<std::vector<unsigned>> rows(lam.length());
    unsigned next = 0;
    for (unsigned i = 0; i < lam.length(); ++i)
        for (unsigned j = 0; j < lam.parts()[i]; ++j) rows[i].push_back(next++);
    std::vector<std::vector<unsigned>> cols(lam.parts().empty() ? 0 : lam.parts().front());
    for (unsigned i = 0; i < lam.length(); ++i)
        for (unsigned j = 0; j < lam.parts()[i]; ++j) cols[j].push_back(rows[i][j]);

    std::vector<Perm> row_stab = block_stabilizer(n, rows);
    std::vector<Perm> col_stab = block_stabilizer(n, cols);

    PSPoly<Rational> out;
    for (const Perm& sc : col_stab) {
        // Permutation sign: (-1)^(n - number of cycles).
        unsigned cycles = cycle_type(sc).length();
        Rational sign((n - cycles) % 2 == 0 ? 1 : -1);
        for (const Perm& sr : row_stab) {
            Perm prod(n);
            for (unsigned i = 0; i < n; ++i) prod[i] = sc[sr[i]];
            out.add(cycle_type(prod), sign);
        }
    }
    return out;
}

} // namespace jk
