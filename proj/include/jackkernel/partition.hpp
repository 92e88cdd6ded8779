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

#include <string>
#include <vector>

#include "jackkernel/rational.hpp"

namespace jk {

// Integer partition: weakly decreasing positive parts.  The empty partition
// is the default value.  Total order: by size, then parts lexicographically
// descending, which makes [n] the first partition of each weight.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);
    static Partition of(std::initializer_list<unsigned> parts) { return Partition(std::vector<unsigned>(parts)); }

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    unsigned size() const { return size_; }
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    unsigned multiplicity(unsigned part_size) const;
    std::vector<unsigned> multiplicities() const; // index i-1 = m_i, up to the largest part
    BigInt z() const;                             // prod m_i! * i^{m_i}
    Partition conjugate() const;

    // Partition with one copy of the given part inserted / removed.
    Partition with_part(unsigned p) const;
    Partition without_part(unsigned p) const;
    Partition without_largest() const;
    // mu united with m extra parts equal to 1.
    Partition with_ones(unsigned m) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const;

    std::string to_string() const; // "2,1"; empty partition renders as ""

    // Grammar: comma-separated positive integers, weakly decreasing;
    // the empty string denotes the empty partition.
    static Partition parse(const std::string& text);

private:
    std::vector<unsigned> parts_;
    unsigned size_ = 0;
};

// Dominance order: |mu| = |lambda| and every prefix sum of mu is <= that of
// lambda.  Returns false when the sizes differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

std::vector<Partition> partitions_of(unsigned n);
std::vector<Partition> partitions_up_to(unsigned n); // sizes 0..n, canonical order

} // namespace jk
