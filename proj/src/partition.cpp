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
#include "jackkernel/partition.hpp"

#include <algorithm>
#include <sstream>

#include "jackkernel/errors.hpp"

namespace jk {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) fail(Errc::parse, "partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i]) fail(Errc::parse, "partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

unsigned Partition::multiplicity(unsigned part_size) const {
    unsigned m = 0;
    for (unsigned p : parts_) m += (p == part_size) ? 1 : 0;
    return m;
}

std::vector<unsigned> Partition::multiplicities() const {
    std::vector<unsigned> m(parts_.empty() ? 0 : parts_.front(), 0);
    for (unsigned p : parts_) m[p - 1] += 1;
    return m;
}

BigInt Partition::z() const {
    BigInt r(1);
    std::vector<unsigned> m = multiplicities();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        r *= factorial(m[i]);
        BigInt base(i + 1);
        for (unsigned j = 0; j < m[i]; ++j) r *= base;
    }
    return r;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<unsigned> c(parts_.front(), 0);
    for (unsigned p : parts_)
        for (unsigned j = 0; j < p; ++j) c[j] += 1;
    return Partition(std::move(c));
}

Partition Partition::with_part(unsigned p) const {
    if (p == 0) fail(Errc::internal_check, "cannot insert a zero part");
    std::vector<unsigned> v = parts_;
    v.insert(std::upper_bound(v.begin(), v.end(), p, std::greater<unsigned>()), p);
    return Partition(std::move(v));
}

Partition Partition::without_part(unsigned p) const {
    std::vector<unsigned> v = parts_;
    auto it = std::find(v.begin(), v.end(), p);
    if (it == v.end()) fail(Errc::internal_check, "partition does not contain the requested part");
    v.erase(it);
    return Partition(std::move(v));
}

Partition Partition::without_largest() const {
    if (parts_.empty()) fail(Errc::internal_check, "empty partition has no largest part");
    return Partition(std::vector<unsigned>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::with_ones(unsigned m) const {
    std::vector<unsigned> v = parts_;
    v.insert(v.end(), m, 1u);
    return Partition(std::move(v));
}

bool Partition::operator<(const Partition& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    return parts_ > o.parts_;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) fail(Errc::parse, "empty component in partition '" + text + "'");
        for (char ch : tok)
            if (ch < '0' || ch > '9') fail(Errc::parse, "malformed partition '" + text + "'");
        unsigned long v = std::stoul(tok);
        if (v == 0) fail(Errc::parse, "partition parts must be positive in '" + text + "'");
        parts.push_back(static_cast<unsigned>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size()) fail(Errc::parse, "trailing comma in partition '" + text + "'");
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i]) fail(Errc::parse, "partition parts must be weakly decreasing in '" + text + "'");
    return Partition(std::move(parts));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) return false;
    unsigned pm = 0, pl = 0;
    std::size_t n = std::max(mu.length(), lambda.length());
    for (std::size_t i = 0; i < n; ++i) {
        pm += mu.part(i);
        pl += lambda.part(i);
        if (pm > pl) return false;
    }
    return true;
}

namespace {
void gen_partitions(unsigned n, unsigned max_part, std::vector<unsigned>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (unsigned p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

std::vector<Partition> partitions_up_to(unsigned n) {
    std::vector<Partition> out;
    for (unsigned m = 0; m <= n; ++m) {
        std::vector<Partition> p = partitions_of(m);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

} // namespace jk
