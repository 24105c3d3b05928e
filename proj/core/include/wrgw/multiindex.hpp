/*
   Copyright 2026 The wrgw authors

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

#ifndef WRGW_MULTIINDEX_HPP
#define WRGW_MULTIINDEX_HPP

#include <string>
#include <vector>

namespace wrgw {

/// Strictly increasing sequence of 1-based column indices in [1, ambient].
class MultiIndex {
public:
    MultiIndex(std::vector<int> entries, int ambient);

    [[nodiscard]] const std::vector<int>& entries() const { return entries_; }
    [[nodiscard]] int ambient() const { return ambient_; }
    [[nodiscard]] std::size_t length() const { return entries_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return entries_[i]; }

    bool operator==(const MultiIndex& o) const;
    bool operator<(const MultiIndex& o) const;

    /// Complement inside (1, ..., ambient), increasing.
    [[nodiscard]] MultiIndex complement() const;

    /// Dual multiindex: entries ambient+1 - c for c in the complement,
    /// sorted increasing. An involution binom([n],m) -> binom([n],p).
    [[nodiscard]] MultiIndex dual() const;

    /// (-1)^{sum of entries}; the sign relating Plucker coordinates of a
    /// covector plane to those of the plane it annihilates.
    [[nodiscard]] int duality_sign() const;

    /// 0-based column positions, for matrix minors.
    [[nodiscard]] std::vector<std::size_t> zero_based() const;

    [[nodiscard]] std::string str() const;

    /// All length-k multiindices in [1, n], lexicographic.
    static std::vector<MultiIndex> all(int n, int k);

private:
    std::vector<int> entries_;
    int ambient_;
};

/// The distinguished multiindex alpha(gamma, k) = (k, p+1, ..., p+gamma-1,
/// p+gamma+1, ..., p+m) of length m in [1, m+p]; 1 <= gamma <= m, 1 <= k <= p.
[[nodiscard]] MultiIndex distinguished_multiindex(int gamma, int k, int m, int p);

} // namespace wrgw

#endif
