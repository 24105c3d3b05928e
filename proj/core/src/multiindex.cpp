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

#include "wrgw/multiindex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wrgw {

MultiIndex::MultiIndex(std::vector<int> entries, int ambient)
    : entries_(std::move(entries)), ambient_(ambient) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 1 || entries_[i] > ambient_)
            throw std::out_of_range("MultiIndex: entry out of [1, ambient]");
        if (i > 0 && entries_[i] <= entries_[i - 1])
            throw std::invalid_argument("MultiIndex: entries must strictly increase");
    }
}

bool MultiIndex::operator==(const MultiIndex& o) const {
    return ambient_ == o.ambient_ && entries_ == o.entries_;
}

bool MultiIndex::operator<(const MultiIndex& o) const {
    return entries_ < o.entries_;
}

MultiIndex MultiIndex::complement() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(ambient_) - entries_.size());
    std::size_t k = 0;
    for (int c = 1; c <= ambient_; ++c) {
        if (k < entries_.size() && entries_[k] == c) { ++k; continue; }
        out.push_back(c);
    }
    return MultiIndex(std::move(out), ambient_);
}

MultiIndex MultiIndex::dual() const {
    MultiIndex comp = complement();
    std::vector<int> out;
    out.reserve(comp.length());
    for (int c : comp.entries()) out.push_back(ambient_ + 1 - c);
    std::sort(out.begin(), out.end());
    return MultiIndex(std::move(out), ambient_);
}

int MultiIndex::duality_sign() const {
    long sum = 0;
    for (int c : entries_) sum += c;
    return (sum % 2 == 0) ? 1 : -1;
}

std::vector<std::size_t> MultiIndex::zero_based() const {
    std::vector<std::size_t> out;
    out.reserve(entries_.size());
    for (int c : entries_) out.push_back(static_cast<std::size_t>(c - 1));
    return out;
}

std::string MultiIndex::str() const {
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s << ",";
        s << entries_[i];
    }
    s << ")";
    return s.str();
}

std::vector<MultiIndex> MultiIndex::all(int n, int k) {
    std::vector<MultiIndex> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(cur, n);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

MultiIndex distinguished_multiindex(int gamma, int k, int m, int p) {
    if (gamma < 1 || gamma > m) throw std::out_of_range("distinguished_multiindex: gamma");
    if (k < 1 || k > p) throw std::out_of_range("distinguished_multiindex: k");
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(m));
    e.push_back(k);
    for (int a = 1; a <= m; ++a)
        if (a != gamma) e.push_back(p + a);
    return MultiIndex(std::move(e), m + p);
}

} // namespace wrgw
