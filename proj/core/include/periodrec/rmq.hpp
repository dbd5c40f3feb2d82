// Copyright 2026 The periodrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace periodrec {

// Static range-minimum structure: O(m log m) table, O(1) queries via two
// overlapping power-of-two windows.
class MinSparseTable {
 public:
  MinSparseTable() = default;

  explicit MinSparseTable(std::span<const std::uint32_t> values) : n_(values.size()) {
    if (n_ == 0) return;
    levels_ = static_cast<std::size_t>(std::bit_width(n_));
    table_.resize(levels_ * n_);
    std::copy(values.begin(), values.end(), table_.begin());
    for (std::size_t lv = 1; lv < levels_; ++lv) {
      const std::size_t half = std::size_t{1} << (lv - 1);
      const std::uint32_t* prev = &table_[(lv - 1) * n_];
      std::uint32_t* cur = &table_[lv * n_];
      for (std::size_t i = 0; i + (half << 1) <= n_; ++i)
        cur[i] = std::min(prev[i], prev[i + half]);
    }
  }

  // Minimum over the closed interval [lo, hi].
  std::uint32_t min_in(std::size_t lo, std::size_t hi) const {
    assert(lo <= hi && hi < n_);
    const std::size_t len = hi - lo + 1;
    const std::size_t lv = static_cast<std::size_t>(std::bit_width(len)) - 1;
    const std::uint32_t* row = &table_[lv * n_];
    return std::min(row[lo], row[hi + 1 - (std::size_t{1} << lv)]);
  }

  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::size_t levels_ = 0;
  std::vector<std::uint32_t> table_;  // level-major: table_[lv * n_ + i]
};

}  // namespace periodrec
