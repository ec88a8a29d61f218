#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dfin/dataset.hpp"

namespace dfin {

/// A frequent itemset with its support. Items are kept id-ascending, which is
/// byte-wise token order.
struct FrequentItemset {
  std::vector<ItemId> items;
  std::uint64_t support = 0;

  friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
};

/// Canonical output order: shorter itemsets first, then lexicographic.
inline bool canonical_less(const FrequentItemset& a, const FrequentItemset& b) {
  if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
  return a.items < b.items;
}

inline void sort_canonical(std::vector<FrequentItemset>& itemsets) {
  std::sort(itemsets.begin(), itemsets.end(), canonical_less);
}

}  // namespace dfin
