#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dfin/dataset.hpp"
#include "dfin/itemset.hpp"

namespace dfin {

// Brute-force reference. Deliberately independent of the tree and node-set
// machinery: it only reads transactions.

struct OracleResult {
  std::vector<FrequentItemset> itemsets;  // canonical order
};

/// Largest number of frequent items oracle_mine accepts.
inline constexpr std::size_t kOracleMaxItems = 24;

/// Number of transactions containing every item of `itemset` (full scan).
std::uint64_t oracle_support(const TransactionDB& db, std::span<const ItemId> itemset);

/// Level-wise candidate generation with full-scan counting. Throws
/// std::length_error when more than kOracleMaxItems items are frequent.
OracleResult oracle_mine(const TransactionDB& db, const MiningConfig& cfg);

}  // namespace dfin
