#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

#include "dfin/dataset.hpp"

namespace dfin {

struct LengthStats {
  double mean_diffnodeset_len = 0;
  double mean_nodeset_len = 0;
  std::uint64_t itemset_count = 0;

  friend bool operator==(const LengthStats&, const LengthStats&) = default;
};

/// Average DiffNodeset and Nodeset cardinality over all frequent itemsets of
/// length >= 2.
struct StatsReport {
  std::uint64_t threshold = 0;
  std::uint64_t itemset_count = 0;
  double avg_diffnodeset_len = 0;
  double avg_nodeset_len = 0;
  /// Mean Nodeset length of each itemset's first (least frequent) item.
  double avg_first_item_nodeset_len = 0;
  /// avg_nodeset_len / avg_diffnodeset_len; empty when the denominator is 0.
  std::optional<double> reduction_ratio;
  std::map<std::size_t, LengthStats> per_length;

  friend bool operator==(const StatsReport&, const StatsReport&) = default;
};

/// Enumerates every frequent itemset of length >= 2 without promotion,
/// building both its Nodeset and its DiffNodeset, and averages their sizes.
StatsReport compute_stats(const TransactionDB& db, const MiningConfig& cfg);

}  // namespace dfin
