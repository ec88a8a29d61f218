#include "dfin/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace dfin {

namespace {

std::vector<std::vector<ItemId>> sorted_transactions(const TransactionDB& db) {
  std::vector<std::vector<ItemId>> rows;
  rows.reserve(db.size());
  for (std::size_t t = 0; t < db.size(); ++t) {
    const auto row = db.transaction(t);
    rows.emplace_back(row.begin(), row.end());
    std::sort(rows.back().begin(), rows.back().end());
  }
  return rows;
}

}  // namespace

std::uint64_t oracle_support(const TransactionDB& db, std::span<const ItemId> itemset) {
  std::vector<ItemId> wanted(itemset.begin(), itemset.end());
  std::sort(wanted.begin(), wanted.end());
  std::uint64_t count = 0;
  for (std::size_t t = 0; t < db.size(); ++t) {
    const auto row = db.transaction(t);
    const bool contains = std::all_of(wanted.begin(), wanted.end(), [&](ItemId item) {
      return std::find(row.begin(), row.end(), item) != row.end();
    });
    if (contains) ++count;
  }
  return count;
}

OracleResult oracle_mine(const TransactionDB& db, const MiningConfig& cfg) {
  const std::uint64_t threshold = resolve_threshold(cfg, db.size());
  const auto rows = sorted_transactions(db);
  OracleResult result;

  // Level 1.
  std::vector<std::uint64_t> counts(db.universe().size(), 0);
  for (const auto& row : rows) {
    for (ItemId item : row) ++counts[item];
  }
  std::vector<std::vector<ItemId>> level;
  for (ItemId item = 0; item < counts.size(); ++item) {
    if (counts[item] >= threshold) {
      level.push_back({item});
      result.itemsets.push_back({{item}, counts[item]});
    }
  }
  if (level.size() > kOracleMaxItems) {
    throw std::length_error("oracle refuses " + std::to_string(level.size()) +
                            " frequent items (limit " + std::to_string(kOracleMaxItems) + ")");
  }

  while (!level.empty()) {
    // Join itemsets sharing all but their last item, then drop candidates
    // with an infrequent k-subset.
    const std::set<std::vector<ItemId>> frequent(level.begin(), level.end());
    std::vector<std::vector<ItemId>> candidates;
    for (std::size_t a = 0; a < level.size(); ++a) {
      for (std::size_t b = a + 1; b < level.size(); ++b) {
        if (!std::equal(level[a].begin(), level[a].end() - 1, level[b].begin())) break;
        std::vector<ItemId> candidate = level[a];
        candidate.push_back(level[b].back());
        bool all_subsets_frequent = true;
        for (std::size_t skip = 0; skip + 2 < candidate.size() && all_subsets_frequent; ++skip) {
          std::vector<ItemId> subset;
          for (std::size_t i = 0; i < candidate.size(); ++i) {
            if (i != skip) subset.push_back(candidate[i]);
          }
          all_subsets_frequent = frequent.count(subset) > 0;
        }
        if (all_subsets_frequent) candidates.push_back(std::move(candidate));
      }
    }

    std::vector<std::uint64_t> support(candidates.size(), 0);
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (std::includes(row.begin(), row.end(), candidates[c].begin(), candidates[c].end())) {
          ++support[c];
        }
      }
    }

    level.clear();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (support[c] >= threshold) {
        result.itemsets.push_back({candidates[c], support[c]});
        level.push_back(std::move(candidates[c]));
      }
    }
  }

  std::sort(result.itemsets.begin(), result.itemsets.end(), canonical_less);
  return result;
}

}  // namespace dfin
