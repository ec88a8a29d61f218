#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dfin/dataset.hpp"
#include "dfin/itemset.hpp"
#include "dfin/nodesets.hpp"

namespace dfin {

struct MiningCounters {
  std::uint64_t nodes_visited = 0;      // frequent items plus every expanded search node
  std::uint64_t candidates_tested = 0;  // structures built, pairs included
  std::uint64_t promotions = 0;
  std::uint64_t structure_entries = 0;  // DiffNodeset (or Nodeset) entries allocated
  std::uint64_t tree_nodes = 0;
};

struct PhaseTimings {
  double build_ms = 0;  // item order, PPC-tree, 1-itemsets
  double pairs_ms = 0;  // item Nodesets and frequent 2-itemsets
  double deep_ms = 0;   // pattern-tree search for k >= 3
  double total_ms = 0;
};

struct MiningResult {
  std::vector<FrequentItemset> itemsets;  // canonical order
  std::uint64_t threshold = 0;
  MiningCounters counters;
  PhaseTimings timings;
};

/// Mines every frequent itemset with the DiffNodeset search (Algorithm::dfin)
/// or the same search over Nodeset intersections (Algorithm::fin).
/// Algorithm::oracle is rejected with std::invalid_argument; see oracle.hpp.
MiningResult mine(const TransactionDB& db, const MiningConfig& cfg);

/// Node of the set-enumeration tree. `itemset` holds ranks in ≺-ascending
/// order (least frequent first) and ends with `label`. `structure` is the
/// DiffNodeset in dfin mode and the Nodeset in fin mode.
struct SearchNode {
  Rank label = kNoRank;
  std::vector<Rank> itemset;
  std::vector<NodeCode> structure;
  std::uint64_t support = 0;
  std::vector<Rank> equivalent_items;
  std::vector<SearchNode> child_nodes;
};

/// The recursive pattern-tree search shared by both structure modes.
class PatternSearch {
 public:
  PatternSearch(const ItemOrder& order, std::uint64_t threshold, Algorithm mode,
                bool promotion, MiningResult& out);

  /// Tests every candidate sibling i (all ≻ nd.label) for P = nd.itemset ∪ {i}.
  /// The sibling carries the structure of (nd.itemset minus its last item)
  /// ∪ {i}, which with nd's own structure determines P's. Candidates whose
  /// extension keeps nd's support are promoted into nd.equivalent_items;
  /// other frequent ones become children and are emitted. Then every
  /// promotion-expanded itemset of nd is emitted and each child is searched
  /// with the children after it as its candidates.
  ///
  /// `equivalent_path` holds the items promoted on the way down to nd.
  void extend_node(SearchNode& nd, std::span<const SearchNode> candidates,
                   std::span<const ItemId> equivalent_path);

  /// Emits a frequent itemset given by ranks.
  void emit(std::span<const Rank> itemset, std::uint64_t support);

 private:
  const ItemOrder& order_;
  std::uint64_t threshold_;
  Algorithm mode_;
  bool promotion_;
  MiningResult& out_;
  std::vector<ItemId> scratch_;
};

/// Emits base ∪ S at `support` for every non-empty S drawn from
/// `equivalent_path` (items already in `base` are ignored). Items of each
/// emitted itemset are sorted.
void expand_promotions(std::span<const ItemId> base, std::uint64_t support,
                       std::span<const ItemId> equivalent_path,
                       std::vector<FrequentItemset>& out);

}  // namespace dfin
