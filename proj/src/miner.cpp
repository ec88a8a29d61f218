#include "dfin/miner.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "dfin/diffnodesets.hpp"
#include "dfin/ppc_tree.hpp"

namespace dfin {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void expand_subsets(std::vector<ItemId>& current, std::span<const ItemId> rest,
                    std::uint64_t support, bool nonempty, std::vector<FrequentItemset>& out) {
  if (rest.empty()) {
    if (nonempty) {
      FrequentItemset itemset{current, support};
      std::sort(itemset.items.begin(), itemset.items.end());
      out.push_back(std::move(itemset));
    }
    return;
  }
  expand_subsets(current, rest.subspan(1), support, nonempty, out);
  current.push_back(rest.front());
  expand_subsets(current, rest.subspan(1), support, true, out);
  current.pop_back();
}

}  // namespace

void expand_promotions(std::span<const ItemId> base, std::uint64_t support,
                       std::span<const ItemId> equivalent_path,
                       std::vector<FrequentItemset>& out) {
  std::vector<ItemId> extra;
  for (ItemId item : equivalent_path) {
    if (std::find(base.begin(), base.end(), item) == base.end() &&
        std::find(extra.begin(), extra.end(), item) == extra.end()) {
      extra.push_back(item);
    }
  }
  std::vector<ItemId> current(base.begin(), base.end());
  expand_subsets(current, extra, support, false, out);
}

PatternSearch::PatternSearch(const ItemOrder& order, std::uint64_t threshold, Algorithm mode,
                             bool promotion, MiningResult& out)
    : order_(order), threshold_(threshold), mode_(mode), promotion_(promotion), out_(out) {
  if (mode_ == Algorithm::oracle) {
    throw std::invalid_argument("pattern search runs in dfin or fin mode only");
  }
}

void PatternSearch::emit(std::span<const Rank> itemset, std::uint64_t support) {
  FrequentItemset result;
  result.items.reserve(itemset.size());
  for (Rank r : itemset) result.items.push_back(order_.item(r));
  std::sort(result.items.begin(), result.items.end());
  result.support = support;
  out_.itemsets.push_back(std::move(result));
}

void PatternSearch::extend_node(SearchNode& nd, std::span<const SearchNode> candidates,
                                std::span<const ItemId> equivalent_path) {
  MiningCounters& counters = out_.counters;
  ++counters.nodes_visited;
  nd.equivalent_items.clear();
  nd.child_nodes.clear();

  for (const SearchNode& sibling : candidates) {
    ++counters.candidates_tested;
    std::vector<NodeCode> structure;
    std::uint64_t support = 0;
    if (mode_ == Algorithm::dfin) {
      // DN(P) = DN(Y) \ DN(X), X = nd and Y = the sibling ending in i.
      structure = diff_subtract(sibling.structure, nd.structure);
      support = support_from_diff(nd.support, structure);
    } else {
      structure = nodeset_intersect(nd.structure, sibling.structure);
      support = nodeset_support(structure);
    }
    counters.structure_entries += structure.size();

    if (promotion_ && support == nd.support) {
      nd.equivalent_items.push_back(sibling.label);
      ++counters.promotions;
    } else if (support >= threshold_) {
      SearchNode child;
      child.label = sibling.label;
      child.itemset = nd.itemset;
      child.itemset.push_back(sibling.label);
      child.structure = std::move(structure);
      child.support = support;
      emit(child.itemset, support);
      nd.child_nodes.push_back(std::move(child));
    }
  }

  std::vector<ItemId> path(equivalent_path.begin(), equivalent_path.end());
  for (Rank r : nd.equivalent_items) path.push_back(order_.item(r));
  if (!path.empty()) {
    scratch_.clear();
    for (Rank r : nd.itemset) scratch_.push_back(order_.item(r));
    expand_promotions(scratch_, nd.support, path, out_.itemsets);
  }

  for (std::size_t i = 0; i < nd.child_nodes.size(); ++i) {
    extend_node(nd.child_nodes[i], std::span<const SearchNode>(nd.child_nodes).subspan(i + 1),
                path);
    // Later siblings only look at this child's structure before it is
    // expanded, so its subtree can go now.
    nd.child_nodes[i].child_nodes = {};
    nd.child_nodes[i].structure = {};
  }
  nd.child_nodes.clear();
}

MiningResult mine(const TransactionDB& db, const MiningConfig& cfg) {
  if (cfg.algo == Algorithm::oracle) {
    throw std::invalid_argument("mine() covers dfin and fin; use oracle_mine() for the oracle");
  }
  MiningResult result;
  result.threshold = resolve_threshold(cfg, db.size());
  const auto start = Clock::now();

  // Phase 1: frequent items and the PPC-tree.
  const ItemOrder order = scan_frequent_items(db, result.threshold);
  const PPCTree tree = construct_ppc_tree(db, order);
  result.counters.tree_nodes = tree.size();
  PatternSearch search(order, result.threshold, cfg.algo, cfg.promotion, result);
  for (Rank r = 0; r < order.size(); ++r) {
    const Rank single[] = {r};
    search.emit(single, order.support(r));
  }
  result.counters.nodes_visited += order.size();
  result.timings.build_ms = elapsed_ms(start);

  // Phase 2: item Nodesets and every frequent 2-itemset i_x i_y (i_x ≺ i_y),
  // grouped by i_x. Within a group the partners run in ≺-ascending order
  // (descending rank), which is the sibling order of the search.
  const auto pairs_start = Clock::now();
  const std::vector<ItemNodeset> item_nodesets = extract_item_nodesets(tree);
  std::vector<std::vector<SearchNode>> roots(order.size());
  for (Rank x = 0; x < order.size(); ++x) {
    for (Rank y = x; y-- > 0;) {
      ++result.counters.candidates_tested;
      std::vector<NodeCode> structure;
      std::uint64_t support = 0;
      if (cfg.algo == Algorithm::dfin) {
        structure = build_2itemset_dn(item_nodesets[x], item_nodesets[y]);
        support = support_from_diff(order.support(x), structure);
      } else {
        structure = nodeset_2itemset(item_nodesets[x], item_nodesets[y]);
        support = nodeset_support(structure);
      }
      result.counters.structure_entries += structure.size();
      if (support < result.threshold) continue;
      SearchNode node;
      node.label = y;
      node.itemset = {x, y};
      node.structure = std::move(structure);
      node.support = support;
      search.emit(node.itemset, support);
      roots[x].push_back(std::move(node));
    }
  }
  result.timings.pairs_ms = elapsed_ms(pairs_start);

  // Phase 3: one pattern tree per frequent 2-itemset.
  const auto deep_start = Clock::now();
  for (auto& group : roots) {
    for (std::size_t t = 0; t < group.size(); ++t) {
      search.extend_node(group[t], std::span<const SearchNode>(group).subspan(t + 1), {});
      group[t].structure = {};
    }
    group = {};
  }
  result.timings.deep_ms = elapsed_ms(deep_start);

  sort_canonical(result.itemsets);
  result.timings.total_ms = elapsed_ms(start);
  return result;
}

}  // namespace dfin
