#include "dfin/stats.hpp"

#include <span>
#include <vector>

#include "dfin/diffnodesets.hpp"
#include "dfin/nodesets.hpp"
#include "dfin/ppc_tree.hpp"

namespace dfin {

namespace {

struct Measured {
  Rank label;
  Nodeset ns;
  DiffNodeset dn;
  std::uint64_t support;
};

struct Totals {
  std::uint64_t dn = 0;
  std::uint64_t ns = 0;
  std::uint64_t first_item_ns = 0;
  std::uint64_t count = 0;
};

class StatsWalk {
 public:
  StatsWalk(std::uint64_t threshold, const std::vector<ItemNodeset>& item_nodesets)
      : threshold_(threshold), item_nodesets_(item_nodesets) {}

  void record(std::size_t length, Rank first_item, const Measured& m) {
    auto& bucket = per_length_[length];
    bucket.dn += m.dn.size();
    bucket.ns += m.ns.size();
    bucket.first_item_ns += item_nodesets_[first_item].size();
    ++bucket.count;
  }

  void walk(const Measured& node, std::span<const Measured> siblings, std::size_t length,
            Rank first_item) {
    std::vector<Measured> children;
    for (const Measured& sibling : siblings) {
      Measured child{sibling.label, nodeset_intersect(node.ns, sibling.ns),
                     diff_subtract(sibling.dn, node.dn), 0};
      child.support = support_from_diff(node.support, child.dn);
      if (child.support < threshold_) continue;
      record(length + 1, first_item, child);
      children.push_back(std::move(child));
    }
    for (std::size_t i = 0; i < children.size(); ++i) {
      walk(children[i], std::span<const Measured>(children).subspan(i + 1), length + 1,
           first_item);
    }
  }

  const std::map<std::size_t, Totals>& per_length() const { return per_length_; }

 private:
  std::uint64_t threshold_;
  const std::vector<ItemNodeset>& item_nodesets_;
  std::map<std::size_t, Totals> per_length_;
};

}  // namespace

StatsReport compute_stats(const TransactionDB& db, const MiningConfig& cfg) {
  StatsReport report;
  report.threshold = resolve_threshold(cfg, db.size());
  const ItemOrder order = scan_frequent_items(db, report.threshold);
  const PPCTree tree = construct_ppc_tree(db, order);
  const std::vector<ItemNodeset> item_nodesets = extract_item_nodesets(tree);

  StatsWalk walk(report.threshold, item_nodesets);
  for (Rank x = 0; x < order.size(); ++x) {
    std::vector<Measured> pairs;
    for (Rank y = x; y-- > 0;) {
      Measured pair{y, nodeset_2itemset(item_nodesets[x], item_nodesets[y]),
                    build_2itemset_dn(item_nodesets[x], item_nodesets[y]), 0};
      pair.support = support_from_diff(order.support(x), pair.dn);
      if (pair.support < report.threshold) continue;
      walk.record(2, x, pair);
      pairs.push_back(std::move(pair));
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      walk.walk(pairs[i], std::span<const Measured>(pairs).subspan(i + 1), 2, x);
    }
  }

  Totals all;
  for (const auto& [length, totals] : walk.per_length()) {
    all.dn += totals.dn;
    all.ns += totals.ns;
    all.first_item_ns += totals.first_item_ns;
    all.count += totals.count;
    const auto n = static_cast<double>(totals.count);
    report.per_length[length] = {static_cast<double>(totals.dn) / n,
                                 static_cast<double>(totals.ns) / n, totals.count};
  }
  report.itemset_count = all.count;
  if (all.count > 0) {
    const auto n = static_cast<double>(all.count);
    report.avg_diffnodeset_len = static_cast<double>(all.dn) / n;
    report.avg_nodeset_len = static_cast<double>(all.ns) / n;
    report.avg_first_item_nodeset_len = static_cast<double>(all.first_item_ns) / n;
  }
  if (report.avg_diffnodeset_len > 0) {
    report.reduction_ratio = report.avg_nodeset_len / report.avg_diffnodeset_len;
  }
  return report;
}

}  // namespace dfin
