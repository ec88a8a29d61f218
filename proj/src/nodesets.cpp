#include "dfin/nodesets.hpp"

#include <cassert>

namespace dfin {

std::vector<ItemNodeset> extract_item_nodesets(const PPCTree& tree) {
  std::vector<ItemNodeset> nodesets(tree.item_count());
  for (NodeIndex i : tree.preorder()) {
    const PPCNode& node = tree.node(i);
    if (node.item != kNoRank) nodesets[node.item].push_back(node.code());
  }
  return nodesets;
}

Nodeset nodeset_2itemset(std::span<const PPCode> ns1, std::span<const PPCode> ns2) {
  Nodeset out;
  std::size_t k = 0;
  std::size_t j = 0;
  while (k < ns1.size() && j < ns2.size()) {
    const PPCode& x = ns1[k];
    const PPCode& y = ns2[j];
    if (x.post > y.post) {
      ++j;
    } else {
      if (x.pre > y.pre) out.push_back({x.pre, x.count});
      ++k;
    }
  }
  return out;
}

Nodeset nodeset_intersect(std::span<const NodeCode> a, std::span<const NodeCode> b) {
  Nodeset out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].pre < b[j].pre) {
      ++i;
    } else if (b[j].pre < a[i].pre) {
      ++j;
    } else {
      assert(a[i].count == b[j].count);
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint64_t nodeset_support(std::span<const NodeCode> ns) {
  std::uint64_t sum = 0;
  for (const NodeCode& code : ns) sum += code.count;
  return sum;
}

std::uint64_t nodeset_support(std::span<const PPCode> ns) {
  std::uint64_t sum = 0;
  for (const PPCode& code : ns) sum += code.count;
  return sum;
}

Nodeset reduce(std::span<const PPCode> ns) {
  Nodeset out;
  out.reserve(ns.size());
  for (const PPCode& code : ns) out.push_back({code.pre, code.count});
  return out;
}

}  // namespace dfin
