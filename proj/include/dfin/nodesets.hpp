#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dfin/ppc_tree.hpp"

namespace dfin {

/// Reduced PP-code: pre-order plus count. Equivalent to the full triple
/// because the pre-order identifies a node.
struct NodeCode {
  std::uint32_t pre;
  std::uint32_t count;

  friend bool operator==(const NodeCode&, const NodeCode&) = default;
};

/// Nodeset of a single item: full codes of every node registering it, sorted
/// by pre-order (and therefore also by post-order).
using ItemNodeset = std::vector<PPCode>;

/// Nodeset of a k-itemset (k >= 2), sorted by pre-order.
using Nodeset = std::vector<NodeCode>;

/// Item Nodesets indexed by rank. Collected in one pre-order traversal, so
/// each list comes out sorted.
std::vector<ItemNodeset> extract_item_nodesets(const PPCTree& tree);

/// Nodeset of i1 i2 (i1 ≺ i2): the nodes of i1 that have an ancestor among
/// the nodes of i2. Linear two-pointer merge, relying on both inputs being
/// sorted by pre- and post-order.
Nodeset nodeset_2itemset(std::span<const PPCode> ns1, std::span<const PPCode> ns2);

/// Nodeset of P = P1 ∩ P2, keyed on pre-order.
Nodeset nodeset_intersect(std::span<const NodeCode> a, std::span<const NodeCode> b);

std::uint64_t nodeset_support(std::span<const NodeCode> ns);
std::uint64_t nodeset_support(std::span<const PPCode> ns);

Nodeset reduce(std::span<const PPCode> ns);

}  // namespace dfin
