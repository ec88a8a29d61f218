#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dfin/nodesets.hpp"

namespace dfin {

/// Difference representation of an itemset: the (pre-order, count) codes
/// that the itemset loses relative to its generating prefix, sorted by
/// pre-order.
using DiffNodeset = std::vector<NodeCode>;

/// DiffNodeset of i_x i_y (i_x ≺ i_y): the nodes of i_x with no ancestor
/// among the nodes of i_y.
///
/// Both inputs must be item Nodesets from one tree, so they are sorted by
/// pre-order and by post-order. The merge has three cases per step: a node
/// of i_y whose post-order is below the current i_x node can be an ancestor
/// of neither it nor anything after it and is skipped; an i_y node that is an
/// ancestor drops the i_x node; otherwise the i_x node can have no ancestor
/// further along i_y and is emitted. Whatever is left of i_x once i_y runs
/// out is emitted as well.
///
/// Each loop iteration advances one cursor, so the loop runs at most
/// |ns_x| + |ns_y| times. When `iterations` is non-null the count is added to
/// it.
DiffNodeset build_2itemset_dn(std::span<const PPCode> ns_x, std::span<const PPCode> ns_y,
                              std::uint64_t* iterations = nullptr);

/// DiffNodeset of P = i1..i(k-2) i(k-1) i(k) from the DiffNodesets of its two
/// generators: DN(P) = DN(P2) \ DN(P1), with P1 ending in i(k-1) and P2 in
/// i(k). Pre-order is the merge key; equal keys name the same node.
DiffNodeset diff_subtract(std::span<const NodeCode> dn2, std::span<const NodeCode> dn1);

/// support(P) = support(P1) - sum of counts in DN(P). Throws std::logic_error
/// if the subtraction would go negative, which only a corrupted DiffNodeset
/// can cause.
std::uint64_t support_from_diff(std::uint64_t parent_support, std::span<const NodeCode> dn);

}  // namespace dfin
