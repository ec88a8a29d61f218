#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "dfin/dataset.hpp"

namespace dfin {

using NodeIndex = std::uint32_t;
inline constexpr NodeIndex kNoNode = std::numeric_limits<NodeIndex>::max();

/// (pre-order, post-order, count) code of a tree node. Pre-order alone
/// identifies the node; the post-order is kept for ancestor tests.
struct PPCode {
  std::uint32_t pre;
  std::uint32_t post;
  std::uint32_t count;

  friend bool operator==(const PPCode&, const PPCode&) = default;
};

/// N1 is an ancestor of N2 iff N1.pre < N2.pre and N1.post > N2.post.
/// A code is never its own ancestor.
constexpr bool is_ancestor(const PPCode& a, const PPCode& b) {
  return a.pre < b.pre && a.post > b.post;
}

struct PPCNode {
  Rank item = kNoRank;  // kNoRank on the root
  std::uint32_t count = 0;
  NodeIndex parent = kNoNode;
  NodeIndex first_child = kNoNode;
  NodeIndex next_sibling = kNoNode;
  std::uint32_t pre = 0;
  std::uint32_t post = 0;

  PPCode code() const { return {pre, post, count}; }
};

/// Prefix tree over frequency-sorted transactions with every node numbered by
/// a pre-order and a post-order traversal (both starting at 1, root included).
///
/// Nodes are stored in creation order; index 0 is the root. Children are kept
/// in creation order, which is also the visiting order used for numbering.
class PPCTree {
 public:
  PPCTree() : nodes_(1) {}

  const PPCNode& root() const { return nodes_.front(); }
  const PPCNode& node(NodeIndex i) const { return nodes_[i]; }
  std::span<const PPCNode> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  /// Number of frequent items the tree was built for.
  std::size_t item_count() const { return item_count_; }

  /// Node indices in pre-order.
  std::vector<NodeIndex> preorder() const;

 private:
  friend PPCTree construct_ppc_tree(const TransactionDB&, const ItemOrder&);

  void insert(std::span<const Rank> path);
  void number();

  std::vector<PPCNode> nodes_;
  std::size_t item_count_ = 0;
};

/// Inserts every transaction (infrequent items removed, frequency-sorted) and
/// then numbers the nodes. Transactions left empty are skipped.
PPCTree construct_ppc_tree(const TransactionDB& db, const ItemOrder& order);

/// One line per node in pre-order: two spaces of indent per depth, the item
/// token ("null" for the root) and "pre:post:count".
void dump_tree(std::ostream& out, const PPCTree& tree, const ItemOrder& order,
               const TransactionDB& db);

}  // namespace dfin
