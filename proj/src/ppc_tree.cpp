#include "dfin/ppc_tree.hpp"

#include <ostream>
#include <stdexcept>

namespace dfin {

void PPCTree::insert(std::span<const Rank> path) {
  NodeIndex current = 0;
  for (Rank item : path) {
    NodeIndex child = nodes_[current].first_child;
    NodeIndex last = kNoNode;
    while (child != kNoNode && nodes_[child].item != item) {
      last = child;
      child = nodes_[child].next_sibling;
    }
    if (child == kNoNode) {
      if (nodes_.size() >= kNoNode) throw std::length_error("PPC-tree node count overflow");
      child = static_cast<NodeIndex>(nodes_.size());
      PPCNode fresh;
      fresh.item = item;
      fresh.parent = current;
      nodes_.push_back(fresh);
      if (last == kNoNode) {
        nodes_[current].first_child = child;
      } else {
        nodes_[last].next_sibling = child;
      }
    }
    ++nodes_[child].count;
    current = child;
  }
  ++nodes_[0].count;
}

void PPCTree::number() {
  std::uint32_t pre = 1;
  std::uint32_t post = 1;
  // Iterative DFS: a node is pre-numbered on entry and post-numbered once
  // all of its children are done.
  NodeIndex current = 0;
  nodes_[0].pre = pre++;
  while (current != kNoNode) {
    PPCNode& node = nodes_[current];
    if (node.first_child != kNoNode) {
      current = node.first_child;
      nodes_[current].pre = pre++;
      continue;
    }
    // Leaf: climb until a node with an unvisited sibling appears.
    while (current != kNoNode) {
      nodes_[current].post = post++;
      const NodeIndex sibling = nodes_[current].next_sibling;
      if (sibling != kNoNode) {
        current = sibling;
        nodes_[current].pre = pre++;
        break;
      }
      current = nodes_[current].parent;
    }
    if (current == kNoNode) break;
  }
}

std::vector<NodeIndex> PPCTree::preorder() const {
  std::vector<NodeIndex> order(nodes_.size());
  for (NodeIndex i = 0; i < nodes_.size(); ++i) order[nodes_[i].pre - 1] = i;
  return order;
}

PPCTree construct_ppc_tree(const TransactionDB& db, const ItemOrder& order) {
  PPCTree tree;
  tree.item_count_ = order.size();
  std::vector<Rank> path;
  for (std::size_t t = 0; t < db.size(); ++t) {
    filter_and_sort(db.transaction(t), order, path);
    if (!path.empty()) tree.insert(path);
  }
  tree.number();
  return tree;
}

void dump_tree(std::ostream& out, const PPCTree& tree, const ItemOrder& order,
               const TransactionDB& db) {
  for (NodeIndex i : tree.preorder()) {
    const PPCNode& node = tree.node(i);
    std::size_t depth = 0;
    for (NodeIndex p = node.parent; p != kNoNode; p = tree.node(p).parent) ++depth;
    out << std::string(2 * depth, ' ')
        << (node.item == kNoRank ? std::string("null") : db.token(order.item(node.item))) << ' '
        << node.pre << ':' << node.post << ':' << node.count << '\n';
  }
}

}  // namespace dfin
