#include "dfin/diffnodesets.hpp"

#include <cassert>
#include <stdexcept>

namespace dfin {

DiffNodeset build_2itemset_dn(std::span<const PPCode> ns_x, std::span<const PPCode> ns_y,
                              std::uint64_t* iterations) {
  DiffNodeset out;
  std::size_t k = 0;
  std::size_t j = 0;
  std::uint64_t steps = 0;
  while (k < ns_x.size() && j < ns_y.size()) {
    ++steps;
    const PPCode& x = ns_x[k];
    const PPCode& y = ns_y[j];
    if (x.post > y.post) {
      ++j;
    } else if (x.pre > y.pre) {
      // y is an ancestor of x.
      ++k;
    } else {
      out.push_back({x.pre, x.count});
      ++k;
    }
  }
  for (; k < ns_x.size(); ++k) out.push_back({ns_x[k].pre, ns_x[k].count});
  if (iterations != nullptr) *iterations += steps;
  return out;
}

DiffNodeset diff_subtract(std::span<const NodeCode> dn2, std::span<const NodeCode> dn1) {
  DiffNodeset out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < dn2.size() && j < dn1.size()) {
    if (dn2[i].pre < dn1[j].pre) {
      out.push_back(dn2[i++]);
    } else if (dn1[j].pre < dn2[i].pre) {
      ++j;
    } else {
      assert(dn2[i].count == dn1[j].count);
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), dn2.begin() + static_cast<std::ptrdiff_t>(i), dn2.end());
  return out;
}

std::uint64_t support_from_diff(std::uint64_t parent_support, std::span<const NodeCode> dn) {
  const std::uint64_t removed = nodeset_support(dn);
  if (removed > parent_support) {
    throw std::logic_error("DiffNodeset removes more support than its parent has");
  }
  return parent_support - removed;
}

}  // namespace dfin
