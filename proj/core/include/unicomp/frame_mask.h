#ifndef UNICOMP_FRAME_MASK_H_
#define UNICOMP_FRAME_MASK_H_

#include <cstddef>
#include <set>
#include <utility>

#include "unicomp/group.h"

namespace unicomp {

enum class MaskKind {
  // Parameters relevant for k orthonormal vectors: k(2d - k - 1) slots.
  kFrame,
  // Parameters relevant for a k-dimensional subspace: 2k(d - k) slots.
  kSubspace,
  // The (special) unitary group of span(|k+1>, ..., |d>).
  kTrailingBlock,
};

// A set of 1-based (m, n) parameter slots.
struct FrameMask {
  int d = 0;
  int k = 0;
  MaskKind kind = MaskKind::kFrame;
  std::set<std::pair<int, int>> relevant;

  bool contains(int m, int n) const { return relevant.count({m, n}) > 0; }
  std::size_t size() const { return relevant.size(); }
};

// Requires 1 <= k <= d. `group` only matters for kTrailingBlock, where
// SU(d) drops the absent (d, d) slot.
FrameMask frame_mask(int d, int k, MaskKind kind,
                     Group group = Group::kUnitary);

// Every present slot of the group.
FrameMask full_mask(int d, Group group);
FrameMask empty_mask(int d);

}  // namespace unicomp

#endif  // UNICOMP_FRAME_MASK_H_
