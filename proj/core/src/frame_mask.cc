#include "unicomp/frame_mask.h"

#include <string>

#include "unicomp/error.h"

namespace unicomp {

FrameMask frame_mask(int d, int k, MaskKind kind, Group group) {
  if (d < 1 || k < 1 || k > d) {
    throw Error(ErrorCode::kInvalidArgument,
                "frame size k=" + std::to_string(k) + " outside 1.." +
                    std::to_string(d));
  }
  FrameMask mask{d, k, kind, {}};
  switch (kind) {
    case MaskKind::kFrame:
      // Rotations in the first k rows and the phases below them.
      for (int m = 1; m <= k; ++m) {
        for (int n = m + 1; n <= d; ++n) {
          mask.relevant.insert({m, n});
          mask.relevant.insert({n, m});
        }
      }
      break;
    case MaskKind::kSubspace:
      for (int m = 1; m <= k; ++m) {
        for (int n = k + 1; n <= d; ++n) {
          mask.relevant.insert({m, n});
          mask.relevant.insert({n, m});
        }
      }
      break;
    case MaskKind::kTrailingBlock:
      for (int m = k + 1; m <= d; ++m) {
        for (int n = k + 1; n <= d; ++n) {
          if (param_role(m, n, d, group) == ParamRole::kAbsent) continue;
          mask.relevant.insert({m, n});
        }
      }
      break;
  }
  return mask;
}

FrameMask full_mask(int d, Group group) {
  FrameMask mask = frame_mask(d, 1, MaskKind::kFrame, group);
  for (int m = 1; m <= d; ++m) {
    for (int n = 1; n <= d; ++n) {
      if (param_role(m, n, d, group) == ParamRole::kAbsent) continue;
      mask.relevant.insert({m, n});
    }
  }
  mask.k = d;
  return mask;
}

FrameMask empty_mask(int d) {
  FrameMask mask;
  mask.d = d;
  mask.k = 0;
  return mask;
}

}  // namespace unicomp
