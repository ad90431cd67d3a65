#ifndef DPL_SURGERY_HPP
#define DPL_SURGERY_HPP

#include <cstdint>

namespace dpl {

struct SurgeryParity {
  bool orientable_only_feasible = false;
  std::int64_t min_nonorientable = 0;
};

/// Orientable surgeries change the circle count by exactly one; a
/// non-orientable band move leaves it unchanged.  Throws BadParameter on
/// counts below 1 or negative n, Infeasible when n < |c_out - c_in|.
SurgeryParity surgery_parity(std::int64_t c_in, std::int64_t c_out, std::int64_t n);

}  // namespace dpl

#endif  // DPL_SURGERY_HPP
