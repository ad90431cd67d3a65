#include "dpl/surgery.hpp"

#include "dpl/error.hpp"

#include <string>

namespace dpl {

SurgeryParity surgery_parity(std::int64_t c_in, std::int64_t c_out, std::int64_t n) {
  if (c_in < 1 || c_out < 1 || n < 0) {
    throw Error(ErrorKind::BadParameter, "circle counts must be positive and the surgery count non-negative");
  }
  const std::int64_t delta = c_out - c_in;
  const std::int64_t gap = delta < 0 ? -delta : delta;
  if (n < gap) {
    throw Error(ErrorKind::Infeasible, std::to_string(n) + " surgeries cannot change " + std::to_string(c_in) +
                                           " circles into " + std::to_string(c_out));
  }
  SurgeryParity r;
  r.orientable_only_feasible = (n - gap) % 2 == 0;
  r.min_nonorientable = r.orientable_only_feasible ? 0 : 1;
  return r;
}

}  // namespace dpl
