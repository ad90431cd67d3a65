#ifndef DPL_TODD_COXETER_HPP
#define DPL_TODD_COXETER_HPP

#include <cstddef>
#include <vector>

namespace dpl {

/// Relator letters: generator i is 2*i, its inverse 2*i+1.
using Word = std::vector<int>;

/// Right-regular action of a finite group given by a presentation: row c,
/// column x is the element c * letter(x).  Element 0 is the identity; the
/// rest are numbered in breadth-first order over the letters.  Throws
/// BadParameter when enumeration exceeds `max_cosets`.
std::vector<std::vector<std::size_t>> enumerate_cosets(int generators, const std::vector<Word>& relators,
                                                       std::size_t max_cosets = 200000);

}  // namespace dpl

#endif  // DPL_TODD_COXETER_HPP
