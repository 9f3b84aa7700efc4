#pragma once

#include <span>

#include "gbinom/exactnum.hpp"

namespace gbinom {

// Index of the last nonzero term of a terminating series: the smallest
// |a| over numerator parameters that are nonpositive integers. Throws
// unsupported_error when no such parameter exists.
long termination_index(std::span<const BigRat> numerator);

// Exact value of pFq[numerator; denominator; z] for a terminating parameter
// set, sum_{j=0}^{N} prod (a_i)_j / prod (b_i)_j * z^j / j!.
// Throws unsupported_error for a non-terminating set and pole_error when a
// denominator Pochhammer vanishes for some j <= N.
BigRat hypergeom_terminating(std::span<const BigRat> numerator, std::span<const BigRat> denominator,
                             const BigRat& z);

} // namespace gbinom
