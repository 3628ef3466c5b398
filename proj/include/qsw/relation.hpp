#pragma once

#include "qsw/series.hpp"

#include <vector>

namespace qsw {

/* Exact kernel basis of the linear map (lambda_1..lambda_s) ->
 * sum_i lambda_i F_i truncated at order N: every returned vector
 * annihilates the inputs through q^N.  Coefficient matrices are cleared
 * of denominators row-wise and reduced by fraction-free (Bareiss)
 * elimination, so no pivot is ever lost to rounding.  Eisenstein inputs
 * contribute their 1- and w-components as separate rows.  Vectors are
 * normalized to coprime integers with positive leading entry.  An empty
 * result means no constant-coefficient relation exists to this order. */
std::vector<std::vector<Rational>> find_relation(const std::vector<Series>& fs,
                                                 long N);

} // namespace qsw
