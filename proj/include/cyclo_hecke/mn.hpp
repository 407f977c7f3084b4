#pragma once

#include "cyclo_hecke/table.hpp"

namespace cyclo_hecke {

// Wreath-product class data: parts[c] lists the cycle lengths of color c.
using ClassLabel = MultiPartition;

// ct(L(first))^k times the product of (T_j)_LL over successive entries of L.
RationalFn delta_tableau(const HeckeParams& params, const StandardTableau& L, int k);
// Sum of delta_tableau over all standard tableaux of a nonempty (skew) shape.
RationalFn delta_shape_bruteforce(const HeckeParams& params, const MultiPartition& shape, int k);
// Border-strip formula; 0 <= k <= r-1 and the shape nonempty.
RationalFn delta_shape_closed(const HeckeParams& params, const MultiPartition& shape, int k);

// Sum over chains of shapes of products of delta_shape_closed. The first block may carry any
// integer exponent: it is reduced modulo prod_c (x - u_c) before evaluation.
RationalFn mn_character(const HeckeParams& params, const MultiPartition& lambda, const StandardElementSpec& spec);

// Blocks ordered by color ascending, then size descending.
StandardElementSpec class_to_standard_element(const ClassLabel& c);

CharacterTable character_table_hrn(int r, int n, int jobs = 1);

namespace testing {
// Negative control: flips the sign of the k = 0 border-strip value.
void inject_delta_sign_bug(bool on);
}  // namespace testing

}  // namespace cyclo_hecke
