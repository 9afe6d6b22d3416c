#pragma once

#include "finann/abelian.hpp"
#include "finann/int_matrix.hpp"

namespace finann {

/// U * A * V = D with U, V unimodular and D diagonal, nonnegative, with
/// d_1 | d_2 | ... and zeros trailing.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};

/// Pivots on the smallest nonzero absolute value of the remaining block
/// (ties in row-major order); transforms are tracked from the start.
SnfResult smith_normal_form(const IntMatrix& a);

/// Invariants of the abelian group with relation matrix `a` (one row per
/// relation, one column per generator).
AbelianInvariants invariants_of_relation_matrix(const IntMatrix& a);

}  // namespace finann
