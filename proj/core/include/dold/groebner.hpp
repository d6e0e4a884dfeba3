#pragma once

#include <span>
#include <vector>

#include "dold/f2poly.hpp"

namespace dold {

/// Remainder of `p` under multivariate division by `basis` in the graded
/// order: every term divisible by some leading monomial of the basis is
/// rewritten until none remains. Idempotent; the result is zero exactly when
/// `p` lies in the ideal once `basis` is a Groebner basis.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis,
                       std::span<const GradedVariable> vars);

/// Reduced Groebner basis of the ideal generated by `generators` under the
/// graded order with lexicographic tie-break in declaration order. Inputs must
/// be homogeneous (this keeps every S-polynomial reduction inside one degree
/// and makes the computed basis canonical). Zero generators are dropped; a
/// monomial-ideal input comes back minimalized but otherwise unchanged.
std::vector<Polynomial> buchberger_reduced(std::vector<Polynomial> generators,
                                           std::span<const GradedVariable> vars);

}  // namespace dold
