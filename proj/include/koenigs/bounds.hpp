#pragma once

#include "koenigs/domain.hpp"

namespace koenigs {

/// Lower bound of f(y) - slope*y over the finite interval [lo, hi], certified by
/// interval branch and bound. -inf when the enclosure cannot be closed within the budget.
double certified_inf(const Expr& f, double lo, double hi, double slope = 0, int budget = 4000);

/// Upper bound of f over [lo, hi]; +inf when the enclosure cannot be closed.
double certified_sup(const Expr& f, double lo, double hi, int budget = 4000);

/// Certified lower bound of psi(y) - slope*y over y in [lo, hi] within the open span of p.
/// `certified` is cleared when the bound rests on sampling.
double piece_lower_bound(const Piece& p, double lo, double hi, double slope, bool& certified);

/// Lipschitz constant of the eta-domain defining function.
double eta_lipschitz(double a);

} // namespace koenigs
