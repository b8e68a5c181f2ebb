#pragma once

#include "altcat/covers/check.hpp"
#include "altcat/exact/rational.hpp"

namespace altcat::covers {

/// 1728 g2^3 / (g2^3 - 27 g3^2); throws std::domain_error on a singular curve.
Rational j_invariant(const Rational& g2, const Rational& g3);

/// G = wp' (wp - e2)/(wp - e1): derivative factorisation, the quadratic
/// factor, its discriminant 16 Delta0 and the square-lattice specialisations.
CheckReport check_G_identities();

/// G~ = wp' (wp - e1): same programme for the degree-4 function.
CheckReport check_Gtilde_identities();

}  // namespace altcat::covers
