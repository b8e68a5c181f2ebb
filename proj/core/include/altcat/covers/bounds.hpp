#pragma once

#include "altcat/exact/rational.hpp"

namespace altcat::covers {

/// First Chern class of D_{m,A}: m deg A.
long c1_dma(long m, long deg_a);

/// Top Chern class of q^*V(2) for a rank-3 bundle V over the elliptic curve,
/// with the tautological class obeying eps^3 = -c1(F) eps^2. Expands
/// prod (x_i + 2 eps) over Chern roots and integrates; equals
/// 4 (c1V - 2 c1F).
Integer chern_upper_bound(long c1_f, long c1_v);

/// Number of spin structures on an elliptic curve (2^(2g), g = 1).
constexpr long kSpinStructures = 4;

/// Degree of the Veronese surface v_2(P^2) in P^5.
long veronese_degree();

struct VeroneseBound {
  long per_spin;
  long total;
};
VeroneseBound veronese_bound();

}  // namespace altcat::covers
