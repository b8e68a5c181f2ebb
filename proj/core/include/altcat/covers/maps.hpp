#pragma once

#include <utility>

#include "altcat/covers/check.hpp"
#include "altcat/covers/rational_map.hpp"
#include "altcat/exact/quadratic.hpp"

namespace altcat::covers {

/// t^3 (t - 4) / (t - 1) over Q.
RationalMap<Rational> f1_map();

/// The two degree-4 maps on the node component with profile {2,2} over 0,
/// over Q(sqrt 3): first the one with a triple pole at 1/2 - sqrt3/6,
/// second t^2 (t-1)^2 / (t - 1/2 - sqrt3/4).
std::pair<RationalMap<QuadScalar>, RationalMap<QuadScalar>> node_pair_maps();

/// The fixing-0-and-1 Mobius map with tau(inf) = 1/2 + sqrt3/6 and
/// tau(1/2 - sqrt3/6) = inf.
Mobius<QuadScalar> node_pair_tau();

/// The two cubic maps over Q(sqrt -3).
std::pair<RationalMap<QuadScalar>, RationalMap<QuadScalar>> deg3_maps();

CheckReport check_f1_map();
CheckReport check_node_pair_maps();
CheckReport check_deg3_maps();

}  // namespace altcat::covers
