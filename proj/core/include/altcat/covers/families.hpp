#pragma once

#include "altcat/covers/check.hpp"

namespace altcat::covers {

/// t^3 (t - 1)(t - b): the further triple point condition and its two
/// solutions in b.
CheckReport family_condition_deg5_alpha1();

/// t^2 (t - 1)^2 (t - b): same for the balanced profile over the node.
CheckReport family_condition_deg5_alpha2();

}  // namespace altcat::covers
