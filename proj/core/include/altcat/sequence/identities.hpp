#pragma once

namespace altcat {

/// sum_{k=0}^{g-i} (-1)^k 2^{g-k} binom(g,k) binom(g-k,i) = binom(g,i) 2^i
/// for every 0 <= i <= g.
bool binomial_identity_check(unsigned g);

/// C_n = (-1)^n 2^{2n+1} binom_gen(1/2, n+1).
bool catalan_rewrite_check(unsigned n);

/// 16^g top_eval((sigma_1 sigma_3)^g) in G(2,2g+2) equals the closed formula,
/// using sigma_4 + sigma_{3,1} = sigma_1 sigma_3.
/// Throws std::invalid_argument outside 1 <= g <= 8.
bool sigma3_route_check(unsigned g);

/// sigma_3 = 2 sigma_1 sigma_2 - sigma_1^3 in G(2,n), n >= 5.
bool sigma3_reduction_check(unsigned n);

}  // namespace altcat
