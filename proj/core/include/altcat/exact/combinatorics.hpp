#pragma once

#include "altcat/exact/rational.hpp"

namespace altcat {

/// n! / (k! (n-k)!), zero when k > n.
Integer binom_int(unsigned long n, unsigned long k);

/// a (a-1) ... (a-k+1) / k! for rational a.
Rational binom_gen(const Rational& a, unsigned long k);

/// (2n choose n) / (n+1).
Integer catalan(unsigned long n);

/// base^exponent for a (possibly negative) machine integer base.
Integer ipow(long base, unsigned long exponent);

}  // namespace altcat
