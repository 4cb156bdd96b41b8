#pragma once

// Exact integer and rational scalars plus the small vector helpers every
// module shares. Everything is arbitrary precision (GMP); there is no
// floating point anywhere in the library.

#include "toric/error.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Lexicographic comparison; shorter vectors sort first on a common prefix.
bool lex_less(const IntVector& a, const IntVector& b);
bool lex_less(const RatVector& a, const RatVector& b);

struct IntVectorLess {
    bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const IntVector& b);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, const Integer& k);
IntVector negate(const IntVector& a);

Integer gcd_of(const IntVector& v);

/// Divides by the gcd of the entries. Sign is preserved, so the first
/// nonzero entry keeps the sign it had in `v`. Throws ZeroVector on v = 0.
IntVector primitive(const IntVector& v);

/// Clears denominators and returns the primitive integer vector on the same
/// open ray. Throws ZeroVector on v = 0.
IntVector primitive(const RatVector& v);

RatVector to_rational(const IntVector& v);

/// Canonical rendering: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& q);
std::string to_string(const IntVector& v);

/// Least non-negative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

/// n! for small non-negative n.
Integer factorial(unsigned long n);

}  // namespace toric
