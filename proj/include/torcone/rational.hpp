#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace torcone {

// Exact scalars. Rationals are kept canonical: reduced, positive denominator,
// zero stored as 0/1. mpq_class maintains this provided every value built
// from raw parts goes through canonicalize(), which the helpers below do.
using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;

// Accepts "p" or "p/q" in base 10. Throws Errc::ParseError on malformed
// input or zero denominator.
Rational parse_rational(const std::string& s);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

} // namespace torcone
