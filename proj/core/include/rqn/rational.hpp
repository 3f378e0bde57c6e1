#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rqn {

// mpq_class keeps numerator/denominator reduced with a positive denominator
// as long as every value passes through canonicalize().
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);  // "3", "-3/4"
std::string to_string(const Rational& q);

}  // namespace rqn
