#pragma once

#include <gmpxx.h>

#include <string>

namespace phylocount {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

ExactInt factorial(unsigned long n);
ExactInt binomial(unsigned long n, unsigned long k);
ExactInt pow2(unsigned long e);

// exact rational 2^e for signed e
ExactRat pow2q(long e);

inline std::string to_string(const ExactInt& v) { return v.get_str(); }
std::string to_string(const ExactRat& v);

}  // namespace phylocount
