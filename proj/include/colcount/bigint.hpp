#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace colcount {

using BigInt = boost::multiprecision::mpz_int;

// num/den rounded to double with a single final rounding step.
// den must be positive and num nonnegative.
double ratio_to_double(const BigInt& num, const BigInt& den);

// Natural log of a positive big integer, accurate to double precision.
double log_big(const BigInt& x);

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace colcount
