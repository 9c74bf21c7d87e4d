#include "colcount/bigint.hpp"

#include "colcount/error.hpp"

#include <cmath>

namespace colcount {

double ratio_to_double(const BigInt& num, const BigInt& den)
{
    if (den <= 0 || num < 0)
        throw Error(ErrorKind::InvalidParameter, "ratio_to_double: need num >= 0, den > 0");
    if (num == 0)
        return 0.0;

    // Scale so the integer quotient carries at least 64 significant bits.
    const long num_bits = static_cast<long>(boost::multiprecision::msb(num)) + 1;
    const long den_bits = static_cast<long>(boost::multiprecision::msb(den)) + 1;
    const long shift = 66 - (num_bits - den_bits);

    BigInt q;
    if (shift > 0)
        q = (num << static_cast<unsigned>(shift)) / den;
    else
        q = num / (den << static_cast<unsigned>(-shift));

    // Truncate to 64 bits (exact in a long double), then round once more to
    // double: at most one ulp of error overall.
    const long q_bits = static_cast<long>(boost::multiprecision::msb(q)) + 1;
    const long drop = q_bits > 64 ? q_bits - 64 : 0;
    const auto top = static_cast<unsigned long long>(q >> static_cast<unsigned>(drop));
    return static_cast<double>(std::ldexp(static_cast<long double>(top), static_cast<int>(drop - shift)));
}

double log_big(const BigInt& x)
{
    if (x <= 0)
        throw Error(ErrorKind::InvalidParameter, "log_big: argument must be positive");
    const long bits = static_cast<long>(boost::multiprecision::msb(x)) + 1;
    if (bits <= 60)
        return std::log(static_cast<double>(x.convert_to<unsigned long long>()));
    const long drop = bits - 60;
    const auto top = static_cast<unsigned long long>(x >> static_cast<unsigned>(drop));
    return std::log(static_cast<double>(top)) + static_cast<double>(drop) * std::log(2.0);
}

}  // namespace colcount
