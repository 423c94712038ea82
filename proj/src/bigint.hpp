#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fva {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& base, unsigned exp) {
    Int r = 1;
    Int b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

// C(n, k) by the multiplicative formula; every intermediate quotient is integral.
inline Int binomial(const Int& n, unsigned k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (Int(k) > n) return 0;
    Int c = 1;
    for (unsigned i = 1; i <= k; ++i) {
        c *= n - Int(k) + Int(i);
        c /= Int(i);
    }
    return c;
}

inline bool is_prime_u64(unsigned long long v) {
    if (v < 2) return false;
    for (unsigned long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::string to_decimal(const Int& v) { return v.str(); }

inline std::string to_decimal(const Rat& v) {
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace fva
