#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace linkcob {

// Arbitrary-precision integers everywhere: Smith normal form intermediates
// grow far beyond any fixed-width type even for small inputs.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline int sign_int(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

// Floor division, valid for any nonzero divisor.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Division with the quotient rounded to nearest (ties toward zero); keeps
// remainders small during elimination.
inline Int near_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    Int b2 = abs_int(b);
    if (2 * abs_int(r) > b2) q += (sign_int(r) == sign_int(b)) ? 1 : -1;
    return q;
}

std::string to_string(const Int& a);

}  // namespace linkcob
