#ifndef HOMSUM_INTEGER_HPP
#define HOMSUM_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace homsum {

// Arbitrary-precision integer used for all matrix entries and torsion
// coefficients. Smith reduction can blow up intermediate values well past
// 64 bits even for small inputs.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b)
{
    return boost::multiprecision::gcd(a, b);
}

}  // namespace homsum

#endif
