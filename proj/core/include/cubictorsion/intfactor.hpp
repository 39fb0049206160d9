#pragma once

#include <map>
#include <vector>

#include "cubictorsion/rational.hpp"

namespace ct {

// Prime factorization of |n| (n != 0): map prime -> exponent.
// Trial division up to a small bound, then Pollard rho with
// Miller-Rabin primality certification.
std::map<Int, int> factorize(const Int& n);

bool is_probable_prime(const Int& n);

// Divisors of |n| in increasing order.
std::vector<Int> divisors(const Int& n);

}  // namespace ct
