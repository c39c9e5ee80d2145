#pragma once

#include <utility>
#include <vector>

#include "nilgen/numeric.hpp"

namespace nilgen {

// Miller-Rabin via GMP with 40 rounds; composites slip through with
// probability below 4^-40, far beyond anything the test tolerances see.
bool is_probable_prime(const Integer& n);

// Prime factorization of n >= 2, sorted by prime, exponents >= 1.
// Trial division for small factors, then Pollard-Brent rho on what
// remains. Intended for desk-scale inputs, not cryptographic ones.
std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n);

}  // namespace nilgen
