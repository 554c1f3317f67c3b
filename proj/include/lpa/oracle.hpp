#pragma once

#include <gmpxx.h>

#include <vector>

#include "lpa/abelian.hpp"
#include "lpa/matrix.hpp"

namespace lpa {
namespace oracle {

// A matrix acting on finite (Z/modulus)-modules, small enough for full
// enumeration: dims <= 4, modulus <= 30.
struct FiniteModuleMap {
    IntMatrix matrix;
    long modulus = 2;
};

// Enumerates every vector of (Z/m)^cols, collects the kernel subgroup, and
// recovers its invariant factors by counting prime-power torsion; never
// touches the Smith normal form path.
FgAbGroup brute_kernel_mod(const FiniteModuleMap& m);

// Same, for the quotient of (Z/m)^rows by the image subgroup.
FgAbGroup brute_cokernel_mod(const FiniteModuleMap& m);

// Classical determinantal-divisor route to the invariant factors:
// f_k = g_k / g_{k-1} with g_k the gcd of all k x k minors (g_0 = 1),
// stopping at the rank. dims <= 5.
std::vector<mpz_class> minors_gcd_invariant_factors(const IntMatrix& a);

}  // namespace oracle
}  // namespace lpa
