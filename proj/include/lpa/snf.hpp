#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "lpa/abelian.hpp"
#include "lpa/matrix.hpp"

namespace lpa {

// Smith normal form u * a * v = d with unimodular u (rows x rows) and
// v (cols x cols). The diagonal of d is (f_1, ..., f_r, 0, ..., 0) with
// f_i >= 1 and f_i | f_{i+1}; invariant_factors holds the nonzero f_i.
struct SNFResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    std::vector<mpz_class> invariant_factors;
};

SNFResult smith_normal_form(const IntMatrix& a);

// Bookkeeping extracted from the SNF of a presentation matrix
// (|vertices| rows by |regular vertices| columns):
//   ones     number of invariant factors equal to 1
//   factors  the invariant factors >= 2, a divisibility chain
//   m        number of zero columns of d (free defect)
//   s        number of singular vertices of the originating graph
// Satisfies ones + factors.size() + m = columns and
// m + s = free rank of the integral cokernel.
struct DecompositionData {
    std::size_t ones = 0;
    std::vector<mpz_class> factors;
    std::size_t m = 0;
    std::size_t s = 0;
};

DecompositionData decomposition_data(const IntMatrix& a, std::size_t singular_count);

// Cokernel / kernel of a : Z^cols -> Z^rows.
FgAbGroup cokernel_over_z(const IntMatrix& a);
FgAbGroup kernel_over_z(const IntMatrix& a);

// Cokernel / kernel of a acting on (Z/modulus)-modules; modulus >= 2.
FgAbGroup cokernel_mod(const IntMatrix& a, const mpz_class& modulus);
FgAbGroup kernel_mod(const IntMatrix& a, const mpz_class& modulus);

}  // namespace lpa
