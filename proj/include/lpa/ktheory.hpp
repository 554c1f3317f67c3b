#pragma once

#include <string>

#include "lpa/abelian.hpp"
#include "lpa/field.hpp"
#include "lpa/graph.hpp"
#include "lpa/group_expr.hpp"
#include "lpa/snf.hpp"

namespace lpa {

enum class Fidelity { Exact, RankOnly, Symbolic };

std::string to_string(Fidelity f);

// One K-group of a Leavitt path algebra. Exact results are pinned up to
// isomorphism by the expression; RankOnly results have a definite free
// rank and undetermined finite torsion; Symbolic results contain formal
// number-field markers.
struct KGroupResult {
    long long n = 0;
    GroupExpr group;
    Fidelity fidelity = Fidelity::Exact;
};

// K_0 = integral cokernel of the presentation matrix; field independent.
FgAbGroup k0(const Graph& g);

// K_1 = (units-group cokernel of the presentation matrix) + Z^m, evaluated
// atom-wise from the invariant factors.
GroupExpr k1(const Graph& g, const FieldSpec& field);

// The direct-sum formula coker(presentation on K_n(k)) + ker(presentation
// on K_{n-1}(k)), evaluated through the invariant-factor decomposition.
// Valid whenever K_n(k) is divisible or K_{n-1}(k) is free abelian; that
// covers every n over the supported exact families, and n <= 1 over any
// field.
GroupExpr k_group_split(const Graph& g, const FieldSpec& field, long long n);

// Complete K-theory over a finite field with q elements.
FgAbGroup k_group_finite_field(const Graph& g, const mpz_class& q, long long n);

// Complete K-theory over an algebraically closed field of the given
// characteristic.
GroupExpr k_group_alg_closed(const Graph& g, const mpz_class& characteristic, long long n);

// Closed form for finite no-sink graphs with det(A^t - I) != 0 over an
// algebraically closed field: odd K-groups vanish and even positive ones
// equal the torsion kernel on G = Q/Z (char 0) or Q/Z[1/p] (char p), with
// weak Bott periodicity K_{2n} = K_2. Throws when a precondition fails,
// naming the failed condition.
GroupExpr k_group_det_nonzero(const Graph& g, const mpz_class& characteristic, long long n);

// Rank-level K-theory over a number field with r1 real and r2 complex
// places, for n >= 3 (the predecessor rank at n <= 2 is infinite).
KGroupResult k_group_number_field(const Graph& g, int r1, int r2, long long n);

// Field-family dispatch for every integer n.
KGroupResult k_group(const Graph& g, const FieldSpec& field, long long n);

}  // namespace lpa
