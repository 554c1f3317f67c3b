#pragma once

#include <functional>
#include <optional>
#include <string>

#include "lpa/abelian.hpp"
#include "lpa/field.hpp"
#include "lpa/graph.hpp"
#include "lpa/group_expr.hpp"

namespace lpa {

// A size function vanishes on torsion and is additive over direct sums;
// an exact size function is additive over all short exact sequences.
// rank is exact; corank is a size function that is not exact.
struct SizeFunction {
    enum class Name { Rank, Corank, Custom };
    enum class Exactness { ExactSize, SizeOnly };

    Name name = Name::Rank;
    Exactness exactness = Exactness::ExactSize;
    std::string label;
    std::function<ExtValue(const GroupExpr&)> value_on;

    static SizeFunction rank();
    static SizeFunction corank();
    static SizeFunction custom(std::string label, Exactness exactness,
                               std::function<ExtValue(const GroupExpr&)> fn);
};

// F(K_n(L)) predicted from the invariant-factor bookkeeping:
//   exact size:  (F(K_n(k)) + F(K_{n-1}(k))) * rank K_0(L) - s * F(K_{n-1}(k))
//   size only:   requires F(K_n(k)) = 0; (rank K_0(L) - s) * F(K_{n-1}(k))
// Throws when the required field values are unknown or infinite.
long long predicted_f_value(const Graph& g, const FieldSpec& field, long long n,
                            const SizeFunction& f);

// Recovers the singular-vertex count from an exact size function,
//   ((F(K_n(k)) + F(K_{n-1}(k))) * rank_k0 - f_kn_l) / F(K_{n-1}(k)),
// under the hypotheses F(K_n(k)) < inf and 0 < F(K_{n-1}(k)) < inf.
// Non-integral or negative results signal inconsistent inputs.
long long singular_count_exact_size(const FieldSpec& field, long long n, const SizeFunction& f,
                                    long long rank_k0, long long f_kn_l);

// Recovery from a plain size function, rank_k0 - f_kn_l / F(K_{n-1}(k)),
// under the hypotheses F(K_n(k)) = 0 and 0 < F(K_{n-1}(k)) < inf.
long long singular_count_size(const FieldSpec& field, long long n, const SizeFunction& f,
                              long long rank_k0, long long f_kn_l);

// Number-field specialization at index n = 6 + 4k: divides by r1 + r2.
long long singular_count_number_field(int r1, int r2, long long k, long long rank_k0,
                                      long long rank_kn_l);

// Variant at index n = 4 + 4k for fields that are not totally real
// (r2 >= 1): divides by r2.
long long singular_count_number_field_complex(int r1, int r2, long long k, long long rank_k0,
                                              long long rank_kn_l);

enum class MoritaVerdict { Equivalent, NotEquivalent, PreconditionFailed };

std::string to_string(MoritaVerdict v);

// Decision certificate: the complete invariant (K_0, singular count) of
// both inputs, the hypothesis route justifying it for the given field,
// and the recomputation of each singular count from predicted K-data.
struct MoritaDecision {
    MoritaVerdict verdict = MoritaVerdict::PreconditionFailed;
    FgAbGroup k0_left;
    FgAbGroup k0_right;
    std::size_t singular_left = 0;
    std::size_t singular_right = 0;
    std::string theorem_route;
    std::optional<std::string> failed_precondition;
    bool recovery_cross_check = false;
};

// Both graphs must be simple with finitely many vertices and infinitely
// many edges; then the algebras are Morita equivalent iff the K_0 groups
// are isomorphic and the singular-vertex counts agree.
MoritaDecision morita_equivalent(const Graph& e, const Graph& f, const FieldSpec& field);

}  // namespace lpa
