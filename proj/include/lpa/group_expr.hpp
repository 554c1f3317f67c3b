#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "lpa/abelian.hpp"
#include "lpa/field.hpp"

namespace lpa {

// One abelian-group building block. Atoms carry no structure beyond their
// parameters; what the supported theorems do not pin down stays a formal
// marker rather than being guessed.
struct GroupAtom {
    enum class Kind {
        Z,                  // infinite cyclic
        Cyclic,             // Z/d with d >= 2
        QmodZ,              // Q/Z
        QmodZInvP,          // Q/Z with trivial p-primary part
        UniquelyDivisible,  // the uniquely divisible group D_n; tags never merge
        FieldUnits,         // units k^x of a field
        UnknownTorsion,     // finite torsion group of undetermined structure
        UnitsQuotient,      // formal coker(d : k^x), number fields only
        UnitsKernel,        // formal ker(d : k^x), number fields only
    };

    Kind kind = Kind::Z;
    mpz_class d;      // Cyclic order; marker exponent
    mpz_class p;      // QmodZInvP prime
    int tag = 0;      // UniquelyDivisible degree
    FieldSpec field;  // FieldUnits / markers

    static GroupAtom z();
    static GroupAtom cyclic(const mpz_class& d);
    static GroupAtom uniquely_divisible(int tag);
    static GroupAtom q_mod_z();
    static GroupAtom q_mod_z_inv_p(const mpz_class& p);
    static GroupAtom field_units(const FieldSpec& f);
    static GroupAtom unknown_torsion();
    static GroupAtom units_quotient(const FieldSpec& f, const mpz_class& d);
    static GroupAtom units_kernel(const FieldSpec& f, const mpz_class& d);

    bool operator==(const GroupAtom&) const = default;
    std::string to_string() const;
};

int compare(const GroupAtom& a, const GroupAtom& b);

// Summand multiplicity: a non-negative count or infinity.
struct SummandMult {
    bool infinite = false;
    long long count = 0;

    static SummandMult finite(long long n) { return {false, n}; }
    static SummandMult inf() { return {true, 0}; }
    bool operator==(const SummandMult&) const = default;
};

struct Summand {
    GroupAtom atom;
    SummandMult mult;
};

// Formal direct sum of atoms, kept in a canonical form: finite-field unit
// groups collapse to their cyclic value, trivial summands vanish, cyclic
// parts are recombined into the invariant-factor chain, and summands are
// sorted with equal atoms merged. Structural equality of canonical forms
// is the module's isomorphism test.
class GroupExpr {
public:
    GroupExpr() = default;

    static GroupExpr zero() { return GroupExpr(); }
    static GroupExpr atom(const GroupAtom& a, SummandMult m = SummandMult::finite(1));
    static GroupExpr from_fg(const FgAbGroup& g);

    GroupExpr direct_sum(const GroupExpr& other) const;
    // Multiplies every summand multiplicity by k (the k-fold direct sum).
    GroupExpr power(const SummandMult& k) const;

    bool is_zero() const { return summands_.empty(); }
    const std::vector<Summand>& summands() const { return summands_; }

    bool operator==(const GroupExpr& other) const;

    std::string to_string() const;

private:
    void canonicalize();
    std::vector<Summand> summands_;
};

// The K-groups of the supported field families, for every integer n.
GroupExpr field_k_group(const FieldSpec& field, long long n);

// Rewrites each atom to its quotient by d (d >= 1); quotient by 1 is the
// zero group. Expressions containing formal number-field markers cannot
// be rewritten further.
GroupExpr quotient_by(const GroupExpr& e, const mpz_class& d);

// Rewrites each atom to the kernel of multiplication by d (d >= 1).
GroupExpr kernel_of(const GroupExpr& e, const mpz_class& d);

// Extended value lattice for rank/corank: a definite count, a definite
// infinity, or unknown. Unknown absorbs everything except infinity.
struct ExtValue {
    enum class Kind { Finite, Infinity, Unknown };
    Kind kind = Kind::Finite;
    long long value = 0;

    static ExtValue finite(long long v) { return {Kind::Finite, v}; }
    static ExtValue infinity() { return {Kind::Infinity, 0}; }
    static ExtValue unknown() { return {Kind::Unknown, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool operator==(const ExtValue&) const = default;
    std::string to_string() const;
};

ExtValue rank_of(const GroupExpr& e);
ExtValue corank_of(const GroupExpr& e);

// Succeeds iff every summand is Z or Cyclic with finite multiplicity.
std::optional<FgAbGroup> to_fg(const GroupExpr& e);

}  // namespace lpa
