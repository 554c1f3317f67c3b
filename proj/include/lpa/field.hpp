#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace lpa {

// One of the three supported coefficient-field families, carrying exactly
// the data its K-theory table depends on.
struct FieldSpec {
    enum class Kind { FiniteField, AlgClosed, NumberField };

    Kind kind = Kind::FiniteField;
    mpz_class q;               // FiniteField: a prime power >= 2
    mpz_class characteristic;  // AlgClosed: 0 or a prime
    int r1 = 0;                // NumberField: real places
    int r2 = 0;                // NumberField: complex places (r1 + 2*r2 >= 1)

    static FieldSpec finite_field(const mpz_class& q);
    static FieldSpec alg_closed(const mpz_class& characteristic);
    static FieldSpec number_field(int r1, int r2);

    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const;
};

// Ordering used for canonical sorting of atoms that carry a field.
int compare(const FieldSpec& a, const FieldSpec& b);

// Parses the CLI grammar "fq:<q>", "algclosed:<0|p>", "nf:<r1>,<r2>".
FieldSpec parse_field_spec(const std::string& text);

bool is_prime(const mpz_class& n);
bool is_prime_power(const mpz_class& n);

// p-adic valuation: largest e with p^e | n (n != 0).
unsigned long p_valuation(const mpz_class& n, const mpz_class& p);

}  // namespace lpa
