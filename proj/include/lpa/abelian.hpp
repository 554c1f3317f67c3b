#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace lpa {

// Finitely generated abelian group in canonical form: Z^free_rank plus
// cyclic torsion Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
// Two groups are isomorphic iff their canonical forms are equal.
class FgAbGroup {
public:
    FgAbGroup() = default;

    // Canonicalizes an arbitrary list of cyclic orders (values < 2 are
    // discarded) into the invariant-factor chain.
    FgAbGroup(std::size_t free_rank, std::vector<mpz_class> cyclic_orders);

    static FgAbGroup trivial() { return FgAbGroup(); }
    static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
    static FgAbGroup cyclic(const mpz_class& d) { return FgAbGroup(0, {d}); }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<mpz_class>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }

    // Order of the torsion subgroup (the group order when finite).
    mpz_class torsion_order() const;

    FgAbGroup direct_sum(const FgAbGroup& other) const;

    bool operator==(const FgAbGroup& other) const = default;

    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<mpz_class> torsion_;
};

inline bool is_isomorphic(const FgAbGroup& g, const FgAbGroup& h) { return g == h; }

// Both coincide with the free rank on finitely generated groups.
inline std::size_t rank_fg(const FgAbGroup& g) { return g.free_rank(); }
inline std::size_t corank_fg(const FgAbGroup& g) { return g.free_rank(); }

}  // namespace lpa
