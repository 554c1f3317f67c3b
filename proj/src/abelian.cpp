#include "lpa/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace lpa {

namespace {

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Rewrites a multiset of cyclic orders into the invariant-factor chain.
// Z/a + Z/b = Z/gcd(a,b) + Z/lcm(a,b) for every pair, so replacing
// incomparable pairs by (gcd, lcm) until every pair is comparable under
// divisibility yields the unique chain; gcd factors that collapse to 1
// are dropped. This performs the prime-power/CRT recombination without
// ever factoring the orders.
void to_invariant_chain(std::vector<mpz_class>& vals) {
    std::erase_if(vals, [](const mpz_class& v) { return v < 2; });
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            for (std::size_t j = i + 1; j < vals.size(); ++j) {
                if (mpz_divisible_p(vals[j].get_mpz_t(), vals[i].get_mpz_t()) ||
                    mpz_divisible_p(vals[i].get_mpz_t(), vals[j].get_mpz_t())) {
                    continue;
                }
                mpz_class g = gcd(vals[i], vals[j]);
                mpz_class l = vals[i] / g * vals[j];
                vals[i] = g;
                vals[j] = l;
                changed = true;
            }
        }
    }
    std::erase_if(vals, [](const mpz_class& v) { return v < 2; });
    std::sort(vals.begin(), vals.end());
}

}  // namespace

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<mpz_class> cyclic_orders)
    : free_rank_(free_rank), torsion_(std::move(cyclic_orders)) {
    to_invariant_chain(torsion_);
}

mpz_class FgAbGroup::torsion_order() const {
    mpz_class n = 1;
    for (const auto& d : torsion_) n *= d;
    return n;
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& other) const {
    std::vector<mpz_class> orders = torsion_;
    orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
    return FgAbGroup(free_rank_ + other.free_rank_, std::move(orders));
}

std::string FgAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << "Z";
        if (free_rank_ > 1) os << "^" << free_rank_;
        first = false;
    }
    for (const auto& d : torsion_) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

}  // namespace lpa
