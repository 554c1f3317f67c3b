#include "lpa/group_expr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lpa {

namespace {

constexpr long long kMaxCyclicExpansion = 100000;

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// d with its p-primary part removed.
mpz_class strip_p_part(const mpz_class& d, const mpz_class& p) {
    mpz_class rest;
    mpz_remove(rest.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    return rest;
}

}  // namespace

GroupAtom GroupAtom::z() { return GroupAtom{}; }

GroupAtom GroupAtom::cyclic(const mpz_class& d) {
    GroupAtom a;
    a.kind = Kind::Cyclic;
    a.d = d;
    return a;
}

GroupAtom GroupAtom::uniquely_divisible(int tag) {
    GroupAtom a;
    a.kind = Kind::UniquelyDivisible;
    a.tag = tag;
    return a;
}

GroupAtom GroupAtom::q_mod_z() {
    GroupAtom a;
    a.kind = Kind::QmodZ;
    return a;
}

GroupAtom GroupAtom::q_mod_z_inv_p(const mpz_class& p) {
    GroupAtom a;
    a.kind = Kind::QmodZInvP;
    a.p = p;
    return a;
}

GroupAtom GroupAtom::field_units(const FieldSpec& f) {
    GroupAtom a;
    a.kind = Kind::FieldUnits;
    a.field = f;
    return a;
}

GroupAtom GroupAtom::unknown_torsion() {
    GroupAtom a;
    a.kind = Kind::UnknownTorsion;
    return a;
}

GroupAtom GroupAtom::units_quotient(const FieldSpec& f, const mpz_class& d) {
    GroupAtom a;
    a.kind = Kind::UnitsQuotient;
    a.field = f;
    a.d = d;
    return a;
}

GroupAtom GroupAtom::units_kernel(const FieldSpec& f, const mpz_class& d) {
    GroupAtom a;
    a.kind = Kind::UnitsKernel;
    a.field = f;
    a.d = d;
    return a;
}

int compare(const GroupAtom& a, const GroupAtom& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
    int c = cmp(a.d, b.d);
    if (c != 0) return c;
    c = cmp(a.p, b.p);
    if (c != 0) return c;
    if (a.tag != b.tag) return a.tag < b.tag ? -1 : 1;
    return compare(a.field, b.field);
}

std::string GroupAtom::to_string() const {
    switch (kind) {
        case Kind::Z: return "Z";
        case Kind::Cyclic: return "Z/" + d.get_str();
        case Kind::UniquelyDivisible: return "D_" + std::to_string(tag);
        case Kind::QmodZ: return "(Q/Z)";
        case Kind::QmodZInvP: return "(Q/Z[1/" + p.get_str() + "])";
        case Kind::FieldUnits: return "k^x";
        case Kind::UnknownTorsion: return "T?";
        case Kind::UnitsQuotient: return "coker(" + d.get_str() + ": k^x)";
        case Kind::UnitsKernel: return "ker(" + d.get_str() + ": k^x)";
    }
    return "?";
}

GroupExpr GroupExpr::atom(const GroupAtom& a, SummandMult m) {
    GroupExpr e;
    e.summands_.push_back({a, m});
    e.canonicalize();
    return e;
}

GroupExpr GroupExpr::from_fg(const FgAbGroup& g) {
    GroupExpr e;
    if (g.free_rank() > 0) {
        e.summands_.push_back({GroupAtom::z(), SummandMult::finite(static_cast<long long>(g.free_rank()))});
    }
    for (const auto& d : g.torsion()) {
        e.summands_.push_back({GroupAtom::cyclic(d), SummandMult::finite(1)});
    }
    e.canonicalize();
    return e;
}

GroupExpr GroupExpr::direct_sum(const GroupExpr& other) const {
    GroupExpr e;
    e.summands_ = summands_;
    e.summands_.insert(e.summands_.end(), other.summands_.begin(), other.summands_.end());
    e.canonicalize();
    return e;
}

GroupExpr GroupExpr::power(const SummandMult& k) const {
    GroupExpr e;
    if (!k.infinite && k.count == 0) return e;
    for (const auto& s : summands_) {
        SummandMult m;
        if (k.infinite || s.mult.infinite) {
            m = SummandMult::inf();
        } else {
            m = SummandMult::finite(s.mult.count * k.count);
        }
        e.summands_.push_back({s.atom, m});
    }
    e.canonicalize();
    return e;
}

bool GroupExpr::operator==(const GroupExpr& other) const {
    if (summands_.size() != other.summands_.size()) return false;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        if (!(summands_[i].atom == other.summands_[i].atom) ||
            !(summands_[i].mult == other.summands_[i].mult)) {
            return false;
        }
    }
    return true;
}

void GroupExpr::canonicalize() {
    std::vector<Summand> work;
    std::vector<mpz_class> cyclic_orders;
    long long z_count = 0;
    bool z_infinite = false;

    for (auto& s : summands_) {
        if (!s.mult.infinite && s.mult.count <= 0) continue;
        // Finite-field unit groups are cyclic of order q - 1.
        if (s.atom.kind == GroupAtom::Kind::FieldUnits &&
            s.atom.field.kind == FieldSpec::Kind::FiniteField) {
            s.atom = GroupAtom::cyclic(s.atom.field.q - 1);
        }
        if (s.atom.kind == GroupAtom::Kind::Cyclic && s.atom.d <= 1) continue;

        if (s.atom.kind == GroupAtom::Kind::Z) {
            if (s.mult.infinite) {
                z_infinite = true;
            } else {
                z_count += s.mult.count;
            }
            continue;
        }
        if (s.atom.kind == GroupAtom::Kind::Cyclic && !s.mult.infinite) {
            if (s.mult.count > kMaxCyclicExpansion) {
                throw std::invalid_argument("cyclic multiplicity too large to canonicalize");
            }
            for (long long i = 0; i < s.mult.count; ++i) cyclic_orders.push_back(s.atom.d);
            continue;
        }
        work.push_back(s);
    }

    if (z_infinite) {
        work.push_back({GroupAtom::z(), SummandMult::inf()});
    } else if (z_count > 0) {
        work.push_back({GroupAtom::z(), SummandMult::finite(z_count)});
    }

    // Invariant-factor recombination of the cyclic part, so that
    // Z/2 + Z/3 and Z/6 share one canonical form.
    FgAbGroup chain(0, std::move(cyclic_orders));
    for (const auto& d : chain.torsion()) {
        work.push_back({GroupAtom::cyclic(d), SummandMult::finite(1)});
    }

    std::sort(work.begin(), work.end(), [](const Summand& a, const Summand& b) {
        return compare(a.atom, b.atom) < 0;
    });

    summands_.clear();
    for (auto& s : work) {
        if (!summands_.empty() && summands_.back().atom == s.atom) {
            if (s.mult.infinite || summands_.back().mult.infinite) {
                summands_.back().mult = SummandMult::inf();
            } else {
                summands_.back().mult.count += s.mult.count;
            }
        } else {
            summands_.push_back(s);
        }
    }
}

std::string GroupExpr::to_string() const {
    if (summands_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : summands_) {
        if (!first) os << " + ";
        first = false;
        bool exponent = s.mult.infinite || s.mult.count != 1;
        std::string body = s.atom.to_string();
        if (exponent && s.atom.kind == GroupAtom::Kind::Cyclic) body = "(" + body + ")";
        os << body;
        if (exponent) {
            os << "^";
            if (s.mult.infinite) {
                os << "inf";
            } else {
                os << s.mult.count;
            }
        }
    }
    return os.str();
}

GroupExpr field_k_group(const FieldSpec& field, long long n) {
    if (n <= -1) return GroupExpr::zero();
    if (n == 0) return GroupExpr::atom(GroupAtom::z());
    if (n == 1) return GroupExpr::atom(GroupAtom::field_units(field));

    switch (field.kind) {
        case FieldSpec::Kind::FiniteField: {
            if (n % 2 == 0) return GroupExpr::zero();
            // n = 2j - 1 with j >= 2
            unsigned long j = static_cast<unsigned long>((n + 1) / 2);
            mpz_class modulus;
            mpz_pow_ui(modulus.get_mpz_t(), field.q.get_mpz_t(), j);
            modulus -= 1;
            return GroupExpr::atom(GroupAtom::cyclic(modulus));
        }
        case FieldSpec::Kind::AlgClosed: {
            GroupExpr e = GroupExpr::atom(GroupAtom::uniquely_divisible(static_cast<int>(n)));
            if (n % 2 == 1) {
                GroupAtom torsion_part = field.characteristic == 0
                                             ? GroupAtom::q_mod_z()
                                             : GroupAtom::q_mod_z_inv_p(field.characteristic);
                e = e.direct_sum(GroupExpr::atom(torsion_part));
            }
            return e;
        }
        case FieldSpec::Kind::NumberField: {
            long long rank = 0;
            if (n % 2 == 0) {
                rank = 0;
            } else if (n % 4 == 1) {
                rank = field.r1 + field.r2;
            } else {  // n % 4 == 3
                rank = field.r2;
            }
            GroupExpr e;
            if (rank > 0) e = GroupExpr::atom(GroupAtom::z(), SummandMult::finite(rank));
            return e.direct_sum(GroupExpr::atom(GroupAtom::unknown_torsion()));
        }
    }
    return GroupExpr::zero();
}

namespace {

// Maps a single atom through quotient-by-d or kernel-of-d. Returns the
// replacement atom, or nothing when the result is the zero group.
std::optional<GroupAtom> quotient_atom(const GroupAtom& a, const mpz_class& d) {
    using K = GroupAtom::Kind;
    switch (a.kind) {
        case K::Z: return GroupAtom::cyclic(d);
        case K::Cyclic: {
            mpz_class g = gcd(a.d, d);
            if (g <= 1) return std::nullopt;
            return GroupAtom::cyclic(g);
        }
        case K::UniquelyDivisible:
        case K::QmodZ:
        case K::QmodZInvP:
            return std::nullopt;  // quotients of divisible groups by d vanish
        case K::FieldUnits:
            switch (a.field.kind) {
                case FieldSpec::Kind::FiniteField: {
                    mpz_class g = gcd(a.field.q - 1, d);
                    if (g <= 1) return std::nullopt;
                    return GroupAtom::cyclic(g);
                }
                case FieldSpec::Kind::AlgClosed:
                    return std::nullopt;  // k^x divisible
                case FieldSpec::Kind::NumberField:
                    return GroupAtom::units_quotient(a.field, d);
            }
            return std::nullopt;
        case K::UnknownTorsion: return GroupAtom::unknown_torsion();
        case K::UnitsQuotient:
        case K::UnitsKernel:
            throw std::invalid_argument("cannot rewrite a formal number-field marker");
    }
    return std::nullopt;
}

std::optional<GroupAtom> kernel_atom(const GroupAtom& a, const mpz_class& d) {
    using K = GroupAtom::Kind;
    switch (a.kind) {
        case K::Z: return std::nullopt;  // torsion free
        case K::Cyclic: {
            mpz_class g = gcd(a.d, d);
            if (g <= 1) return std::nullopt;
            return GroupAtom::cyclic(g);
        }
        case K::UniquelyDivisible: return std::nullopt;
        case K::QmodZ:
            // the class of 1/d generates the kernel, of order d
            return GroupAtom::cyclic(d);
        case K::QmodZInvP: {
            mpz_class stripped = strip_p_part(d, a.p);  // no p-torsion present
            if (stripped <= 1) return std::nullopt;
            return GroupAtom::cyclic(stripped);
        }
        case K::FieldUnits:
            switch (a.field.kind) {
                case FieldSpec::Kind::FiniteField: {
                    mpz_class g = gcd(a.field.q - 1, d);
                    if (g <= 1) return std::nullopt;
                    return GroupAtom::cyclic(g);
                }
                case FieldSpec::Kind::AlgClosed: {
                    // d-th roots of unity: all of them in characteristic 0,
                    // only the prime-to-p ones in characteristic p.
                    mpz_class order = a.field.characteristic == 0
                                          ? d
                                          : strip_p_part(d, a.field.characteristic);
                    if (order <= 1) return std::nullopt;
                    return GroupAtom::cyclic(order);
                }
                case FieldSpec::Kind::NumberField:
                    return GroupAtom::units_kernel(a.field, d);
            }
            return std::nullopt;
        case K::UnknownTorsion: return GroupAtom::unknown_torsion();
        case K::UnitsQuotient:
        case K::UnitsKernel:
            throw std::invalid_argument("cannot rewrite a formal number-field marker");
    }
    return std::nullopt;
}

GroupExpr map_atoms(const GroupExpr& e, const mpz_class& d,
                    std::optional<GroupAtom> (*f)(const GroupAtom&, const mpz_class&)) {
    if (d == 0) throw std::invalid_argument("rewriting by 0 is not defined");
    if (d < 0) throw std::invalid_argument("rewriting requires d >= 1");
    if (d == 1) return GroupExpr::zero();
    GroupExpr out;
    for (const auto& s : e.summands()) {
        if (auto atom = f(s.atom, d)) {
            out = out.direct_sum(GroupExpr::atom(*atom, s.mult));
        }
    }
    return out;
}

}  // namespace

GroupExpr quotient_by(const GroupExpr& e, const mpz_class& d) {
    return map_atoms(e, d, &quotient_atom);
}

GroupExpr kernel_of(const GroupExpr& e, const mpz_class& d) {
    return map_atoms(e, d, &kernel_atom);
}

std::string ExtValue::to_string() const {
    switch (kind) {
        case Kind::Finite: return std::to_string(value);
        case Kind::Infinity: return "inf";
        case Kind::Unknown: return "unknown";
    }
    return "?";
}

namespace {

ExtValue accumulate(ExtValue total, ExtValue piece, const SummandMult& mult) {
    // An atom of value 0 contributes nothing at any multiplicity.
    if (piece == ExtValue::finite(0)) return total;
    if (mult.infinite && piece.is_finite()) piece = ExtValue::infinity();
    if (total.kind == ExtValue::Kind::Infinity || piece.kind == ExtValue::Kind::Infinity) {
        return ExtValue::infinity();
    }
    if (total.kind == ExtValue::Kind::Unknown || piece.kind == ExtValue::Kind::Unknown) {
        return ExtValue::unknown();
    }
    return ExtValue::finite(total.value + piece.value * mult.count);
}

ExtValue atom_rank(const GroupAtom& a) {
    using K = GroupAtom::Kind;
    switch (a.kind) {
        case K::Z: return ExtValue::finite(1);
        case K::Cyclic:
        case K::QmodZ:
        case K::QmodZInvP:
        case K::UnknownTorsion:
            return ExtValue::finite(0);
        // coker(d : k^x) has exponent dividing d and ker(d : k^x) consists
        // of roots of unity, so both are torsion.
        case K::UnitsQuotient:
        case K::UnitsKernel:
            return ExtValue::finite(0);
        case K::UniquelyDivisible: return ExtValue::unknown();
        case K::FieldUnits:
            switch (a.field.kind) {
                case FieldSpec::Kind::FiniteField: return ExtValue::finite(0);
                case FieldSpec::Kind::NumberField: return ExtValue::infinity();
                case FieldSpec::Kind::AlgClosed:
                    return a.field.characteristic == 0 ? ExtValue::infinity() : ExtValue::unknown();
            }
            return ExtValue::unknown();
    }
    return ExtValue::unknown();
}

ExtValue atom_corank(const GroupAtom& a) {
    using K = GroupAtom::Kind;
    switch (a.kind) {
        case K::Z: return ExtValue::finite(1);
        case K::Cyclic:
        case K::UnknownTorsion:
        case K::UnitsQuotient:
        case K::UnitsKernel:
            return ExtValue::finite(0);  // torsion
        case K::UniquelyDivisible:
        case K::QmodZ:
        case K::QmodZInvP:
            return ExtValue::finite(0);  // divisible, hence weakly divisible
        case K::FieldUnits:
            switch (a.field.kind) {
                case FieldSpec::Kind::FiniteField: return ExtValue::finite(0);
                case FieldSpec::Kind::AlgClosed: return ExtValue::finite(0);  // divisible
                case FieldSpec::Kind::NumberField: return ExtValue::unknown();  // not pinned
            }
            return ExtValue::unknown();
    }
    return ExtValue::unknown();
}

}  // namespace

ExtValue rank_of(const GroupExpr& e) {
    ExtValue total = ExtValue::finite(0);
    for (const auto& s : e.summands()) total = accumulate(total, atom_rank(s.atom), s.mult);
    return total;
}

ExtValue corank_of(const GroupExpr& e) {
    ExtValue total = ExtValue::finite(0);
    for (const auto& s : e.summands()) total = accumulate(total, atom_corank(s.atom), s.mult);
    return total;
}

std::optional<FgAbGroup> to_fg(const GroupExpr& e) {
    std::size_t free_rank = 0;
    std::vector<mpz_class> orders;
    for (const auto& s : e.summands()) {
        if (s.mult.infinite) return std::nullopt;
        if (s.atom.kind == GroupAtom::Kind::Z) {
            free_rank += static_cast<std::size_t>(s.mult.count);
        } else if (s.atom.kind == GroupAtom::Kind::Cyclic) {
            for (long long i = 0; i < s.mult.count; ++i) orders.push_back(s.atom.d);
        } else {
            return std::nullopt;
        }
    }
    return FgAbGroup(free_rank, std::move(orders));
}

}  // namespace lpa
