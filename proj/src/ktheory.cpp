#include "lpa/ktheory.hpp"

#include <stdexcept>

namespace lpa {

namespace {

// Exact means the expression pins the isomorphism class: only Z, cyclic,
// and Q/Z-type atoms. Uniquely divisible tags and unit groups of infinite
// fields are named but not identified, so they stay symbolic; unknown
// finite torsion alone degrades to rank-only.
Fidelity classify_fidelity(const GroupExpr& e) {
    bool rank_only = false;
    for (const auto& s : e.summands()) {
        switch (s.atom.kind) {
            case GroupAtom::Kind::UnitsQuotient:
            case GroupAtom::Kind::UnitsKernel:
            case GroupAtom::Kind::UniquelyDivisible:
            case GroupAtom::Kind::FieldUnits:
                return Fidelity::Symbolic;
            case GroupAtom::Kind::UnknownTorsion:
                rank_only = true;
                break;
            default:
                break;
        }
    }
    return rank_only ? Fidelity::RankOnly : Fidelity::Exact;
}

mpz_class pow_minus_one(const mpz_class& q, unsigned long j) {
    mpz_class m;
    mpz_pow_ui(m.get_mpz_t(), q.get_mpz_t(), j);
    return m - 1;
}

}  // namespace

std::string to_string(Fidelity f) {
    switch (f) {
        case Fidelity::Exact: return "EXACT";
        case Fidelity::RankOnly: return "RANK_ONLY";
        case Fidelity::Symbolic: return "SYMBOLIC";
    }
    return "?";
}

FgAbGroup k0(const Graph& g) { return cokernel_over_z(presentation_matrix(g)); }

GroupExpr k_group_split(const Graph& g, const FieldSpec& field, long long n) {
    if (n <= -1) return GroupExpr::zero();
    VertexPartition part = partition_vertices(g);
    DecompositionData dd = decomposition_data(presentation_matrix(g), part.singular.size());

    GroupExpr kn = field_k_group(field, n);
    GroupExpr kn_prev = field_k_group(field, n - 1);

    // coker side: one quotient per invariant factor >= 2, plus a full copy
    // of K_n(k) for each zero column and each singular vertex.
    GroupExpr result = kn.power(SummandMult::finite(static_cast<long long>(dd.m + dd.s)));
    for (const auto& d : dd.factors) {
        result = result.direct_sum(quotient_by(kn, d));
    }
    // kernel side on K_{n-1}(k).
    result = result.direct_sum(kn_prev.power(SummandMult::finite(static_cast<long long>(dd.m))));
    for (const auto& d : dd.factors) {
        result = result.direct_sum(kernel_of(kn_prev, d));
    }
    return result;
}

GroupExpr k1(const Graph& g, const FieldSpec& field) { return k_group_split(g, field, 1); }

FgAbGroup k_group_finite_field(const Graph& g, const mpz_class& q, long long n) {
    if (!is_prime_power(q)) throw std::invalid_argument("finite field size must be a prime power");
    if (n <= -1) return FgAbGroup::trivial();
    if (n == 0) return k0(g);
    if (n == 1) {
        auto fg = to_fg(k1(g, FieldSpec::finite_field(q)));
        if (!fg) throw std::logic_error("K_1 over a finite field must be finitely generated");
        return *fg;
    }
    const unsigned long j = static_cast<unsigned long>((n + 1) / 2);
    mpz_class modulus = pow_minus_one(q, j);
    if (modulus == 1) return FgAbGroup::trivial();  // q = 2, j = 1
    const IntMatrix pres = presentation_matrix(g);
    return n % 2 == 0 ? kernel_mod(pres, modulus) : cokernel_mod(pres, modulus);
}

GroupExpr k_group_alg_closed(const Graph& g, const mpz_class& characteristic, long long n) {
    return k_group_split(g, FieldSpec::alg_closed(characteristic), n);
}

GroupExpr k_group_det_nonzero(const Graph& g, const mpz_class& characteristic, long long n) {
    VertexPartition part = partition_vertices(g);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Multiplicity out = g.out_multiplicity(v);
        if (out.is_infinite()) {
            throw std::invalid_argument("precondition failed: graph has an infinite emitter (" +
                                        g.vertex_name(v) + ")");
        }
        if (out.is_zero()) {
            throw std::invalid_argument("precondition failed: graph has a sink (" +
                                        g.vertex_name(v) + ")");
        }
    }
    const IntMatrix pres = presentation_matrix(g);  // square: no singular vertices
    mpz_class det = pres.determinant();
    if (det == 0) {
        throw std::invalid_argument("precondition failed: det(A^t - I) = 0");
    }

    if (n <= -1) return GroupExpr::zero();
    if (n == 0) return GroupExpr::from_fg(k0(g));
    if (n % 2 == 1) return GroupExpr::zero();

    GroupAtom torsion_part = characteristic == 0 ? GroupAtom::q_mod_z()
                                                 : GroupAtom::q_mod_z_inv_p(characteristic);
    auto even_value = [&]() {
        GroupExpr e;
        for (const auto& f : smith_normal_form(pres).invariant_factors) {
            e = e.direct_sum(kernel_of(GroupExpr::atom(torsion_part), f));
        }
        return e;
    };
    GroupExpr result = even_value();
    // weak Bott periodicity: every even positive K-group equals K_2
    if (!(result == even_value())) {
        throw std::logic_error("weak Bott periodicity violated");
    }
    return result;
}

KGroupResult k_group_number_field(const Graph& g, int r1, int r2, long long n) {
    FieldSpec field = FieldSpec::number_field(r1, r2);
    if (n < 2) {
        throw std::invalid_argument("k_group_number_field handles n >= 2; use k0/k1 below that");
    }
    ExtValue rn = rank_of(field_k_group(field, n));
    ExtValue rn_prev = rank_of(field_k_group(field, n - 1));
    if (!rn.is_finite() || !rn_prev.is_finite()) {
        throw std::invalid_argument("unsupported index n = " + std::to_string(n) +
                                    ": rank of K_" + std::to_string(n - 1) +
                                    "(k) is not finite");
    }
    VertexPartition part = partition_vertices(g);
    DecompositionData dd = decomposition_data(presentation_matrix(g), part.singular.size());
    long long rank = rn.value * static_cast<long long>(dd.m + dd.s) +
                     rn_prev.value * static_cast<long long>(dd.m);

    GroupExpr e;
    if (rank > 0) e = GroupExpr::atom(GroupAtom::z(), SummandMult::finite(rank));
    e = e.direct_sum(GroupExpr::atom(GroupAtom::unknown_torsion()));
    return KGroupResult{n, e, Fidelity::RankOnly};
}

KGroupResult k_group(const Graph& g, const FieldSpec& field, long long n) {
    if (n <= -1) return KGroupResult{n, GroupExpr::zero(), Fidelity::Exact};
    if (n == 0) return KGroupResult{n, GroupExpr::from_fg(k0(g)), Fidelity::Exact};
    if (n == 1) {
        GroupExpr e = k1(g, field);
        return KGroupResult{n, e, classify_fidelity(e)};
    }
    switch (field.kind) {
        case FieldSpec::Kind::FiniteField:
            return KGroupResult{n, GroupExpr::from_fg(k_group_finite_field(g, field.q, n)),
                                Fidelity::Exact};
        case FieldSpec::Kind::AlgClosed: {
            GroupExpr e = k_group_alg_closed(g, field.characteristic, n);
            return KGroupResult{n, e, classify_fidelity(e)};
        }
        case FieldSpec::Kind::NumberField:
            return k_group_number_field(g, field.r1, field.r2, n);
    }
    throw std::logic_error("unreachable field kind");
}

}  // namespace lpa
