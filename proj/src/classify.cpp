#include "lpa/classify.hpp"

#include <stdexcept>

#include "lpa/ktheory.hpp"
#include "lpa/snf.hpp"

namespace lpa {

SizeFunction SizeFunction::rank() {
    return {Name::Rank, Exactness::ExactSize, "rank",
            [](const GroupExpr& e) { return rank_of(e); }};
}

SizeFunction SizeFunction::corank() {
    return {Name::Corank, Exactness::SizeOnly, "corank",
            [](const GroupExpr& e) { return corank_of(e); }};
}

SizeFunction SizeFunction::custom(std::string label, Exactness exactness,
                                  std::function<ExtValue(const GroupExpr&)> fn) {
    return {Name::Custom, exactness, std::move(label), std::move(fn)};
}

namespace {

long long require_finite(const ExtValue& v, const std::string& what) {
    if (v.kind == ExtValue::Kind::Unknown) {
        throw std::invalid_argument(what + " is unknown");
    }
    if (v.kind == ExtValue::Kind::Infinity) {
        throw std::invalid_argument(what + " is infinite");
    }
    return v.value;
}

long long exact_quotient(long long num, long long den, const std::string& context) {
    if (num < 0) throw std::invalid_argument(context + ": negative singular count");
    if (num % den != 0) throw std::invalid_argument(context + ": non-integral singular count");
    return num / den;
}

}  // namespace

long long predicted_f_value(const Graph& g, const FieldSpec& field, long long n,
                            const SizeFunction& f) {
    if (n < 1) throw std::invalid_argument("predicted_f_value needs n >= 1");
    long long fkn = require_finite(f.value_on(field_k_group(field, n)), "F(K_n(k))");
    long long fprev = require_finite(f.value_on(field_k_group(field, n - 1)), "F(K_{n-1}(k))");
    VertexPartition part = partition_vertices(g);
    long long s = static_cast<long long>(part.singular.size());
    long long rank_k0 = static_cast<long long>(rank_fg(k0(g)));

    if (f.exactness == SizeFunction::Exactness::ExactSize) {
        return (fkn + fprev) * rank_k0 - s * fprev;
    }
    if (fkn != 0) {
        throw std::invalid_argument("size-only hypothesis requires F(K_n(k)) = 0");
    }
    return (rank_k0 - s) * fprev;
}

long long singular_count_exact_size(const FieldSpec& field, long long n, const SizeFunction& f,
                                    long long rank_k0, long long f_kn_l) {
    if (f.exactness != SizeFunction::Exactness::ExactSize) {
        throw std::invalid_argument("singular_count_exact_size needs an exact size function");
    }
    long long fkn = require_finite(f.value_on(field_k_group(field, n)), "F(K_n(k))");
    long long fprev = require_finite(f.value_on(field_k_group(field, n - 1)), "F(K_{n-1}(k))");
    if (fprev <= 0) throw std::invalid_argument("hypothesis 0 < F(K_{n-1}(k)) fails");
    return exact_quotient((fkn + fprev) * rank_k0 - f_kn_l, fprev, "singular_count_exact_size");
}

long long singular_count_size(const FieldSpec& field, long long n, const SizeFunction& f,
                              long long rank_k0, long long f_kn_l) {
    long long fkn = require_finite(f.value_on(field_k_group(field, n)), "F(K_n(k))");
    long long fprev = require_finite(f.value_on(field_k_group(field, n - 1)), "F(K_{n-1}(k))");
    if (fkn != 0) throw std::invalid_argument("hypothesis F(K_n(k)) = 0 fails");
    if (fprev <= 0) throw std::invalid_argument("hypothesis 0 < F(K_{n-1}(k)) fails");
    return exact_quotient(rank_k0 * fprev - f_kn_l, fprev, "singular_count_size");
}

long long singular_count_number_field(int r1, int r2, long long k, long long rank_k0,
                                      long long rank_kn_l) {
    FieldSpec field = FieldSpec::number_field(r1, r2);
    if (k < 0) throw std::invalid_argument("index parameter k must be >= 0");
    return singular_count_size(field, 6 + 4 * k, SizeFunction::rank(), rank_k0, rank_kn_l);
}

long long singular_count_number_field_complex(int r1, int r2, long long k, long long rank_k0,
                                              long long rank_kn_l) {
    if (r2 < 1) {
        throw std::invalid_argument("index family 4 + 4k needs a field that is not totally real");
    }
    FieldSpec field = FieldSpec::number_field(r1, r2);
    if (k < 0) throw std::invalid_argument("index parameter k must be >= 0");
    return singular_count_size(field, 4 + 4 * k, SizeFunction::rank(), rank_k0, rank_kn_l);
}

std::string to_string(MoritaVerdict v) {
    switch (v) {
        case MoritaVerdict::Equivalent: return "EQUIVALENT";
        case MoritaVerdict::NotEquivalent: return "NOT_EQUIVALENT";
        case MoritaVerdict::PreconditionFailed: return "PRECONDITION_FAILED";
    }
    return "?";
}

namespace {

std::optional<std::string> check_preconditions(const Graph& g, const std::string& side) {
    if (!is_simple(g)) return side + " graph is not simple";
    if (!has_infinitely_many_edges(g)) return side + " graph has only finitely many edges";
    return std::nullopt;
}

// Hypothesis route of the decision for this field family, plus the
// size-function recovery of the singular count from predicted K-data.
struct Route {
    std::string description;
    SizeFunction f;
    long long n;
};

Route route_for(const FieldSpec& field) {
    if (field.kind == FieldSpec::Kind::NumberField) {
        return {"exact size function rank at n = 6 (number field: rank K_6(k) = 0, rank K_5(k) = r1 + r2 > 0)",
                SizeFunction::rank(), 6};
    }
    return {"size function corank at n = 1 (corank K_1(k) = 0: field with no free quotients; corank K_0(k) = 1)",
            SizeFunction::corank(), 1};
}

bool recovery_matches(const Graph& g, const FieldSpec& field, const Route& route) {
    long long predicted = predicted_f_value(g, field, route.n, route.f);
    long long rank_k0 = static_cast<long long>(rank_fg(k0(g)));
    long long recovered =
        route.f.exactness == SizeFunction::Exactness::ExactSize
            ? singular_count_exact_size(field, route.n, route.f, rank_k0, predicted)
            : singular_count_size(field, route.n, route.f, rank_k0, predicted);
    return recovered == static_cast<long long>(partition_vertices(g).singular.size());
}

}  // namespace

MoritaDecision morita_equivalent(const Graph& e, const Graph& f, const FieldSpec& field) {
    MoritaDecision d;
    d.k0_left = k0(e);
    d.k0_right = k0(f);
    d.singular_left = partition_vertices(e).singular.size();
    d.singular_right = partition_vertices(f).singular.size();

    auto failure = check_preconditions(e, "left");
    if (!failure) failure = check_preconditions(f, "right");
    if (failure) {
        d.verdict = MoritaVerdict::PreconditionFailed;
        d.failed_precondition = failure;
        return d;
    }

    Route route = route_for(field);
    d.theorem_route = route.description;
    d.recovery_cross_check = recovery_matches(e, field, route) && recovery_matches(f, field, route);

    bool equivalent =
        is_isomorphic(d.k0_left, d.k0_right) && d.singular_left == d.singular_right;
    d.verdict = equivalent ? MoritaVerdict::Equivalent : MoritaVerdict::NotEquivalent;
    return d;
}

}  // namespace lpa
