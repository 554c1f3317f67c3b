#include "lpa/json_io.hpp"

#include <stdexcept>

namespace lpa {

using nlohmann::json;

json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

mpz_class mpz_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer or decimal string");
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(mpz_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw std::invalid_argument("matrix rows must be arrays of equal length");
        }
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = mpz_from_json(j[i][c]);
    }
    return m;
}

json fg_to_json(const FgAbGroup& g) {
    json out;
    out["free_rank"] = g.free_rank();
    json torsion = json::array();
    for (const auto& d : g.torsion()) torsion.push_back(mpz_to_json(d));
    out["torsion"] = torsion;
    out["rendered"] = g.to_string();
    return out;
}

FgAbGroup fg_from_json(const json& j) {
    std::vector<mpz_class> torsion;
    for (const auto& d : j.at("torsion")) torsion.push_back(mpz_from_json(d));
    return FgAbGroup(j.at("free_rank").get<std::size_t>(), std::move(torsion));
}

json field_to_json(const FieldSpec& f) {
    json out;
    switch (f.kind) {
        case FieldSpec::Kind::FiniteField:
            out["kind"] = "finite_field";
            out["q"] = mpz_to_json(f.q);
            break;
        case FieldSpec::Kind::AlgClosed:
            out["kind"] = "alg_closed";
            out["characteristic"] = mpz_to_json(f.characteristic);
            break;
        case FieldSpec::Kind::NumberField:
            out["kind"] = "number_field";
            out["r1"] = f.r1;
            out["r2"] = f.r2;
            break;
    }
    return out;
}

FieldSpec field_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite_field") return FieldSpec::finite_field(mpz_from_json(j.at("q")));
    if (kind == "alg_closed") return FieldSpec::alg_closed(mpz_from_json(j.at("characteristic")));
    if (kind == "number_field") {
        return FieldSpec::number_field(j.at("r1").get<int>(), j.at("r2").get<int>());
    }
    throw std::invalid_argument("unknown field kind: " + kind);
}

namespace {

json atom_to_json(const GroupAtom& a) {
    json out;
    switch (a.kind) {
        case GroupAtom::Kind::Z:
            out["kind"] = "z";
            break;
        case GroupAtom::Kind::Cyclic:
            out["kind"] = "cyclic";
            out["d"] = mpz_to_json(a.d);
            break;
        case GroupAtom::Kind::UniquelyDivisible:
            out["kind"] = "uniquely_divisible";
            out["tag"] = a.tag;
            break;
        case GroupAtom::Kind::QmodZ:
            out["kind"] = "q_mod_z";
            break;
        case GroupAtom::Kind::QmodZInvP:
            out["kind"] = "q_mod_z_inv_p";
            out["p"] = mpz_to_json(a.p);
            break;
        case GroupAtom::Kind::FieldUnits:
            out["kind"] = "field_units";
            out["field"] = field_to_json(a.field);
            break;
        case GroupAtom::Kind::UnknownTorsion:
            out["kind"] = "unknown_torsion";
            break;
        case GroupAtom::Kind::UnitsQuotient:
            out["kind"] = "units_quotient";
            out["field"] = field_to_json(a.field);
            out["d"] = mpz_to_json(a.d);
            break;
        case GroupAtom::Kind::UnitsKernel:
            out["kind"] = "units_kernel";
            out["field"] = field_to_json(a.field);
            out["d"] = mpz_to_json(a.d);
            break;
    }
    return out;
}

GroupAtom atom_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "z") return GroupAtom::z();
    if (kind == "cyclic") return GroupAtom::cyclic(mpz_from_json(j.at("d")));
    if (kind == "uniquely_divisible") return GroupAtom::uniquely_divisible(j.at("tag").get<int>());
    if (kind == "q_mod_z") return GroupAtom::q_mod_z();
    if (kind == "q_mod_z_inv_p") return GroupAtom::q_mod_z_inv_p(mpz_from_json(j.at("p")));
    if (kind == "field_units") return GroupAtom::field_units(field_from_json(j.at("field")));
    if (kind == "unknown_torsion") return GroupAtom::unknown_torsion();
    if (kind == "units_quotient") {
        return GroupAtom::units_quotient(field_from_json(j.at("field")), mpz_from_json(j.at("d")));
    }
    if (kind == "units_kernel") {
        return GroupAtom::units_kernel(field_from_json(j.at("field")), mpz_from_json(j.at("d")));
    }
    throw std::invalid_argument("unknown atom kind: " + kind);
}

}  // namespace

json expr_to_json(const GroupExpr& e) {
    json out;
    json summands = json::array();
    for (const auto& s : e.summands()) {
        json item;
        item["atom"] = atom_to_json(s.atom);
        if (s.mult.infinite) {
            item["mult"] = "inf";
        } else {
            item["mult"] = s.mult.count;
        }
        summands.push_back(item);
    }
    out["summands"] = summands;
    out["rendered"] = e.to_string();
    return out;
}

GroupExpr expr_from_json(const json& j) {
    GroupExpr e;
    for (const auto& item : j.at("summands")) {
        SummandMult m;
        if (item.at("mult").is_string()) {
            if (item.at("mult").get<std::string>() != "inf") {
                throw std::invalid_argument("summand multiplicity must be an integer or \"inf\"");
            }
            m = SummandMult::inf();
        } else {
            m = SummandMult::finite(item.at("mult").get<long long>());
        }
        e = e.direct_sum(GroupExpr::atom(atom_from_json(item.at("atom")), m));
    }
    return e;
}

json snf_to_json(const SNFResult& r) {
    json out;
    out["u"] = matrix_to_json(r.u);
    out["d"] = matrix_to_json(r.d);
    out["v"] = matrix_to_json(r.v);
    json factors = json::array();
    for (const auto& f : r.invariant_factors) factors.push_back(mpz_to_json(f));
    out["invariant_factors"] = factors;
    return out;
}

json kgroup_to_json(const KGroupResult& r) {
    json out;
    out["n"] = r.n;
    out["group"] = expr_to_json(r.group);
    out["fidelity"] = to_string(r.fidelity);
    return out;
}

json morita_to_json(const MoritaDecision& d) {
    json out;
    out["verdict"] = to_string(d.verdict);
    out["k0_left"] = fg_to_json(d.k0_left);
    out["k0_right"] = fg_to_json(d.k0_right);
    out["singular_left"] = d.singular_left;
    out["singular_right"] = d.singular_right;
    if (d.verdict != MoritaVerdict::PreconditionFailed) {
        out["theorem_route"] = d.theorem_route;
        out["singular_recovery_cross_check"] = d.recovery_cross_check;
    }
    if (d.failed_precondition) {
        out["failed_precondition"] = *d.failed_precondition;
    }
    return out;
}

}  // namespace lpa
