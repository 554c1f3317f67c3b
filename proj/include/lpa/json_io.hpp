#pragma once

#include <json.hpp>

#include "lpa/abelian.hpp"
#include "lpa/classify.hpp"
#include "lpa/field.hpp"
#include "lpa/group_expr.hpp"
#include "lpa/ktheory.hpp"
#include "lpa/matrix.hpp"
#include "lpa/snf.hpp"

namespace lpa {

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms parse back.
nlohmann::json mpz_to_json(const mpz_class& v);
mpz_class mpz_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json fg_to_json(const FgAbGroup& g);
FgAbGroup fg_from_json(const nlohmann::json& j);

nlohmann::json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const nlohmann::json& j);

nlohmann::json expr_to_json(const GroupExpr& e);
GroupExpr expr_from_json(const nlohmann::json& j);

nlohmann::json snf_to_json(const SNFResult& r);
nlohmann::json kgroup_to_json(const KGroupResult& r);
nlohmann::json morita_to_json(const MoritaDecision& d);

}  // namespace lpa
