#pragma once

#include <optional>

#include <json.hpp>

#include "sgfl/factorization.hpp"
#include "sgfl/kunz.hpp"
#include "sgfl/minrepl.hpp"
#include "sgfl/semigroup.hpp"
#include "sgfl/verdict.hpp"

namespace sgfl {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaId = "sgfl/1";

/// Integers for d = 1, arrays otherwise.
Json to_json(const Element& e);
Json to_json(const Semigroup& s);
Json to_json(const LengthSummary& summary);
Json to_json(const Semigroup& s, const MinReplReport& report);
/// With `all` false only the first counterexample is listed; oracle scans
/// list their checked elements only when `all` is set.
Json to_json(const Verdict& v, bool all);
Json to_json(const InfFactorization& f);
Json to_json(const InequalityTemplate& t);
Json to_json(const KunzVerdict& v);
/// Poset, atoms, infinite factorizations and pseudominimal set of a point.
Json to_json(const KunzPoint& p);

}  // namespace sgfl
