#ifndef UPSEMI_JSON_IO_HPP
#define UPSEMI_JSON_IO_HPP

#include <json.hpp>

#include "upsemi/algebra_file.hpp"
#include "upsemi/checks.hpp"
#include "upsemi/classify.hpp"
#include "upsemi/enumerate.hpp"
#include "upsemi/powerset.hpp"

// JSON forms of the report types. Field names are part of the tool's
// machine-readable schema (documented in the README) and must stay stable.

namespace upsemi {

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const AxiomReport& r);
nlohmann::json to_json(const LawReport& r);
nlohmann::json to_json(const DistributivityProfile& p);
nlohmann::json to_json(const ClassLabelSet& labels);
nlohmann::json to_json(const DerivedReport& r);
nlohmann::json to_json(const Prop8Report& r);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const SuiteReport& r);
nlohmann::json to_json(const EnumerationSummary& s);
nlohmann::json table_rows_json(const CayleyTable& t);

Witness witness_from_json(const nlohmann::json& j);
DistributivityProfile profile_from_json(const nlohmann::json& j);
ClassLabelSet labels_from_json(const nlohmann::json& j);
EnumerationSummary summary_from_json(const nlohmann::json& j);

} // namespace upsemi

#endif
