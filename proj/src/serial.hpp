#pragma once

#include <json.hpp>

#include "dynamics.hpp"
#include "matroid.hpp"
#include "modular.hpp"

namespace polylab {

using nlohmann::json;

json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

json triple_to_json(const Triple& t);
Triple triple_from_json(const FieldSpec& f, const json& j);

json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const json& j);

json matroid_to_json(const Rank3Matroid& m);
Rank3Matroid matroid_from_json(const json& j);

json cubic_to_json(const PlaneCubic& c);
PlaneCubic cubic_from_json(const json& j);

json profile_to_json(const SingularityProfile& p);
json verify_report_to_json(const VerifyReport& r);
json fiber_histogram_to_json(const FiberHistogram& h);
json period_rows_to_json(const std::vector<PeriodRow>& rows);
std::string period_rows_to_csv(const std::vector<PeriodRow>& rows);
json orbit_record_to_json(const OrbitRecord& rec);

/// Torsion bundle: curve + origin + t + n (+ progression point when present).
json torsion_bundle_to_json(const TorsionDatum& d, const ProjPoint* p);
TorsionDatum torsion_datum_from_json(const json& j);

}  // namespace polylab
