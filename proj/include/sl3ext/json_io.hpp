#pragma once

#include <json.hpp>

#include "sl3ext/classification.hpp"
#include "sl3ext/enumeration.hpp"
#include "sl3ext/extension.hpp"

namespace sl3ext {

using nlohmann::json;

json ring_to_json(const RingPtr& R);
RingPtr ring_from_json(const json& j);

/// Elements: decimal strings on Z and Z/n, ["num","exp"] on Z[1/m],
/// ["x","y"] on Z[theta] and its quotients.
json elem_to_json(const RingPtr& R, const Elem& x);
Elem elem_from_json(const RingPtr& R, const json& j);

json mat2_to_json(const Mat2& A);
Mat2 mat2_from_json(const json& j);
json mat3_to_json(const Mat3& A);
Mat3 mat3_from_json(const json& j);

json certificate_to_json(const RingPtr& R, const Certificate& c);
json witness_to_json(const RingPtr& R, const FullnessWitness& w);
json outcome_to_json(const Mat2& A, const ExtensionOutcome& out);

json nu_sample_to_json(const NuSample& ns);
std::string nu_sample_to_csv(const NuSample& ns);

json report_to_json(const RingClassReport& rep);
std::string reports_to_csv(const std::vector<RingClassReport>& reps);

}  // namespace sl3ext
