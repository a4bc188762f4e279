#pragma once

#include "koenigs/completeness.hpp"
#include "koenigs/demos.hpp"
#include "koenigs/hardy.hpp"

#include <nlohmann/json.hpp>

namespace koenigs {

/// Version tag carried by every JSON document the tools emit.
inline constexpr const char* kSchema = "koenigs-lab/v1";

nlohmann::json to_json(const SemigroupClass& c);
nlohmann::json to_json(const FeatureReport& f);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const PVerdict& p);
nlohmann::json to_json(const CompletenessVerdict& v);
nlohmann::json to_json(const GeometryVerdict& g);
nlohmann::json to_json(const TopologicalVerdict& t);
nlohmann::json to_json(const InftyRegion& r);
nlohmann::json to_json(const FrequencyRegion& f);
nlohmann::json to_json(const MembershipResult& m);
nlohmann::json to_json(const DemoResult& d);
nlohmann::json complex_to_json(cplx z);

} // namespace koenigs
