// JSON serialization for report types.  Big integers are serialized as
// decimal strings since they routinely exceed 64-bit and double ranges.
#pragma once

#include <json.hpp>

#include "salemscope/powerpoly.hpp"
#include "salemscope/probability.hpp"
#include "salemscope/salem.hpp"

namespace salemscope {

nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json to_json(const PowerPolyResult& r);
nlohmann::json to_json(const VieiraCheck& c);
nlohmann::json to_json(const BoundCheckRecord& r);
nlohmann::json to_json(const CertificateReport& r);
nlohmann::json to_json(const ProbEstimate& e);
nlohmann::json to_json(const FrequencyResult& f);

}  // namespace salemscope
