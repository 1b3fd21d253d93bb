#pragma once

#include <nlohmann/json.hpp>

#include "realcurves/abgroup.hpp"
#include "realcurves/cohomology.hpp"
#include "realcurves/curve.hpp"
#include "realcurves/elliptic.hpp"
#include "realcurves/eta.hpp"
#include "realcurves/picard.hpp"

namespace realcurves {

using Json = nlohmann::ordered_json;

/// {"free_rank":a,"qz":q,"z4":c,"zn":{"n":n,"count":m}|null,"z2":b}
Json to_json(const AbGroupDescriptor& g);
/// Inverse of to_json; throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
AbGroupDescriptor group_from_json(const Json& j);

Json to_json(const CohomologyDims& dims);
Json to_json(const CurveInvariants& inv);
Json to_json(const ECPoint& p);
Json to_json(const QuarticParams& params);
/// {"eta":0|1|null,"certificate":{"kind":...,"relation":...,"order":...,"cases_checked":[...]}}
Json to_json(const EtaResult& eta);
Json to_json(const LevelReport& level);
/// {"eta":e,"group":{...},"text":"..."}
Json to_json(const GroupCandidate& candidate);

}  // namespace realcurves
