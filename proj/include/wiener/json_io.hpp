#pragma once

#include <json.hpp>

#include "wiener/classify.hpp"
#include "wiener/closed_form.hpp"
#include "wiener/enumerate.hpp"
#include "wiener/graph.hpp"
#include "wiener/verify.hpp"

namespace wiener {

// Field names here are the stable machine interface of the CLI. Insertion
// order is preserved so output is byte-for-byte deterministic.
using Json = nlohmann::ordered_json;

Json edges_json(const std::vector<Edge>& edges);
Json profile_json(const Graph& g, const TransmissionProfile& p);
Json witness_json(const Witness& w);
Json verdict_json(const Verdict& v);
Json layer_sets_json(const LayerSets& s);
Json census_json(const Census& c, bool ti_only);

Json point_json(TheoremId id, const PointResult& r);
// Throws VerifyError on records that do not follow the report schema.
PointResult point_from_json(const Json& j);
Json report_json(const VerificationReport& r);

}  // namespace wiener
