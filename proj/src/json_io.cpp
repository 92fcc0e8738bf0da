#include "wiener/json_io.hpp"

#include <string>

namespace wiener {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json collisions_json(const std::vector<CollisionWitness>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(Json::array({c.u, c.v, c.value}));
  return out;
}

}  // namespace

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({e.u, e.v}));
  return out;
}

Json profile_json(const Graph& g, const TransmissionProfile& p) {
  Json j;
  j["n"] = g.order();
  j["m"] = g.size();
  j["transmissions"] = p.transmissions;
  j["wiener"] = p.wiener;
  j["complexity"] = p.complexity;
  j["transmission_set"] = p.transmission_set;
  j["collisions"] = edges_json(p.collisions);
  j["is_irregular"] = p.is_irregular;
  j["is_regular"] = p.is_regular;
  return j;
}

Json witness_json(const Witness& w) {
  return std::visit(
      Overloaded{
          [](const std::monostate&) { return Json(nullptr); },
          [](const ExceptionalTriple& t) {
            Json j;
            j["kind"] = "exceptional-set";
            j["set"] = to_string(t.which);
            j["indices"] = Json::array({t.lower, t.upper});
            j["p"] = t.p;
            j["gcd"] = t.gcd;
            j["anchor"] = t.anchor;
            const auto triple = reconstruct(t);
            j["triple"] = Json::array({triple[0], triple[1], triple[2]});
            return j;
          },
          [](const ArmConditionFailure& f) {
            Json j;
            j["kind"] = "arm-condition";
            j["rule"] = f.rule;
            return j;
          },
          [](const LayerCollision& c) {
            Json j;
            j["kind"] = "layer-collision";
            j["layer"] = c.layer;
            j["value"] = c.value;
            return j;
          },
          [](const SquareHit& s) {
            Json j;
            j["kind"] = "square";
            j["value"] = s.value;
            j["root"] = s.root;
            return j;
          },
          [](const SetIntersection& s) {
            Json j;
            j["kind"] = "set-intersection";
            j["value"] = s.value;
            return j;
          },
          [](const LinearSolution& s) {
            Json j;
            j["kind"] = "linear-solution";
            j["p"] = s.p;
            return j;
          },
          [](const FilterHit& f) {
            Json j;
            j["kind"] = "filter";
            j["edges"] = edges_json(f.edges);
            return j;
          },
      },
      w);
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.status);
  j["source"] = to_string(v.source);
  j["witness"] = witness_json(v.witness);
  return j;
}

Json layer_sets_json(const LayerSets& s) {
  Json j;
  j["family"] = to_string(s.family);
  Json params = Json::object();
  for (const auto& [name, value] : s.params) params[name] = value;
  j["params"] = params;
  if (s.constant) {
    j["constant"] = Json{{s.constant->first, s.constant->second}};
  } else {
    j["constant"] = nullptr;
  }
  j["offset_base"] = s.offset_base;
  j["base_is_vertex"] = s.base_is_vertex;
  Json layers = Json::object();
  for (const auto& [index, values] : s.layers) layers[std::to_string(index)] = values;
  j["layers"] = layers;
  Json named = Json::object();
  for (const auto& [name, values] : s.named) named[name] = values;
  j["named"] = named;
  Json anchors = Json::object();
  for (const auto& [name, value] : s.anchors) anchors[name] = value;
  j["anchors"] = anchors;
  return j;
}

Json census_json(const Census& c, bool ti_only) {
  Json j;
  j["order"] = c.order;
  j["trees"] = c.trees;
  if (!ti_only) {
    Json hist = Json::object();
    for (const auto& [complexity, count] : c.complexity_histogram) {
      hist[std::to_string(complexity)] = count;
    }
    j["complexity_histogram"] = hist;
  }
  j["irregular"] = c.irregular;
  Json witnesses = Json::array();
  for (const auto& edges : c.irregular_witnesses) witnesses.push_back(edges_json(edges));
  j["irregular_witnesses"] = witnesses;
  return j;
}

Json point_json(TheoremId id, const PointResult& r) {
  Json j;
  j["theorem"] = to_string(id);
  j["key"] = r.key;
  Json params = Json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = params;
  j["instance"] = r.instance;
  j["outcome"] = to_string(r.outcome);
  j["severity"] = r.severity ? Json(to_string(*r.severity)) : Json(nullptr);
  j["claimed"] = r.claimed ? Json(to_string(*r.claimed)) : Json(nullptr);
  if (r.oracle_irregular) {
    j["oracle"] = *r.oracle_irregular ? "Irregular" : "NotIrregular";
  } else {
    j["oracle"] = nullptr;
  }
  j["collisions"] = collisions_json(r.collisions);
  j["detail"] = r.detail;
  return j;
}

PointResult point_from_json(const Json& j) {
  try {
    PointResult r;
    r.key = j.at("key").get<std::string>();
    for (const auto& [name, value] : j.at("params").items()) {
      r.params.emplace_back(name, value.get<std::int64_t>());
    }
    r.instance = j.at("instance").get<std::string>();
    const auto outcome = outcome_from_string(j.at("outcome").get<std::string>());
    if (!outcome) throw VerifyError("unknown outcome");
    r.outcome = *outcome;
    if (!j.at("severity").is_null()) {
      r.severity = severity_from_string(j.at("severity").get<std::string>());
      if (!r.severity) throw VerifyError("unknown severity");
    }
    if (!j.at("claimed").is_null()) {
      const auto text = j.at("claimed").get<std::string>();
      for (Status s : {Status::kIrregular, Status::kNotIrregular, Status::kNoVerdict}) {
        if (to_string(s) == text) r.claimed = s;
      }
      if (!r.claimed) throw VerifyError("unknown claimed status");
    }
    if (!j.at("oracle").is_null()) r.oracle_irregular = j.at("oracle") == "Irregular";
    for (const auto& c : j.at("collisions")) {
      r.collisions.push_back(
          {c.at(0).get<Vertex>(), c.at(1).get<Vertex>(), c.at(2).get<Transmission>()});
    }
    r.detail = j.at("detail").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw VerifyError(std::string("malformed report record: ") + e.what());
  }
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["theorem"] = to_string(r.theorem);
  j["points"] = r.points;
  j["agreements"] = r.agreements;
  j["no_verdict"] = r.no_verdict;
  j["mismatches"] = r.mismatches.size();
  j["errors"] = r.errors();
  j["paper_discrepancies"] = r.discrepancies();
  j["elapsed_ms"] = r.elapsed_ms;
  Json findings = Json::array();
  for (const auto& m : r.mismatches) findings.push_back(point_json(r.theorem, m));
  j["findings"] = findings;
  j["exit_code"] = r.exit_code();
  return j;
}

}  // namespace wiener
