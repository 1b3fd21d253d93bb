#include "realcurves/serialize.hpp"

#include <stdexcept>

namespace realcurves {

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const AbGroupDescriptor& g) {
  Json j;
  j["free_rank"] = g.free_rank;
  j["qz"] = g.qz;
  j["z4"] = g.z4;
  j["zn"] = g.zn ? Json{{"n", g.zn->n}, {"count", g.zn->count}} : Json(nullptr);
  j["z2"] = g.z2;
  return j;
}

AbGroupDescriptor group_from_json(const Json& j) {
  AbGroupDescriptor g;
  g.free_rank = j.at("free_rank").get<int>();
  g.qz = j.at("qz").get<int>();
  g.z4 = j.at("z4").get<int>();
  g.z2 = j.at("z2").get<int>();
  if (j.contains("zn") && !j.at("zn").is_null()) {
    g.zn = CyclicPart{j.at("zn").at("n").get<int>(), j.at("zn").at("count").get<int>()};
  }
  g.validate();
  return g;
}

Json to_json(const CohomologyDims& dims) {
  return Json{{"h0", dims.h0}, {"h1", dims.h1}, {"h2", dims.h2}, {"h_stable", dims.h_stable}};
}

Json to_json(const CurveInvariants& inv) {
  Json j;
  j["d"] = optional_int(inv.d);
  j["d_prime"] = optional_int(inv.d_prime);
  j["k"] = optional_int(inv.k);
  j["k_prime"] = optional_int(inv.k_prime);
  j["g"] = inv.g;
  j["r"] = inv.r;
  j["c"] = inv.c;
  j["s"] = inv.s;
  j["t"] = inv.t;
  j["complete"] = inv.complete;
  j["geometrically_connected"] = inv.geometrically_connected;
  j["level_of_function_field"] = std::string(to_string(inv.level_of_function_field));
  return j;
}

Json to_json(const ECPoint& p) {
  if (p.is_infinity()) return Json{{"infinity", true}, {"v", nullptr}, {"u", nullptr}};
  return Json{{"infinity", false}, {"v", p.v().str()}, {"u", p.u().str()}};
}

Json to_json(const QuarticParams& params) {
  return Json{{"k", params.k}, {"a", params.a.str()}, {"b", params.b.str()}, {"c", params.c.str()}};
}

Json to_json(const EtaResult& eta) {
  Json cert;
  cert["kind"] = std::string(to_string(eta.certificate.kind));
  cert["relation"] = eta.certificate.relation ? Json(eta.certificate.relation->str()) : Json(nullptr);
  cert["order"] = optional_int(eta.certificate.order);
  Json cases = Json::array();
  for (const auto& rel : eta.certificate.cases_checked) cases.push_back(rel.str());
  cert["cases_checked"] = std::move(cases);
  Json j;
  j["eta"] = optional_int(eta.value);
  j["certificate"] = std::move(cert);
  return j;
}

Json to_json(const LevelReport& level) {
  return Json{{"coordinate_ring", std::string(to_string(level.level))}, {"reason", level.reason}};
}

Json to_json(const GroupCandidate& candidate) {
  return Json{{"eta", candidate.eta}, {"group", to_json(candidate.group)}, {"text", format(candidate.group)}};
}

}  // namespace realcurves
