#include "gp/json_io.hpp"

namespace gp {

using nlohmann::json;

json partition_to_json(const WordWisePartition& P) {
  json words = json::array();
  for (size_t n = 0; n < P.A.size(); ++n) {
    words.push_back({{"A", P.A[n]}, {"Ap", P.Ap[n]}});
  }
  return {{"words", words}};
}

WordWisePartition partition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("words") || !j["words"].is_array())
    throw Error("partition JSON must be an object with a \"words\" array");
  WordWisePartition P;
  for (const json& w : j["words"]) {
    if (!w.is_object() || !w.contains("A") || !w.contains("Ap"))
      throw Error("each partition entry needs \"A\" and \"Ap\" arrays");
    P.A.push_back(w["A"].get<std::set<Letter>>());
    P.Ap.push_back(w["Ap"].get<std::set<Letter>>());
  }
  return P;
}

json vstring_to_json(const VirtualString& alpha) {
  json circles = json::array();
  for (int n = 0; n < alpha.circle_count(); ++n) {
    json circle = json::array();
    for (const VEndpoint& ep : alpha.circle(n))
      circle.push_back(ep.label + (ep.is_tail ? "+" : "-"));
    circles.push_back(std::move(circle));
  }
  return {{"circles", circles}};
}

VirtualString vstring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("circles") || !j["circles"].is_array())
    throw Error("string JSON must be an object with a \"circles\" array");
  std::vector<std::vector<VEndpoint>> circles;
  for (const json& c : j["circles"]) {
    std::vector<VEndpoint> eps;
    for (const json& tok : c) {
      const std::string s = tok.get<std::string>();
      if (s.size() < 2 || (s.back() != '+' && s.back() != '-'))
        throw Error("endpoint '" + s + "' must be <label>+ or <label>-");
      eps.push_back(VEndpoint{s.substr(0, s.size() - 1), s.back() == '+'});
    }
    circles.push_back(std::move(eps));
  }
  return VirtualString(std::move(circles));
}

namespace {

json status_to_json(const ConditionStatus& s) {
  json out;
  switch (s.verdict) {
    case Verdict::pass:
      out["pass"] = true;
      break;
    case Verdict::fail:
      out["pass"] = false;
      break;
    case Verdict::indeterminate:
      out["pass"] = nullptr;
      break;
  }
  out["witness"] = s.witness.empty() ? json(nullptr) : json(s.witness);
  return out;
}

}  // namespace

json report_to_json(const ConditionReport& report) {
  json out = json::object();
  for (size_t k = 0; k < report.conditions.size(); ++k) {
    out[kConditionNames[k]] = status_to_json(report.conditions[k]);
  }
  return out;
}

json surface_to_json(const SurfaceSummary& s) {
  return {{"boundary", s.boundary_components},
          {"euler", s.euler_characteristic},
          {"genus", s.genus},
          {"planar", s.planar()}};
}

}  // namespace gp
