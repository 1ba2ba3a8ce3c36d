#include "domlab/report_json.hpp"

#include <stdexcept>

#include "json.hpp"

namespace domlab {

using Json = nlohmann::ordered_json;

namespace {

Json witness_json(const WitnessSet& w) {
  return Json{{"name", w.name}, {"graph", w.graph}, {"vertices", w.vertices.to_vector()}};
}

Json certificate_json(const Certificate& c) {
  Json j;
  if (c.graph6.size() == 1) {
    j["graph6"] = c.graph6.front();
  } else {
    j["pair"] = c.graph6;
  }
  j["clause"] = c.clause;
  Json ws = Json::array();
  for (const auto& w : c.witness_sets) ws.push_back(witness_json(w));
  j["witness_sets"] = std::move(ws);
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& r, int indent, bool include_elapsed) {
  Json j;
  j["schema"] = kReportSchema;
  j["theorem"] = r.theorem;
  j["statement"] = r.statement;
  j["corpus"] = r.corpus;
  j["scanned"] = r.scanned;
  j["holds"] = r.holds;
  j["hypothesis_not_met"] = r.hypothesis_not_met;
  j["counterexample_count"] = r.counterexample_count;
  Json cs = Json::array();
  for (const auto& c : r.counterexamples) cs.push_back(certificate_json(c));
  j["counterexamples"] = std::move(cs);
  j["member_label"] = r.member_label;
  j["members"] = r.members;
  j["member_instances"] = r.member_instances;
  if (include_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(indent);
}

VerificationReport report_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    VerificationReport r;
    r.theorem = j.at("theorem").get<std::string>();
    r.statement = j.value("statement", "");
    r.corpus = j.at("corpus").get<std::string>();
    r.scanned = j.at("scanned").get<std::int64_t>();
    r.holds = j.at("holds").get<std::int64_t>();
    r.hypothesis_not_met = j.at("hypothesis_not_met").get<std::int64_t>();
    r.counterexample_count = j.at("counterexample_count").get<std::int64_t>();
    for (const auto& c : j.at("counterexamples")) {
      Certificate cert;
      if (c.contains("graph6")) {
        cert.graph6 = {c.at("graph6").get<std::string>()};
      } else {
        cert.graph6 = c.at("pair").get<std::vector<std::string>>();
      }
      cert.clause = c.at("clause").get<std::string>();
      for (const auto& w : c.at("witness_sets")) {
        cert.witness_sets.push_back({w.at("name").get<std::string>(), w.at("graph").get<std::string>(),
                                     VertexSet::from_vector(w.at("vertices").get<std::vector<Vertex>>())});
      }
      r.counterexamples.push_back(std::move(cert));
    }
    r.member_label = j.value("member_label", "");
    r.members = j.at("members").get<std::int64_t>();
    r.member_instances = j.at("member_instances").get<std::vector<std::vector<std::string>>>();
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace domlab
