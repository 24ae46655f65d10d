#include "truncata/report.hpp"

#include <sstream>

namespace truncata {

nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["order"] = r.order;
  j["status"] = r.status();
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json jw;
    jw["power"] = w.where;
    jw["residual_matrix"] = w.residual_matrix;
    ws.push_back(jw);
  }
  j["witnesses"] = ws;
  if (!r.convention.empty()) j["convention"] = r.convention;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << r.check;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << " order=" << r.order;
  if (!r.convention.empty()) os << " convention=" << r.convention;
  for (const auto& note : r.notes) os << "\n      note: " << note;
  for (const auto& w : r.witnesses)
    os << "\n      at " << w.where << ": residual " << w.residual_matrix;
  return os.str();
}

}  // namespace truncata
