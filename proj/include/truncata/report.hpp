#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace truncata {

/// One exact witness of a failed identity: the location (a z-power or a
/// relation instance) and the nonzero residual matrix in text form.
struct Witness {
  std::string where;
  std::string residual_matrix;
};

/// Pass/fail record of a single verification with exact witnesses.
struct Report {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  int order = 0;
  bool pass = true;
  std::vector<Witness> witnesses;
  std::string convention;  // empty for Yangian-side checks
  std::vector<std::string> notes;

  void param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
  }
  void fail(const std::string& where, const std::string& residual) {
    pass = false;
    witnesses.push_back({where, residual});
  }
  std::string status() const { return pass ? "pass" : "fail"; }
};

nlohmann::ordered_json report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace truncata
