#include "qdga/report.hpp"

#include <algorithm>
#include <sstream>

namespace qdga {

bool Report::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["scenario"] = r.scenario;
  j["inputs"] = r.inputs;
  j["tables"] = nlohmann::json::array();
  for (const auto& t : r.tables) j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  j["verdicts"] = nlohmann::json::array();
  for (const auto& v : r.verdicts) j["verdicts"].push_back({{"name", v.name}, {"pass", v.pass}, {"witness", v.witness}});
  j["truncation"] = nlohmann::json::array();
  for (const auto& t : r.truncation)
    j["truncation"].push_back({{"subject", t.subject},
                               {"max_weight", t.truncation.max_weight},
                               {"exact", t.truncation.exact},
                               {"stabilized", t.truncation.stabilized}});
  j["passed"] = r.passed();
  return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

void render(std::ostream& os, const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      os << "  " << cell << std::string(width[c] - cell.size(), ' ');
    }
    os << "\n";
  };
  os << t.name << "\n";
  line(t.columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : t.rows) line(row);
  os << "\n";
}

}  // namespace

std::string render_table(const Report& r) {
  std::ostringstream os;
  os << "scenario: " << r.scenario << "\n";
  for (const auto& [k, v] : r.inputs) os << "  " << k << ": " << v << "\n";
  os << "\n";
  for (const auto& t : r.tables) render(os, t);
  if (!r.truncation.empty()) {
    Table t{"truncation", {"subject", "max_weight", "exact", "stabilized"}, {}};
    for (const auto& n : r.truncation)
      t.rows.push_back({n.subject, std::to_string(n.truncation.max_weight), n.truncation.exact ? "yes" : "no",
                        n.truncation.stabilized ? "yes" : "no"});
    render(os, t);
  }
  for (const auto& v : r.verdicts) {
    os << (v.pass ? "PASS " : "FAIL ") << v.name;
    if (!v.witness.empty()) os << "  [" << v.witness << "]";
    os << "\n";
  }
  os << (r.passed() ? "result: PASS" : "result: FAIL") << "\n";
  return os.str();
}

std::string matrix_to_string(const QMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ", ";
    s += to_string(m.row(r));
  }
  return s + "]";
}

Table cohomology_table(const std::string& name, const CohomologyReport& r) {
  Table t{name, {"degree", "dim", "cocycles", "coboundaries", "complete"}, {}};
  for (const auto& [n, d] : r.degrees)
    t.rows.push_back({std::to_string(n), std::to_string(d.dim), std::to_string(d.cocycles),
                      std::to_string(d.coboundaries), d.complete ? "yes" : "no"});
  return t;
}

}  // namespace qdga
