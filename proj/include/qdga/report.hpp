#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdga/algebra_complex.hpp"
#include "qdga/complex.hpp"
#include "qdga/linalg.hpp"

namespace qdga {

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Verdict {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct TruncationNote {
  std::string subject;
  Truncation truncation;
};

/// Self-contained scenario output: every verdict can be recomputed from
/// the tables next to it.
struct Report {
  std::string scenario;
  std::map<std::string, std::string> inputs;
  std::vector<Table> tables;
  std::vector<Verdict> verdicts;
  std::vector<TruncationNote> truncation;

  bool passed() const;
};

nlohmann::json to_json(const Report& r);
/// Sorted keys, two-space indent, trailing newline.
std::string render_json(const Report& r);
std::string render_table(const Report& r);

std::string matrix_to_string(const QMatrix& m);
Table cohomology_table(const std::string& name, const CohomologyReport& r);

}  // namespace qdga
