#pragma once

#include <string>
#include <vector>

#include "qdga/file_format.hpp"

namespace qdga::testing {

inline std::string fixture_path(const std::string& name) { return std::string(QDGA_FIXTURE_DIR) + "/" + name; }

inline const std::vector<std::string>& presentation_fixtures() {
  static const std::vector<std::string> names{"S2.dga", "S2xS3.dga", "S3.dga", "Tx2.dga",
                                              "Tx3.dga", "empty.dga", "koszul.dga"};
  return names;
}

inline Presentation load_presentation(const std::string& name) {
  return std::get<Presentation>(load_document(fixture_path(name)));
}

}  // namespace qdga::testing
