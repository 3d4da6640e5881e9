#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qdga/algebra_complex.hpp"
#include "qdga/bar.hpp"
#include "qdga/complex.hpp"
#include "qdga/presentation.hpp"

namespace qdga {

// Reduced Hochschild complex of an augmented algebra with coefficients in Q,
// both actions through the augmentation. Chains Q (x) A-bar^{(x) n} carry the
// same total degree as the matching bar words; the cochain side is the graded
// dual, living in degree -n.
struct HochschildComplex {
  Presentation source;
  CochainComplex chains;    // degrees [lo-1, hi+1]
  CochainComplex cochains;  // degrees [-(hi+1), -(lo-1)]
  std::map<int, std::vector<BarWord>> words;  // by chain degree
  std::map<int, std::map<BarWord, std::size_t>> index;
  Truncation truncation;
  int lo = 0;
  int hi = -1;
};

HochschildComplex hochschild_complex(const Presentation& a, int lo, int hi, int max_weight);

struct HochschildReport {
  CohomologyReport homology;    // chain degrees [lo, hi]
  CohomologyReport cohomology;  // cochain degrees [-hi, -lo]
  Truncation truncation;
};

/// Both sides over the chain window [lo, hi]. max_weight defaults to
/// bar_auto_weight(a, lo, hi, 6).
HochschildReport hochschild_trivial_coefficients(const Presentation& a, int lo, int hi,
                                                 std::optional<int> max_weight = std::nullopt);

}  // namespace qdga
