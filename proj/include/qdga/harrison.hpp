#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qdga/bar.hpp"
#include "qdga/complex.hpp"
#include "qdga/hochschild.hpp"

namespace qdga {

/// Signed shuffle of two bar words over a commutative presentation, with
/// Koszul signs from the suspended letter degrees. Throws ValidationError
/// on an associative presentation.
BarChain shuffle_product(const Presentation& a, const BarWord& u, const BarWord& v);
BarChain shuffle_product(const Presentation& a, const BarChain& u, const BarChain& v);

/// Cochains of the bar complex vanishing on every shuffle of two nonempty
/// words. Cochain degree -n pairs with bar degree n; the subcomplex basis in
/// degree -n is stored as the columns of inclusion.at(-n).
struct HarrisonComplex {
  BarComplex bar;
  CochainComplex complex;            // degrees [-(hi+1), -(lo-1)]
  std::map<int, QMatrix> inclusion;  // dual bar coordinates x Harrison basis
  CohomologyReport report;           // degrees [-hi, -lo]
  Truncation truncation;
};

/// Chain window [lo, hi] as for the bar complex. Throws ValidationError if
/// the shuffle-vanishing cochains are not closed under the differential.
HarrisonComplex harrison_complex(const Presentation& a, int lo, int hi,
                                 std::optional<int> max_weight = std::nullopt);

/// Spanning vectors (in bar coordinates) of the shuffle subspace in bar degree n.
std::vector<QVector> shuffle_span(const BarComplex& bar, int degree);

// Index bookkeeping. A cochain in internal degree -(i-1) is a class in
// AQ^{-i} and HH^{-i+1}, detecting pi_i.
int aq_index(int internal_degree);
int pi_index(int internal_degree);
int internal_degree_for_pi(int i);

/// Element of Q[S_n] as a map from permutation words p (the output word is
/// w[p[0]] | ... | w[p[n-1]]) to coefficients.
using GroupAlgebraElement = std::map<std::vector<int>, Rational>;

constexpr int kEulerianMaxWeight = 6;

/// First Eulerian idempotent, the logarithm of the identity under
/// deconcatenation/shuffle convolution, on n formal even letters.
/// Throws ScopeError outside 1 <= n <= kEulerianMaxWeight.
GroupAlgebraElement eulerian_idempotent(int n);

/// Product in Q[S_n]: the operator "apply x, then y".
GroupAlgebraElement group_multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

/// The idempotent acting on the weight-n words of bar degree `degree`, with
/// Koszul signs; other weights map to zero. Idempotency is checked.
QMatrix eulerian_projection(const BarComplex& bar, int degree, int weight);

struct EulerianDegree {
  std::size_t image_dim = 0;     // rank of the cochain projection, all weights
  std::size_t harrison_dim = 0;  // Harrison cochains in this degree
  bool agrees = false;           // the two subspaces coincide
};

/// Per cochain degree -n in the Harrison window: image of the sum over
/// weights of the transposed projections against the Harrison subspace.
std::map<int, EulerianDegree> eulerian_check(const HarrisonComplex& h);

struct AqHhSpot {
  int i = 0;
  int internal_degree = 0;
  std::size_t aq_dim = 0;
  std::size_t hh_dim = 0;
  bool injective = false;
  std::optional<QMatrix> left_inverse;
};

struct AqHhMap {
  HarrisonComplex harrison;
  HochschildReport hochschild;
  InducedMap induced;
  std::vector<AqHhSpot> spots;  // i = i_lo .. i_hi
};

/// H(Harrison -> Hochschild cochains) for 2 <= i_lo <= i <= i_hi.
AqHhMap aq_to_hh_map(const Presentation& r, int i_lo, int i_hi, std::optional<int> max_weight = std::nullopt);

}  // namespace qdga
