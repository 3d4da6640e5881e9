#pragma once

#include <string>

#include "qdga/finite_algebra.hpp"
#include "qdga/presentation.hpp"
#include "qdga/report.hpp"

namespace qdga {

/// pi_0 of maps into S from Q[x,y] (commutative) and from its associative
/// cofibrant replacement T(x, y, z; dz = xy - yx), against
/// 2 dim H^0(S) and 2 dim H^0(S) + dim H^{-1}(S).
Report verify_lurie(const FiniteDGAlgebra& s);

/// Injectivity of H(u_c): H(B[Ab A]) -> H(Ab(Sigma A)) on [lo, hi], with
/// left inverses. A must be associative.
Report verify_retract(const Presentation& a, int lo, int hi);

/// AQ^{-i} -> HH^{-i+1} for max(2, lo) <= i <= hi.
Report verify_aq_hh_injectivity(const Presentation& r, int lo, int hi);

/// dim pi_i <= dim H^{i-1}(Omega X) for the named preset, plus the Harrison
/// inclusion at matching spots.
Report verify_pi_in_loop(const std::string& space, int lo, int hi);

/// Hochschild cochain dims at -n against chain dims at n, and chain dims
/// against bar cohomology.
Report verify_duality(const Presentation& r, int lo, int hi);

/// Source of the Lurie scenario on the associative side.
Presentation lurie_associative_source();
Presentation lurie_commutative_source();

}  // namespace qdga
