#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qdga/bar.hpp"
#include "qdga/complex.hpp"
#include "qdga/finite_algebra.hpp"
#include "qdga/morphism.hpp"
#include "qdga/presentation.hpp"

namespace qdga {

/// Minimal model (Lambda V, d) -> A certified through degree `top`: the map
/// is an isomorphism on H^n for n <= top and injective on H^{top+1}.
struct SullivanModel {
  Presentation model;
  DGMorphism map;
  int top = 0;
  bool minimal = false;
  InducedMap check;  // H(map) over [0, top]
};

using SullivanInput = std::variant<Presentation, FiniteDGAlgebra>;

/// Inductive construction: in each degree n add cocycle generators for the
/// cokernel of H^n, then generators of degree n killing the kernel of
/// H^{n+1}. New generators are named a, b, c, ... Throws ValidationError
/// naming the degree when H^0 != Q or H^1 != 0, ScopeError when the input
/// is not of finite type.
SullivanModel minimal_model(const SullivanInput& a, int top);

/// True when every generator differential has no constant or linear part.
bool is_minimal(const Presentation& p);

/// i -> number of generators in degree i, for 2 <= i <= top.
std::map<int, std::size_t> homotopy_groups(const SullivanModel& m);

/// Bar cohomology of the model, read as H*(Omega X).
CohomologyReport loop_cohomology(const SullivanModel& m, int lo, int hi);

/// Named presets: "point", "S<n>" for n >= 2, and products "S<n>xS<m>"
/// (tensor of the two models). The model maps to itself by the identity.
SullivanModel space_preset(const std::string& name, int top);
Presentation sphere_model(int n);
Presentation tensor_models(const Presentation& x, const Presentation& y);

}  // namespace qdga
