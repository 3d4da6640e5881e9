#pragma once

#include <string>
#include <vector>

#include "qdga/finite_algebra.hpp"
#include "qdga/presentation.hpp"

namespace qdga {

enum class MapMode { Augmented, Unaugmented };

/// pi_0 of maps from a quasi-free presentation into a finite DG algebra,
/// described as the affine space V / W: V the maps, W the directions
/// reachable by homotopies.
struct HomotopyClasses {
  bool maps_exist = true;
  std::size_t dimension = 0;            // dim V - dim W
  std::size_t map_space_dimension = 0;  // dim V
  std::size_t homotopy_rank = 0;        // dim W
  std::string base_point;               // one map, generator by generator
  std::vector<std::string> directions;  // a basis of V / W
};

/// Maps f are fixed by generator images subject to d f(x) = f(dx) (and
/// eps f(x) = eps(x) when augmented). f ~ g when f - g = [d, h] for an
/// (f,g)-derivation h of degree -1. Both conditions are expanded exactly
/// in the coordinates of the target; the operation throws ScopeError
/// naming the first constraint that stays nonlinear.
HomotopyClasses homotopy_classes_into(const Presentation& source, const FiniteDGAlgebra& target, MapMode mode);

}  // namespace qdga
