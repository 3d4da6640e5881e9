#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdga/algebra_complex.hpp"
#include "qdga/complex.hpp"
#include "qdga/presentation.hpp"

namespace qdga {

/// Tensor word s a_1 | ... | s a_n with every a_i a nonempty normal-form
/// monomial of the augmentation ideal. The empty word is the unit.
using BarWord = std::vector<Monomial>;

/// Linear combination of bar words.
using BarChain = std::map<BarWord, Rational>;

void add_to(BarChain& chain, const BarWord& w, const Rational& c);

/// Suspension lowers degree by one: sum of (|a_i| - 1).
int bar_degree(const Presentation& a, const BarWord& w);
int suspended_degree(const Presentation& a, const Monomial& letter);

std::string format_word(const Presentation& a, const BarWord& w);

/// d = internal part + multiplication part:
///   -(-1)^{e_i} [.. | d a_i | ..]  +  (-1)^{e_{i+1}} [.. | a_i a_{i+1} | ..]
/// with e_i = sum_{j < i} (|a_j| - 1).
BarChain bar_differential(const Presentation& a, const BarWord& w);

/// Largest degree component the dense eliminations accept. Truncations of
/// algebras with generators in degree <= 1 grow geometrically in the weight.
constexpr std::size_t kMaxDenseDimension = 3000;

/// Throws ScopeError naming the degree when n exceeds kMaxDenseDimension.
void check_dense_dimension(const std::string& what, int degree, std::size_t n);

/// Weight bound making [lo, hi] exact when every generator has degree >= 2;
/// otherwise `fallback`.
int bar_auto_weight(const Presentation& a, int lo, int hi, int fallback);

/// True when bar words of every degree in [lo-1, hi+1] have at most
/// max_weight letters, each letter of word length at most max_weight.
bool bar_window_exact(const Presentation& a, int lo, int hi, int max_weight);

/// Letters available to the bar and Hochschild enumerations: nonempty
/// monomials of length <= max_weight whose suspended degree can occur in a
/// word of total degree <= top.
std::vector<Monomial> bar_letters(const Presentation& a, int top, int max_weight);

struct BarComplex {
  Presentation source;
  CochainComplex complex;  // degrees [lo-1, hi+1]
  std::map<int, std::vector<BarWord>> words;
  std::map<int, std::map<BarWord, std::size_t>> index;
  Truncation truncation;
  int lo = 0;
  int hi = -1;
};

BarComplex bar_complex(const Presentation& a, int lo, int hi, int max_weight);

struct BarCohomology {
  CohomologyReport report;
  Truncation truncation;
};

/// Cohomology of the totalized bar complex; max_weight defaults to
/// bar_auto_weight(a, lo, hi, 6).
BarCohomology bar_cohomology(const Presentation& a, int lo, int hi, std::optional<int> max_weight = std::nullopt);

}  // namespace qdga
