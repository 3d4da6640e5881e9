#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdga/rational.hpp"

namespace qdga {

enum class Flavor { Associative, Commutative };

/// Direction in which generator indices are ranked. Commutative normal
/// forms list factors by increasing rank; basis listings sort by rank.
enum class MonomialOrder { Ascending, Descending };

std::string to_string(Flavor f);

/// Word of generator indices; the empty word is the unit.
using Monomial = std::vector<int>;

/// Shorter words first, then lexicographic on indices.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Q-linear combination of words. Whether the words are in normal form
/// depends on who built it; Presentation methods always return normal forms.
class Element {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  Element() = default;
  static Element unit() { return monomial({}); }
  static Element monomial(Monomial m, Rational c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) = default;

 private:
  Terms terms_;
};

struct Generator {
  std::string name;
  int degree = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Free associative or free graded-commutative algebra on named generators
/// with a derivation differential given on generators. The augmentation
/// sends every generator to 0 unless overridden.
class Presentation {
 public:
  Presentation() = default;
  Presentation(Flavor flavor, std::vector<Generator> generators, MonomialOrder order = MonomialOrder::Ascending);

  Flavor flavor() const { return flavor_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  const Generator& generator(int i) const { return generators_.at(static_cast<std::size_t>(i)); }
  std::optional<int> find(std::string_view name) const;
  int index_of(std::string_view name) const;

  void set_differential(int generator, const Element& value);
  void set_differential(std::string_view generator, std::string_view expression);
  const Element& differential_of(int generator) const { return differential_.at(static_cast<std::size_t>(generator)); }

  void set_augmentation(int generator, const Rational& value);
  const std::map<int, Rational>& augmentation_overrides() const { return augmentation_; }
  bool has_default_augmentation() const { return augmentation_.empty(); }

  /// Throws ValidationError unless every d(g) is homogeneous of degree
  /// |g| + 1, d(d(g)) = 0, and the augmentation is a chain map.
  void validate() const;

  int degree(const Monomial& m) const;
  std::optional<int> degree(const Element& e) const;

  /// Normal form of a single word with its Koszul sign; nullopt when the
  /// word vanishes (odd generator repeated in the commutative flavor).
  std::optional<std::pair<Monomial, int>> normalize_word(const Monomial& word) const;
  Element normalize(const Element& e) const;

  Element multiply(const Element& a, const Element& b) const;
  Element differential(const Element& e) const;
  Rational augmentation(const Element& e) const;

  /// Normal-form monomials of the given degree and word length <= max_weight,
  /// ordered by length and then by generator rank.
  std::vector<Monomial> basis(int degree, int max_weight) const;

  /// True when no monomial of this degree is longer than max_weight, so
  /// basis(degree, max_weight) is the whole degree component.
  bool basis_exact(int degree, int max_weight) const;

  /// Smallest weight bound that makes basis(degree, .) exact, if finite.
  std::optional<int> exact_weight(int degree) const;

  int rank(int generator) const;

  std::string format(const Monomial& m) const;
  std::string format(const Element& e) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Flavor flavor_ = Flavor::Associative;
  MonomialOrder order_ = MonomialOrder::Ascending;
  std::vector<Generator> generators_;
  std::vector<Element> differential_;
  std::map<int, Rational> augmentation_;
};

Element parse_element(const Presentation& p, std::string_view text, int line = 1, int first_column = 1);

/// Presentation with the flavor swapped to commutative and each
/// differential renormalized there (commutators die).
Presentation as_commutative(const Presentation& p);

}  // namespace qdga
