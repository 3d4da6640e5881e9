#include "qdga/file_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "qdga/errors.hpp"
#include "qdga/expression.hpp"
#include "qdga/sullivan.hpp"

namespace qdga {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

std::vector<Token> split_words(std::string_view s, int first_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    out.push_back({std::string(s.substr(start, i - start)), first_column + static_cast<int>(start)});
  }
  return out;
}

int parse_int(const Token& t, int line) {
  int v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  if (b != e && *b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) throw ParseError("expected an integer, got '" + t.text + "'", line, t.column);
  return v;
}

struct NamedDegree {
  std::string name;
  int degree;
  int column;
};

std::vector<NamedDegree> parse_named_degrees(std::string_view rest, int line, int column, bool allow_one) {
  std::vector<NamedDegree> out;
  for (const auto& t : split_words(rest, column)) {
    const auto colon = t.text.find(':');
    if (colon == std::string::npos) throw ParseError("expected name:degree, got '" + t.text + "'", line, t.column);
    std::string name = t.text.substr(0, colon);
    if (!is_identifier(name) && !(allow_one && name == "1"))
      throw ParseError("invalid name '" + name + "'", line, t.column);
    const Token deg{t.text.substr(colon + 1), t.column + static_cast<int>(colon) + 1};
    out.push_back({std::move(name), parse_int(deg, line), t.column});
  }
  return out;
}

struct Line {
  int number = 0;
  std::string text;  // comment stripped
  std::string key;   // "d", "mul", or the word before ':'
  std::string rest;
  int rest_column = 1;
};

std::optional<Line> classify(const std::string& raw, int number) {
  Line l;
  l.number = number;
  l.text = raw.substr(0, raw.find('#'));
  const auto first = l.text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return std::nullopt;
  const auto last = l.text.find_last_not_of(" \t\r");
  l.text = l.text.substr(0, last + 1);
  for (const char* word : {"d", "mul"}) {
    const std::string w = word;
    if (l.text.compare(first, w.size(), w) == 0 && first + w.size() < l.text.size() &&
        (l.text[first + w.size()] == ' ' || l.text[first + w.size()] == '\t')) {
      l.key = w;
      l.rest = l.text.substr(first + w.size());
      l.rest_column = static_cast<int>(first + w.size()) + 1;
      return l;
    }
  }
  const auto colon = l.text.find(':', first);
  if (colon == std::string::npos) throw ParseError("expected 'key: value', 'd' or 'mul'", number, static_cast<int>(first) + 1);
  l.key = l.text.substr(first, colon - first);
  while (!l.key.empty() && (l.key.back() == ' ' || l.key.back() == '\t')) l.key.pop_back();
  l.rest = l.text.substr(colon + 1);
  l.rest_column = static_cast<int>(colon) + 2;
  return l;
}

// "lhs = rhs" with the left side split into words.
std::pair<std::vector<Token>, std::pair<std::string, int>> split_equation(const Line& l) {
  const auto eq = l.rest.find('=');
  if (eq == std::string::npos) throw ParseError("expected '='", l.number, l.rest_column + static_cast<int>(l.rest.size()));
  auto lhs = split_words(std::string_view(l.rest).substr(0, eq), l.rest_column);
  return {std::move(lhs), {l.rest.substr(eq + 1), l.rest_column + static_cast<int>(eq) + 1}};
}

Rational parse_rational(const std::string& text, int line, int column) {
  const auto parsed = parse_expression(text, line, column);
  if (parsed.terms.size() != 1 || !parsed.terms[0].factors.empty())
    throw ParseError("expected a rational number", line, column);
  return parsed.terms[0].coefficient;
}

QVector parse_linear(const FiniteDGAlgebra& a, const std::string& text, int line, int column) {
  QVector v = a.zero();
  for (const auto& term : parse_expression(text, line, column).terms) {
    if (term.factors.size() > 1)
      throw ParseError("expected a linear combination of basis elements", line, term.factors[1].column);
    std::size_t idx = a.unit_index();
    if (term.factors.size() == 1) {
      auto found = a.find(term.factors[0].name);
      if (!found) throw ParseError("unknown basis element '" + term.factors[0].name + "'", line, term.factors[0].column);
      idx = *found;
    }
    v[idx] += term.coefficient;
  }
  return v;
}

std::size_t basis_index(const FiniteDGAlgebra& a, const Token& t, int line) {
  auto found = a.find(t.text);
  if (!found) throw ParseError("unknown basis element '" + t.text + "'", line, t.column);
  return *found;
}

AlgebraDocument parse_presentation(const std::vector<Line>& lines, Flavor flavor, MonomialOrder order) {
  std::optional<Presentation> p;
  for (const auto& l : lines) {
    if (l.key == "generators") {
      if (p) throw ParseError("duplicate generators line", l.number, 1);
      std::vector<Generator> gens;
      for (auto& nd : parse_named_degrees(l.rest, l.number, l.rest_column, false)) gens.push_back({nd.name, nd.degree});
      try {
        p.emplace(flavor, gens, order);
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), l.number, l.rest_column);
      }
    } else if (l.key == "d" || l.key == "augmentation") {
      if (!p) throw ParseError("'" + l.key + "' before the generators line", l.number, 1);
      auto [lhs, rhs] = split_equation(l);
      if (lhs.size() != 1) throw ParseError("expected a single generator name", l.number, l.rest_column);
      auto g = p->find(lhs[0].text);
      if (!g) throw ParseError("unknown generator '" + lhs[0].text + "'", l.number, lhs[0].column);
      if (l.key == "d") {
        p->set_differential(*g, parse_element(*p, rhs.first, l.number, rhs.second));
      } else {
        if (p->generator(*g).degree != 0)
          throw ParseError("augmentation can only be set on degree-0 generators", l.number, lhs[0].column);
        p->set_augmentation(*g, parse_rational(rhs.first, l.number, rhs.second));
      }
    } else {
      throw ParseError("unexpected key '" + l.key + "' in a presentation", l.number, 1);
    }
  }
  if (!p) p.emplace(flavor, std::vector<Generator>{}, order);
  p->validate();
  return *p;
}

AlgebraDocument parse_finite(const std::vector<Line>& lines, bool commutative) {
  std::optional<std::vector<FiniteDGAlgebra::BasisElement>> basis;
  std::optional<std::string> unit;
  int unit_line = 0;
  std::vector<const Line*> body;
  for (const auto& l : lines) {
    if (l.key == "basis") {
      basis.emplace();
      for (auto& nd : parse_named_degrees(l.rest, l.number, l.rest_column, true)) basis->push_back({nd.name, nd.degree});
    } else if (l.key == "unit") {
      const auto words = split_words(l.rest, l.rest_column);
      if (words.size() != 1) throw ParseError("expected one unit name", l.number, l.rest_column);
      unit = words[0].text;
      unit_line = l.number;
    } else {
      body.push_back(&l);
    }
  }
  if (!basis) throw ParseError("finite algebra needs a basis line", 1, 1);
  if (!unit) unit = basis->empty() ? "" : (*basis)[0].name;
  std::size_t u = basis->size();
  for (std::size_t i = 0; i < basis->size(); ++i)
    if ((*basis)[i].name == *unit) u = i;
  if (u == basis->size()) throw ParseError("unit is not a basis element", unit_line, 1);
  FiniteDGAlgebra a(*basis, u, commutative);
  QVector eps = a.augmentation_functional();
  for (const Line* l : body) {
    if (l->key == "mul") {
      auto [lhs, rhs] = split_equation(*l);
      if (lhs.size() != 2) throw ParseError("expected 'mul x y = ...'", l->number, l->rest_column);
      const std::size_t i = basis_index(a, lhs[0], l->number), j = basis_index(a, lhs[1], l->number);
      try {
        a.set_product(i, j, parse_linear(a, rhs.first, l->number, rhs.second));
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), l->number, lhs[0].column);
      }
    } else if (l->key == "d") {
      auto [lhs, rhs] = split_equation(*l);
      if (lhs.size() != 1) throw ParseError("expected 'd x = ...'", l->number, l->rest_column);
      a.set_differential(basis_index(a, lhs[0], l->number), parse_linear(a, rhs.first, l->number, rhs.second));
    } else if (l->key == "augmentation") {
      auto [lhs, rhs] = split_equation(*l);
      if (lhs.size() != 1) throw ParseError("expected 'augmentation: x = q'", l->number, l->rest_column);
      eps[basis_index(a, lhs[0], l->number)] = parse_rational(rhs.first, l->number, rhs.second);
    } else {
      throw ParseError("unexpected key '" + l->key + "' in a finite algebra", l->number, 1);
    }
  }
  a.set_augmentation(eps);
  a.validate();
  return a;
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  std::vector<Line> lines;
  while (std::getline(in, raw)) {
    ++number;
    if (auto l = classify(raw, number)) lines.push_back(std::move(*l));
  }
  if (lines.empty() || lines[0].key != "format")
    throw ParseError("document must start with 'format: 1'", lines.empty() ? 1 : lines[0].number, 1);
  const auto version = split_words(lines[0].rest, lines[0].rest_column);
  if (version.size() != 1 || version[0].text != "1")
    throw ParseError("unsupported format version", lines[0].number,
                     version.empty() ? lines[0].rest_column : version[0].column);

  std::string kind = "presentation";
  Flavor flavor = Flavor::Associative;
  MonomialOrder order = MonomialOrder::Ascending;
  std::vector<Line> body;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.key == "kind" || l.key == "flavor" || l.key == "order") {
      const auto words = split_words(l.rest, l.rest_column);
      if (words.size() != 1) throw ParseError("expected one word after '" + l.key + ":'", l.number, l.rest_column);
      const auto& w = words[0];
      if (l.key == "kind") {
        if (w.text != "presentation" && w.text != "finite")
          throw ParseError("kind must be presentation or finite", l.number, w.column);
        kind = w.text;
      } else if (l.key == "flavor") {
        if (w.text != "associative" && w.text != "commutative")
          throw ParseError("flavor must be associative or commutative", l.number, w.column);
        flavor = w.text == "associative" ? Flavor::Associative : Flavor::Commutative;
      } else {
        if (w.text != "ascending" && w.text != "descending")
          throw ParseError("order must be ascending or descending", l.number, w.column);
        order = w.text == "ascending" ? MonomialOrder::Ascending : MonomialOrder::Descending;
      }
    } else {
      body.push_back(l);
    }
  }
  if (kind == "finite") return parse_finite(body, flavor == Flavor::Commutative);
  return parse_presentation(body, flavor, order);
}

AlgebraDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

AlgebraDocument builtin_document(const std::string& name) {
  auto number_after = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (rest.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    return std::stoi(rest);
  };
  if (name.rfind("squarezero-", 0) == 0) {
    const auto dash = name.find('-', 11);
    if (dash != std::string::npos) {
      const int h0 = std::stoi(name.substr(11, dash - 11));
      const int h1 = std::stoi(name.substr(dash + 1));
      if (h0 >= 1 && h1 >= 0)
        return FiniteDGAlgebra::square_zero(static_cast<std::size_t>(h0 - 1), static_cast<std::size_t>(h1));
    }
  }
  if (name == "field") return FiniteDGAlgebra::ground_field();
  if (auto n = number_after("sphere-cohomology-")) return FiniteDGAlgebra::sphere_cohomology(*n);
  if (auto n = number_after("Tx")) {
    return Presentation(Flavor::Associative, {{"x", *n}});
  }
  if (auto n = number_after("lambda-x")) return Presentation(Flavor::Commutative, {{"x", *n}});
  if (number_after("S")) return sphere_model(*number_after("S"));
  throw ParseError("unknown builtin '" + name + "'", 0, 0);
}

AlgebraDocument resolve_document(const std::string& ref) {
  if (ref.rfind("builtin:", 0) == 0) return builtin_document(ref.substr(8));
  return load_document(ref);
}

}  // namespace qdga
