#include "qdga/harrison.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qdga/errors.hpp"
#include "qdga/linalg.hpp"

namespace qdga {

namespace {

void require_commutative(const Presentation& a) {
  if (a.flavor() != Flavor::Commutative) throw ValidationError("shuffle product needs a commutative presentation");
}

// sh(a u, b v) = a sh(u, b v) + (-1)^{|b| |a u|} b sh(a u, v), degrees suspended.
void shuffle_into(const std::vector<int>& du, const std::vector<int>& dv, const BarWord& u, const BarWord& v,
                  std::size_t i, std::size_t j, BarWord& prefix, int sign, int rest_u, BarChain& out) {
  if (i == u.size() || j == v.size()) {
    BarWord w = prefix;
    w.insert(w.end(), u.begin() + static_cast<std::ptrdiff_t>(i), u.end());
    w.insert(w.end(), v.begin() + static_cast<std::ptrdiff_t>(j), v.end());
    add_to(out, w, Rational(sign));
    return;
  }
  prefix.push_back(u[i]);
  shuffle_into(du, dv, u, v, i + 1, j, prefix, sign, rest_u - du[i], out);
  prefix.pop_back();
  prefix.push_back(v[j]);
  const int s = is_odd(dv[j]) && is_odd(rest_u) ? -sign : sign;
  shuffle_into(du, dv, u, v, i, j + 1, prefix, s, rest_u, out);
  prefix.pop_back();
}

}  // namespace

BarChain shuffle_product(const Presentation& a, const BarWord& u, const BarWord& v) {
  require_commutative(a);
  std::vector<int> du, dv;
  for (const auto& l : u) du.push_back(suspended_degree(a, l));
  for (const auto& l : v) dv.push_back(suspended_degree(a, l));
  BarChain out;
  BarWord prefix;
  shuffle_into(du, dv, u, v, 0, 0, prefix, 1, std::accumulate(du.begin(), du.end(), 0), out);
  return out;
}

BarChain shuffle_product(const Presentation& a, const BarChain& u, const BarChain& v) {
  require_commutative(a);
  BarChain out;
  for (const auto& [wu, cu] : u)
    for (const auto& [wv, cv] : v)
      for (const auto& [w, c] : shuffle_product(a, wu, wv)) add_to(out, w, cu * cv * c);
  return out;
}

std::vector<QVector> shuffle_span(const BarComplex& bar, int degree) {
  std::vector<QVector> span;
  const auto& words = bar.words.at(degree);
  const auto& index = bar.index.at(degree);
  for (const auto& w : words) {
    for (std::size_t p = 1; p < w.size(); ++p) {
      const BarWord left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      const BarWord right(w.begin() + static_cast<std::ptrdiff_t>(p), w.end());
      QVector v(words.size());
      for (const auto& [x, c] : shuffle_product(bar.source, left, right)) v[index.at(x)] += c;
      if (!is_zero(v)) span.push_back(std::move(v));
    }
  }
  return span;
}

int aq_index(int internal_degree) { return internal_degree - 1; }
int pi_index(int internal_degree) { return 1 - internal_degree; }
int internal_degree_for_pi(int i) { return 1 - i; }

namespace {

HarrisonComplex build_harrison(const Presentation& a, int lo, int hi, int w) {
  HarrisonComplex out;
  out.bar = bar_complex(a, lo, hi, w);
  out.truncation = out.bar.truncation;

  for (int n = lo - 1; n <= hi + 1; ++n) {
    const std::size_t dim = out.bar.words.at(n).size();
    // The empty word is excluded: Harrison cochains live on weight >= 1.
    auto span = shuffle_span(out.bar, n);
    for (std::size_t k = 0; k < dim; ++k)
      if (out.bar.words.at(n)[k].empty()) {
        QVector e(dim);
        e[k] = 1;
        span.push_back(std::move(e));
      }
    const auto basis = rank_nullspace(QMatrix::from_rows(dim, span)).nullspace;
    out.inclusion[-n] = QMatrix::from_columns(dim, basis);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < basis.size(); ++k) labels.push_back("h" + std::to_string(n) + "." + std::to_string(k));
    out.complex.set_basis(-n, std::move(labels));
  }
  // The cochain differential at -(n+1) is the transpose of the bar
  // differential b^n; restricted to Harrison cochains it must land back in
  // them: F_n X = b^T F_{n+1}.
  for (int n = lo - 1; n <= hi; ++n) {
    const QMatrix& fn = out.inclusion.at(-n);
    const QMatrix& fn1 = out.inclusion.at(-n - 1);
    const QMatrix image = out.bar.complex.differential(n)->transpose() * fn1;
    QMatrix x(fn.cols(), fn1.cols());
    for (std::size_t c = 0; c < image.cols(); ++c) {
      auto sol = solve(fn, image.column(c));
      if (!sol) throw ValidationError("Harrison cochains are not closed under the differential in degree " +
                                      std::to_string(-n - 1));
      for (std::size_t r = 0; r < sol->size(); ++r) x(r, c) = (*sol)[r];
    }
    out.complex.set_differential(-n - 1, std::move(x));
  }
  out.report = cohomology(out.complex, -hi, -lo);
  return out;
}

}  // namespace

HarrisonComplex harrison_complex(const Presentation& a, int lo, int hi, std::optional<int> max_weight) {
  require_commutative(a);
  const int w = max_weight.value_or(bar_auto_weight(a, lo, hi, 6));
  auto out = build_harrison(a, lo, hi, w);
  if (!out.truncation.exact) {
    try {
      out.truncation.stabilized = build_harrison(a, lo, hi, w + 1).report.dims() == out.report.dims();
    } catch (const ScopeError&) {
      out.truncation.stabilized = false;
    }
  }
  return out;
}

namespace {

// All ways to cut {0..n-1} into k consecutive nonempty pieces, shuffled back
// together: the k-fold convolution power of (id - unit o counit).
void iterated_shuffles(const std::vector<std::vector<int>>& pieces, std::size_t next, std::vector<int>& acc,
                       GroupAlgebraElement& out, const Rational& c) {
  if (next == pieces.size()) {
    out[acc] += c;
    return;
  }
  // Interleave pieces[next] into acc in every order-preserving way.
  const auto& piece = pieces[next];
  const std::size_t total = acc.size() + piece.size();
  std::vector<bool> mask(total, false);
  std::fill(mask.end() - static_cast<std::ptrdiff_t>(piece.size()), mask.end(), true);
  do {
    std::vector<int> merged;
    std::size_t ia = 0, ip = 0;
    for (bool from_piece : mask) merged.push_back(from_piece ? piece[ip++] : acc[ia++]);
    iterated_shuffles(pieces, next + 1, merged, out, c);
  } while (std::next_permutation(mask.begin(), mask.end()));
}

void compositions(int n, int k, std::vector<int>& parts, const std::function<void()>& visit) {
  if (k == 0) {
    if (n == 0) visit();
    return;
  }
  for (int first = 1; first <= n - (k - 1); ++first) {
    parts.push_back(first);
    compositions(n - first, k - 1, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

GroupAlgebraElement eulerian_idempotent(int n) {
  if (n < 1 || n > kEulerianMaxWeight)
    throw ScopeError("Eulerian idempotent is supported for weights 1.." + std::to_string(kEulerianMaxWeight));
  GroupAlgebraElement out;
  for (int k = 1; k <= n; ++k) {
    const Rational c = Rational(k % 2 == 1 ? 1 : -1) / k;
    std::vector<int> parts;
    compositions(n, k, parts, [&] {
      std::vector<std::vector<int>> pieces;
      int start = 0;
      for (int len : parts) {
        std::vector<int> piece(static_cast<std::size_t>(len));
        std::iota(piece.begin(), piece.end(), start);
        pieces.push_back(std::move(piece));
        start += len;
      }
      std::vector<int> acc;
      iterated_shuffles(pieces, 0, acc, out, c);
    });
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

GroupAlgebraElement group_multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  GroupAlgebraElement out;
  for (const auto& [p, a] : x)
    for (const auto& [q, b] : y) {
      // (w o p) o q = w o (p o q), with (p o q)[k] = p[q[k]].
      std::vector<int> r(q.size());
      for (std::size_t k = 0; k < q.size(); ++k) r[k] = p[static_cast<std::size_t>(q[k])];
      out[r] += a * b;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

QMatrix eulerian_projection(const BarComplex& bar, int degree, int weight) {
  const auto& words = bar.words.at(degree);
  const auto& index = bar.index.at(degree);
  QMatrix e(words.size(), words.size());
  const auto idem = eulerian_idempotent(weight);
  for (std::size_t col = 0; col < words.size(); ++col) {
    const auto& w = words[col];
    if (static_cast<int>(w.size()) != weight) continue;
    std::vector<int> deg;
    for (const auto& l : w) deg.push_back(suspended_degree(bar.source, l));
    for (const auto& [p, c] : idem) {
      BarWord v;
      int sign = 1;
      for (std::size_t i = 0; i < p.size(); ++i) {
        v.push_back(w[static_cast<std::size_t>(p[i])]);
        for (std::size_t j = i + 1; j < p.size(); ++j)
          if (p[i] > p[j] && is_odd(deg[static_cast<std::size_t>(p[i])]) && is_odd(deg[static_cast<std::size_t>(p[j])]))
            sign = -sign;
      }
      e(index.at(v), col) += Rational(sign) * c;
    }
  }
  if (!(e * e == e)) throw ValidationError("Eulerian projection is not idempotent in degree " + std::to_string(degree));
  return e;
}

std::map<int, EulerianDegree> eulerian_check(const HarrisonComplex& h) {
  std::map<int, EulerianDegree> out;
  for (int n = h.bar.lo; n <= h.bar.hi; ++n) {
    const auto& words = h.bar.words.at(n);
    std::size_t top = 0;
    for (const auto& w : words) top = std::max(top, w.size());
    QMatrix e(words.size(), words.size());
    for (int k = 1; k <= static_cast<int>(top); ++k) {
      const QMatrix block = eulerian_projection(h.bar, n, k);
      for (std::size_t r = 0; r < e.rows(); ++r)
        for (std::size_t c = 0; c < e.cols(); ++c) e(r, c) += block(r, c);
    }
    const QMatrix et = e.transpose();
    const QMatrix& f = h.inclusion.at(-n);
    EulerianDegree d;
    d.image_dim = rank(et);
    d.harrison_dim = f.cols();
    std::vector<QVector> both;
    for (std::size_t c = 0; c < et.cols(); ++c) both.push_back(et.column(c));
    for (std::size_t c = 0; c < f.cols(); ++c) both.push_back(f.column(c));
    d.agrees = d.image_dim == d.harrison_dim && rank(QMatrix::from_columns(words.size(), both)) == d.image_dim;
    out[-n] = d;
  }
  return out;
}

AqHhMap aq_to_hh_map(const Presentation& r, int i_lo, int i_hi, std::optional<int> max_weight) {
  if (i_lo < 2) throw ScopeError("the AQ to HH comparison is reported for i >= 2 only");
  const int lo = i_lo - 1, hi = i_hi - 1;
  const int w = max_weight.value_or(bar_auto_weight(r, lo, hi, 6));
  AqHhMap out;
  out.harrison = harrison_complex(r, lo, hi, w);
  const auto hoch = hochschild_complex(r, lo, hi, w);
  out.hochschild.homology = cohomology(hoch.chains, lo, hi);
  out.hochschild.cohomology = cohomology(hoch.cochains, -hi, -lo);
  out.hochschild.truncation = hoch.truncation;
  out.hochschild.truncation.stabilized = out.harrison.truncation.stabilized;

  // Harrison vectors are in dual bar coordinates; reorder into the
  // Hochschild word basis.
  ChainMap f;
  for (int n = lo - 1; n <= hi + 1; ++n) {
    const QMatrix& inc = out.harrison.inclusion.at(-n);
    const auto& words = out.harrison.bar.words.at(n);
    const auto& target = hoch.index.at(n);
    if (words.size() != target.size()) throw ValidationError("bar and Hochschild bases differ in degree " + std::to_string(n));
    QMatrix m(target.size(), inc.cols());
    for (std::size_t row = 0; row < words.size(); ++row) {
      auto it = target.find(words[row]);
      if (it == target.end()) throw ValidationError("bar word missing from the Hochschild basis");
      for (std::size_t c = 0; c < inc.cols(); ++c) m(it->second, c) = inc(row, c);
    }
    f[-n] = std::move(m);
  }
  out.induced = induced_map_on_cohomology(out.harrison.complex, hoch.cochains, f, -hi, -lo);
  for (int i = i_lo; i <= i_hi; ++i) {
    const int deg = internal_degree_for_pi(i);
    const auto& d = out.induced.degrees.at(deg);
    out.spots.push_back({i, deg, out.induced.source.dim(deg), out.induced.target.dim(deg), d.injective, d.left_inverse});
  }
  return out;
}

}  // namespace qdga
