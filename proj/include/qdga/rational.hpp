#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace qdga {

// Exact rational scalar. GMP keeps every value canonical (lowest terms,
// positive denominator) after each operation.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using QVector = std::vector<Rational>;

inline bool is_zero(const Rational& q) { return q.is_zero(); }

// Bit size of numerator plus denominator; used to rank pivot candidates.
inline std::size_t bit_size(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  std::size_t n = num.is_zero() ? 0 : boost::multiprecision::msb(abs(num)) + 1;
  std::size_t d = boost::multiprecision::msb(den) + 1;
  return n + d;
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline bool is_zero(const QVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

inline int sign_of_parity(long long k) { return (k % 2 == 0) ? 1 : -1; }

inline bool is_odd(int degree) { return (degree % 2) != 0; }

}  // namespace qdga
