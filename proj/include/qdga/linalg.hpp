#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdga/rational.hpp"

namespace qdga {

/// Dense matrix over Q, row-major. Acts on column vectors.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_columns(std::size_t rows, const std::vector<QVector>& columns);
  static QMatrix from_rows(std::size_t cols, const std::vector<QVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector column(std::size_t c) const;
  QVector row(std::size_t r) const;
  QVector apply(const QVector& v) const;

  QMatrix transpose() const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(QMatrix m);

std::size_t rank(const QMatrix& m);

struct RankNullspace {
  std::size_t rank = 0;
  std::vector<QVector> nullspace;
};

// Nullspace vectors have a 1 in one free column and 0 in the others.
RankNullspace rank_nullspace(const QMatrix& m);

/// A particular solution of m x = b (free variables set to zero), if any.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/// Indices of the first maximal linearly independent subset of columns.
std::vector<std::size_t> independent_columns(const QMatrix& m);

/// Left inverse of a matrix with full column rank; nullopt otherwise.
/// The result l satisfies l * m == identity(cols).
std::optional<QMatrix> left_inverse(const QMatrix& m);

std::string to_string(const QVector& v);

}  // namespace qdga
