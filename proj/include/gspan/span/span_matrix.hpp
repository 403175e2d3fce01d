#pragma once

#include <string>
#include <vector>

#include "gspan/algebra/character.hpp"
#include "gspan/algebra/group_ring.hpp"
#include "gspan/span/gspan.hpp"

namespace gspan {

// Rows and columns are indexed by component representatives in canonical order.
class SpanMatrix {
 public:
  SpanMatrix(AbelianGroup group, std::vector<ObjectId> rows, std::vector<ObjectId> cols,
             std::vector<GroupRingElement> entries);

  const AbelianGroup& group() const { return group_; }
  const std::vector<ObjectId>& rows() const { return rows_; }
  const std::vector<ObjectId>& cols() const { return cols_; }
  std::size_t rowCount() const { return rows_.size(); }
  std::size_t colCount() const { return cols_.size(); }
  const GroupRingElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_.size() + j]; }

  // Rows of canonical entries joined by " | ", one row per line.
  std::string renderText() const;

  friend bool operator==(const SpanMatrix& a, const SpanMatrix& b) {
    return a.group_ == b.group_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  AbelianGroup group_;
  std::vector<ObjectId> rows_;
  std::vector<ObjectId> cols_;
  std::vector<GroupRingElement> entries_;
};

// [M, eps](c, d) = sum_g chi((c\M/d){label = g}) / |T(d,d)| * g.
SpanMatrix spanMatrix(const GSpan& span, const SizeLimits& limits = defaultLimits());

// (AB)(c1, c2) = sum_d B(d, c2) A(c1, d).
SpanMatrix matrixMultiply(const SpanMatrix& a, const SpanMatrix& b);
// sum_d A(c1, d) B(d, c2); agrees with matrixMultiply since G is abelian.
SpanMatrix matrixMultiplyConventional(const SpanMatrix& a, const SpanMatrix& b);

class CharacterMatrix {
 public:
  CharacterMatrix(std::size_t rows, std::size_t cols, std::vector<CyclotomicNumber> entries);

  std::size_t rowCount() const { return rows_; }
  std::size_t colCount() const { return cols_; }
  const CyclotomicNumber& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::string renderText(bool withDecimals = false) const;

  friend bool operator==(const CharacterMatrix& a, const CharacterMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CyclotomicNumber> entries_;
};

CharacterMatrix applyCharacter(const Character& rho, const SpanMatrix& m);
CharacterMatrix matrixMultiply(const CharacterMatrix& a, const CharacterMatrix& b);

}  // namespace gspan
