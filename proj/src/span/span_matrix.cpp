#include "gspan/span/span_matrix.hpp"

#include "gspan/errors.hpp"

namespace gspan {

SpanMatrix::SpanMatrix(AbelianGroup group, std::vector<ObjectId> rows, std::vector<ObjectId> cols,
                       std::vector<GroupRingElement> entries)
    : group_(std::move(group)), rows_(std::move(rows)), cols_(std::move(cols)), entries_(std::move(entries)) {
  if (entries_.size() != rows_.size() * cols_.size()) throw ArgumentError("matrix entries have the wrong count");
  for (const auto& e : entries_)
    if (!(e.group() == group_)) throw GroupMismatchError("matrix entry over another group");
}

std::string SpanMatrix::renderText() const {
  std::string out;
  for (std::size_t i = 0; i < rowCount(); ++i) {
    for (std::size_t j = 0; j < colCount(); ++j) {
      if (j) out += " | ";
      out += at(i, j).render();
    }
    out += "\n";
  }
  return out;
}

SpanMatrix spanMatrix(const GSpan& span, const SizeLimits& limits) {
  const auto& s = span.source();
  const auto& t = span.target();
  std::vector<GroupRingElement> entries;
  for (auto c : s.representatives())
    for (auto d : t.representatives()) {
      auto fibre = labeledFibre(span, c, d, limits);
      const auto& f = fibre.fibre.groupoid();
      GroupRingElement entry(span.group());
      for (auto rep : f.representatives()) entry.addTerm(fibre.labels[rep], Rational(1, f.automorphismOrder(rep)));
      entry *= Rational(1, t.automorphismOrder(d));
      entries.push_back(std::move(entry));
    }
  return SpanMatrix(span.group(), s.representatives(), t.representatives(), std::move(entries));
}

namespace {

void requireChainable(const SpanMatrix& a, const SpanMatrix& b) {
  if (!(a.group() == b.group())) throw GroupMismatchError("matrices over different groups");
  if (a.cols() != b.rows()) throw CompositionError("matrix shapes do not chain");
}

}  // namespace

SpanMatrix matrixMultiply(const SpanMatrix& a, const SpanMatrix& b) {
  requireChainable(a, b);
  std::vector<GroupRingElement> entries;
  for (std::size_t i = 0; i < a.rowCount(); ++i)
    for (std::size_t j = 0; j < b.colCount(); ++j) {
      GroupRingElement sum(a.group());
      for (std::size_t d = 0; d < a.colCount(); ++d) sum += b.at(d, j) * a.at(i, d);
      entries.push_back(std::move(sum));
    }
  return SpanMatrix(a.group(), a.rows(), b.cols(), std::move(entries));
}

SpanMatrix matrixMultiplyConventional(const SpanMatrix& a, const SpanMatrix& b) {
  requireChainable(a, b);
  std::vector<GroupRingElement> entries;
  for (std::size_t i = 0; i < a.rowCount(); ++i)
    for (std::size_t j = 0; j < b.colCount(); ++j) {
      GroupRingElement sum(a.group());
      for (std::size_t d = 0; d < a.colCount(); ++d) sum += a.at(i, d) * b.at(d, j);
      entries.push_back(std::move(sum));
    }
  return SpanMatrix(a.group(), a.rows(), b.cols(), std::move(entries));
}

CharacterMatrix::CharacterMatrix(std::size_t rows, std::size_t cols, std::vector<CyclotomicNumber> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw ArgumentError("matrix entries have the wrong count");
}

std::string CharacterMatrix::renderText(bool withDecimals) const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += " | ";
      out += at(i, j).render();
      if (withDecimals) out += " [" + at(i, j).decimal() + "]";
    }
    out += "\n";
  }
  return out;
}

CharacterMatrix applyCharacter(const Character& rho, const SpanMatrix& m) {
  std::vector<CyclotomicNumber> entries;
  for (std::size_t i = 0; i < m.rowCount(); ++i)
    for (std::size_t j = 0; j < m.colCount(); ++j) entries.push_back(rho.apply(m.at(i, j)));
  return CharacterMatrix(m.rowCount(), m.colCount(), std::move(entries));
}

CharacterMatrix matrixMultiply(const CharacterMatrix& a, const CharacterMatrix& b) {
  if (a.colCount() != b.rowCount()) throw CompositionError("matrix shapes do not chain");
  if (a.rowCount() * b.colCount() == 0) return CharacterMatrix(a.rowCount(), b.colCount(), {});
  if (a.colCount() == 0) throw ArgumentError("cannot multiply through an empty index set");
  auto field = a.at(0, 0);
  std::vector<CyclotomicNumber> entries;
  for (std::size_t i = 0; i < a.rowCount(); ++i)
    for (std::size_t j = 0; j < b.colCount(); ++j) {
      auto sum = field * Rational(0);
      for (std::size_t d = 0; d < a.colCount(); ++d) sum += b.at(d, j) * a.at(i, d);
      entries.push_back(std::move(sum));
    }
  return CharacterMatrix(a.rowCount(), b.colCount(), std::move(entries));
}

}  // namespace gspan
