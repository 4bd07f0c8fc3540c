#include "crn/matrix.hpp"

#include <stdexcept>

namespace crn {

bool exactly_equal(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool exactly_zero(const RationalVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

void SpanBuilder::reduce(const RationalRowVector& row, RationalRowVector& residual,
                         RationalVector& expr) const {
  residual = row;
  expr = RationalVector::Zero(basis_size());
  // Invariant: row = residual + sum expr[j] * basis_j. Rows are stored in
  // insertion order; each is zero at all earlier pivots, so eliminating in
  // order never reintroduces a cleared pivot.
  for (const ReducedRow& p : reduced_) {
    const Rational& lead = residual(p.pivot);
    if (lead == 0) continue;
    Rational factor = lead / p.row(p.pivot);
    residual -= factor * p.row;
    for (Index j = 0; j < p.combo.size(); ++j) expr(j) += factor * p.combo(j);
  }
}

std::optional<RationalVector> SpanBuilder::offer(const RationalRowVector& row) {
  if (row.size() != dim_) throw std::invalid_argument("SpanBuilder: row dimension mismatch");
  RationalRowVector residual;
  RationalVector expr;
  reduce(row, residual, expr);

  Index pivot = -1;
  for (Index j = 0; j < residual.size(); ++j) {
    if (residual(j) != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return expr;  // dependent; coordinates over the basis so far

  // New basis vector: residual = row - sum expr[j] * basis_j.
  RationalVector combo(basis_size() + 1);
  for (Index j = 0; j < expr.size(); ++j) combo(j) = -expr(j);
  combo(basis_size()) = 1;
  reduced_.push_back(ReducedRow{pivot, std::move(residual), std::move(combo)});
  return std::nullopt;
}

std::optional<RationalVector> SpanBuilder::coordinates(const RationalRowVector& row) const {
  if (row.size() != dim_) throw std::invalid_argument("SpanBuilder: row dimension mismatch");
  RationalRowVector residual;
  RationalVector expr;
  reduce(row, residual, expr);
  for (Index j = 0; j < residual.size(); ++j)
    if (residual(j) != 0) return std::nullopt;
  return expr;
}

Index rank(const RationalMatrix& m) {
  SpanBuilder span(m.cols());
  for (Index i = 0; i < m.rows(); ++i) span.offer(m.row(i));
  return span.basis_size();
}

Index rank(const IntMatrix& m) { return rank(to_rational(m)); }

RowBasis row_basis(const RationalMatrix& m) {
  SpanBuilder span(m.cols());
  RowBasis out;
  std::map<Index, RationalVector> partial;  // coords at time of insertion
  for (Index i = 0; i < m.rows(); ++i) {
    if (auto coords = span.offer(m.row(i))) {
      partial.emplace(i, std::move(*coords));
    } else {
      out.basis_rows.push_back(i);
    }
  }
  // A non-basis row only involves earlier basis vectors; pad with zeros up
  // to the final basis size.
  const Index rho = span.basis_size();
  for (auto& [row, coords] : partial) {
    RationalVector full = RationalVector::Zero(rho);
    for (Index j = 0; j < coords.size(); ++j) full(j) = coords(j);
    out.coords.emplace(row, std::move(full));
  }
  return out;
}

std::optional<RationalVector> solve_in_span(const RationalVector& v,
                                            const RationalMatrix& basis_rows) {
  if (v.size() != basis_rows.cols())
    throw std::invalid_argument("solve_in_span: dimension mismatch");
  SpanBuilder span(basis_rows.cols());
  for (Index i = 0; i < basis_rows.rows(); ++i) {
    if (span.offer(basis_rows.row(i)))
      throw std::invalid_argument("solve_in_span: basis rows are linearly dependent");
  }
  return span.coordinates(v.transpose());
}

}  // namespace crn
