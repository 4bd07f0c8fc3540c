#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

using Index = Eigen::Index;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalRowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using IntMatrix = Eigen::MatrixXi;

bool exactly_equal(const RationalMatrix& a, const RationalMatrix& b);
bool exactly_zero(const RationalVector& v);

RationalMatrix to_rational(const IntMatrix& m);

/* Incremental exact row-space tracker. Rows are offered in a fixed order;
 * each either extends the basis or is expressed in the basis vectors
 * accepted so far. Greedy first-fit selection: the first row achieving a
 * rank increase is always taken. mpq arithmetic keeps every intermediate
 * value in lowest terms. */
class SpanBuilder {
 public:
  explicit SpanBuilder(Index dim) : dim_(dim) {}

  /// nullopt: the row extended the basis. Otherwise the coordinates of the
  /// row over the accepted basis (all-zero for a zero row).
  std::optional<RationalVector> offer(const RationalRowVector& row);

  /// Coordinates of `row` over the accepted basis, without extending it;
  /// nullopt when the row is outside the span.
  std::optional<RationalVector> coordinates(const RationalRowVector& row) const;

  Index basis_size() const { return static_cast<Index>(reduced_.size()); }
  Index dim() const { return dim_; }

 private:
  struct ReducedRow {
    Index pivot;            // first nonzero column; zero in all earlier rows' pivots
    RationalRowVector row;  // reduced residual
    RationalVector combo;   // residual = sum combo[j] * basis_j (includes itself)
  };

  // Shared elimination: returns the residual and the expression of
  // (row - residual) over the accepted basis.
  void reduce(const RationalRowVector& row, RationalRowVector& residual,
              RationalVector& expr) const;

  Index dim_;
  std::vector<ReducedRow> reduced_;
};

/* A maximal independent subset of the rows of a matrix, chosen greedily in
 * increasing row order, plus the exact expansion of every remaining row in
 * that basis. Zero rows get the all-zero coordinate vector. */
struct RowBasis {
  std::vector<Index> basis_rows;           // increasing row indices, size rho
  std::map<Index, RationalVector> coords;  // non-basis row -> rho coefficients
};

Index rank(const RationalMatrix& m);
Index rank(const IntMatrix& m);

RowBasis row_basis(const RationalMatrix& m);

/// Expresses v over the rows of `basis_rows` (which must be linearly
/// independent); nullopt when v is not in their span.
/// Throws std::invalid_argument on dimension mismatch or a dependent basis.
std::optional<RationalVector> solve_in_span(const RationalVector& v,
                                            const RationalMatrix& basis_rows);

}  // namespace crn
