#pragma once

// Exact dense linear algebra over any field-like scalar. Used with
// kgraph::Rational; the templates never divide unless the pivot is nonzero.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace kgraph {

/// Arbitrary-precision rational. Expression templates are off so that Eigen
/// sees a plain value type.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Rank by forward elimination with exact pivots.
template <typename Scalar>
std::size_t exact_rank(DenseMatrix<Scalar> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::size_t rank = 0;
  Eigen::Index pivot_row = 0;
  for (Eigen::Index c = 0; c < cols && pivot_row < rows; ++c) {
    Eigen::Index found = pivot_row;
    while (found < rows && m(found, c) == Scalar(0)) ++found;
    if (found == rows) continue;
    if (found != pivot_row) m.row(found).swap(m.row(pivot_row));
    const Scalar pivot = m(pivot_row, c);
    for (Eigen::Index r = pivot_row + 1; r < rows; ++r) {
      if (m(r, c) == Scalar(0)) continue;
      const Scalar factor = m(r, c) / pivot;
      for (Eigen::Index j = c; j < cols; ++j) m(r, j) -= factor * m(pivot_row, j);
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

/// Sparse row: (column, value) pairs with strictly increasing columns and no
/// zero values.
template <typename Scalar>
using SparseRow = std::vector<std::pair<Eigen::Index, Scalar>>;

/// Rank of a family of sparse rows. Rows are reduced one at a time against
/// pivots keyed by their leading column, so sparse families stay sparse.
template <typename Scalar>
std::size_t sparse_exact_rank(const std::vector<SparseRow<Scalar>>& rows) {
  std::map<Eigen::Index, SparseRow<Scalar>> pivots;
  for (SparseRow<Scalar> row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const Scalar lead = row.front().second;
        for (auto& entry : row) entry.second /= lead;
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      // row -= row.lead * pivot; the pivot's leading coefficient is 1.
      const Scalar factor = row.front().second;
      const SparseRow<Scalar>& pivot = it->second;
      SparseRow<Scalar> next;
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
          next.push_back(row[a++]);
        } else if (a == row.size() || pivot[b].first < row[a].first) {
          next.emplace_back(pivot[b].first, -factor * pivot[b].second);
          ++b;
        } else {
          Scalar value = row[a].second - factor * pivot[b].second;
          if (value != Scalar(0)) next.emplace_back(row[a].first, std::move(value));
          ++a;
          ++b;
        }
      }
      row = std::move(next);
    }
  }
  return pivots.size();
}

}  // namespace kgraph
