#pragma once

#include <cstddef>
#include <vector>

#include "liecontract/errors.hpp"
#include "liecontract/rational.hpp"

namespace liecontract {

/// Dense n-by-n matrix of exact rationals. Used for the constant factors of a
/// contraction matrix and for basis changes; those uses require it to be
/// invertible, which inverse() decides exactly.
class RationalMatrix {
public:
  RationalMatrix() = default;
  explicit RationalMatrix(int dim) : dim_(dim), e_(dim * dim, Rat(0)) {}

  static RationalMatrix identity(int dim) {
    RationalMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  static RationalMatrix diagonal(const RatVec& d) {
    RationalMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim_; ++i) m.at(i, i) = d[i];
    return m;
  }

  int dim() const { return dim_; }

  Rat& at(int row, int col) { return e_[row * dim_ + col]; }
  const Rat& at(int row, int col) const { return e_[row * dim_ + col]; }

  bool operator==(const RationalMatrix& o) const = default;

  RationalMatrix operator*(const RationalMatrix& o) const {
    RationalMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < dim_; ++k) {
        const Rat& a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < dim_; ++j) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
  }

  /// Exact inverse by Gauss-Jordan elimination.
  /// Throws SingularMatrixError when no inverse exists.
  RationalMatrix inverse() const {
    RationalMatrix a(*this);
    RationalMatrix inv = identity(dim_);
    for (int col = 0; col < dim_; ++col) {
      int pivot = -1;
      for (int row = col; row < dim_; ++row)
        if (a.at(row, col) != 0) {
          pivot = row;
          break;
        }
      if (pivot < 0) throw SingularMatrixError();
      if (pivot != col) {
        for (int j = 0; j < dim_; ++j) {
          std::swap(a.at(pivot, j), a.at(col, j));
          std::swap(inv.at(pivot, j), inv.at(col, j));
        }
      }
      Rat p = a.at(col, col);
      for (int j = 0; j < dim_; ++j) {
        a.at(col, j) /= p;
        inv.at(col, j) /= p;
      }
      for (int row = 0; row < dim_; ++row) {
        if (row == col) continue;
        Rat f = a.at(row, col);
        if (f == 0) continue;
        for (int j = 0; j < dim_; ++j) {
          a.at(row, j) -= f * a.at(col, j);
          inv.at(row, j) -= f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  bool invertible() const {
    try {
      inverse();
      return true;
    } catch (const SingularMatrixError&) {
      return false;
    }
  }

private:
  int dim_ = 0;
  RatVec e_;
};

}  // namespace liecontract
