#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "liecontract/errors.hpp"
#include "liecontract/matrix.hpp"
#include "liecontract/rational.hpp"

namespace liecontract {

/// 1-based index triple (i,j,k) of a bracket coefficient c_ij^k.
struct Triple {
  int i, j, k;
  auto operator<=>(const Triple&) const = default;
};

inline std::string to_string(const Triple& t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," +
         std::to_string(t.k) + ")";
}

/// Structure-constant tensor of an n-dimensional algebra over the rationals.
///
/// Only keys with i < j are stored; the i > j half is derived by antisymmetry
/// on access, so antisymmetry cannot be broken by construction. Indices are
/// 1-based everywhere in the public surface.
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(int dim) : dim_(dim) {
    if (dim < 1) throw Error("dimension must be positive");
  }

  int dim() const { return dim_; }

  /// Sets c_ij^k = v (and c_ji^k = -v). Requires i != j; brackets [e_i,e_i]
  /// vanish identically and cannot carry a nonzero coefficient.
  void set(int i, int j, int k, const Rat& v) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) {
      if (v != 0) throw Error("c_ii^k must vanish at " + to_string(Triple{i, j, k}));
      return;
    }
    Triple key{std::min(i, j), std::max(i, j), k};
    Rat stored = (i < j) ? v : -v;
    if (stored == 0)
      entries_.erase(key);
    else
      entries_[key] = stored;
  }

  /// c_ij^k for any orientation of (i,j).
  Rat at(int i, int j, int k) const {
    if (i == j) return Rat(0);
    auto it = entries_.find({std::min(i, j), std::max(i, j), k});
    if (it == entries_.end()) return Rat(0);
    return (i < j) ? it->second : -it->second;
  }

  /// The stored half of the tensor: nonzero entries with i < j, sorted.
  const std::map<Triple, Rat>& brackets() const { return entries_; }

  bool is_abelian() const { return entries_.empty(); }

  bool operator==(const StructureConstants& o) const = default;

private:
  void check_index(int i) const {
    if (i < 1 || i > dim_)
      throw Error("index " + std::to_string(i) + " out of range 1.." +
                  std::to_string(dim_));
  }

  int dim_ = 0;
  std::map<Triple, Rat> entries_;
};

/// Diagnostic result of validate_algebra: every violated antisymmetry pair
/// and every violated Jacobi quadruple, with exact residuals.
struct ValidationReport {
  struct AntisymmetryViolation {
    int i, j, k;
    Rat residual;  // c_ij^k + c_ji^k
  };
  struct JacobiViolation {
    int i, j, k, kp;
    Rat residual;
  };
  std::vector<AntisymmetryViolation> antisymmetry;
  std::vector<JacobiViolation> jacobi;

  bool ok() const { return antisymmetry.empty() && jacobi.empty(); }
};

/// Scans the materialized full tensor for antisymmetry and Jacobi violations.
/// An empty report means c defines a Lie algebra.
inline ValidationReport validate_algebra(const StructureConstants& c) {
  ValidationReport report;
  int n = c.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Rat r = c.at(i, j, k) + c.at(j, i, k);
        if (r != 0) report.antisymmetry.push_back({i, j, k, r});
      }
  // Jacobi residual at (i,j,k,k'): sum over i' of
  //   c_ij^i' c_i'k^k' + c_ki^i' c_i'j^k' + c_jk^i' c_i'i^k'
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int kp = 1; kp <= n; ++kp) {
          Rat r(0);
          for (int ip = 1; ip <= n; ++ip) {
            r += c.at(i, j, ip) * c.at(ip, k, kp);
            r += c.at(k, i, ip) * c.at(ip, j, kp);
            r += c.at(j, k, ip) * c.at(ip, i, kp);
          }
          if (r != 0) report.jacobi.push_back({i, j, k, kp, r});
        }
  return report;
}

/// Right action of a basis change U on the bracket:
/// c'_{i'j'}^{k'} = sum_{i,j,k} U(i,i') U(j,j') U^{-1}(k',k) c_ij^k.
/// Throws SingularMatrixError when U is not invertible.
inline StructureConstants transform(const StructureConstants& c,
                                    const RationalMatrix& u) {
  int n = c.dim();
  if (u.dim() != n) throw Error("matrix dimension mismatch");
  RationalMatrix uinv = u.inverse();
  StructureConstants out(n);
  for (int ip = 1; ip <= n; ++ip)
    for (int jp = ip + 1; jp <= n; ++jp)
      for (int kp = 1; kp <= n; ++kp) {
        Rat v(0);
        for (const auto& [t, cv] : c.brackets()) {
          // stored half (i<j) plus its antisymmetric mirror
          Rat pair = u.at(t.i - 1, ip - 1) * u.at(t.j - 1, jp - 1) -
                     u.at(t.j - 1, ip - 1) * u.at(t.i - 1, jp - 1);
          if (pair == 0) continue;
          v += cv * pair * uinv.at(kp - 1, t.k - 1);
        }
        out.set(ip, jp, kp, v);
      }
  return out;
}

/// True iff diag(d) is a derivation: (d_i + d_j - d_k) c_ij^k = 0 for all
/// i, j, k.
inline bool is_derivation(const StructureConstants& c, const RatVec& d) {
  if (static_cast<int>(d.size()) != c.dim())
    throw Error("derivation vector length mismatch");
  for (const auto& [t, v] : c.brackets()) {
    if ((d[t.i - 1] + d[t.j - 1] - d[t.k - 1]) != 0) return false;
  }
  return true;
}

}  // namespace liecontract
