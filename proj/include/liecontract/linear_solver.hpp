#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "liecontract/contraction.hpp"
#include "liecontract/rational.hpp"

namespace liecontract {

/// Optional per-index restriction on the solution vector.
enum class SignConstraint { free_, positive, nonnegative, negative, nonpositive };

/// Homogeneous mixed system: rows of eq_rows vanish, rows of ineq_rows are
/// strictly positive, and sign_constraints (empty, or one per index) restrict
/// single components. The zero vector satisfies every equation.
struct MixedLinearSystem {
  int n = 0;
  std::vector<IntVec> eq_rows;
  std::vector<IntVec> ineq_rows;
  std::vector<SignConstraint> sign_constraints;  // empty or size n

  /// Sign constraints materialized as rows: +-e_j, strict or not, ascending j.
  struct SignRow {
    int index;  // 1-based
    IntVec coeffs;
    bool strict;
  };
  std::vector<SignRow> sign_rows() const {
    std::vector<SignRow> rows;
    if (sign_constraints.empty()) return rows;
    for (int j = 0; j < n; ++j) {
      SignConstraint sc = sign_constraints[j];
      if (sc == SignConstraint::free_) continue;
      IntVec r(n, 0);
      bool strict =
          sc == SignConstraint::positive || sc == SignConstraint::negative;
      bool up = sc == SignConstraint::positive || sc == SignConstraint::nonnegative;
      r[j] = up ? 1 : -1;
      rows.push_back({j + 1, std::move(r), strict});
    }
    return rows;
  }
};

/// Row +1 at i, +1 at j, -1 at k with coinciding indices summed.
inline IntVec triple_row(int n, const Triple& t) {
  IntVec r(n, 0);
  r[t.i - 1] += 1;
  r[t.j - 1] += 1;
  r[t.k - 1] -= 1;
  return r;
}

/// One equation row per surviving triple and one strict inequality row per
/// vanishing triple, both in sorted triple order.
inline MixedLinearSystem build_system(
    const StructureConstants& c, const TripleClassification& cls,
    const std::vector<SignConstraint>& sign_constraints = {}) {
  MixedLinearSystem sys;
  sys.n = c.dim();
  for (const auto& [t, f] : cls.surviving)
    sys.eq_rows.push_back(triple_row(sys.n, t));
  for (const Triple& t : cls.vanishing)
    sys.ineq_rows.push_back(triple_row(sys.n, t));
  sys.sign_constraints = sign_constraints;
  return sys;
}

/// Witness that the mixed system has no solution: an exact vanishing
/// combination with nonnegative weights on inequality-like rows, at least one
/// of them on a strict row. Summing the weighted rows gives the zero vector,
/// which contradicts 0 > 0.
struct LinearInfeasibility {
  IntVec eq_coeffs;    // over eq_rows, any sign
  IntVec ineq_coeffs;  // over ineq_rows, nonnegative
  IntVec sign_coeffs;  // over sys.sign_rows(), nonnegative
};

/// Exact re-validation of a certificate against its system.
inline bool check_linear_certificate(const MixedLinearSystem& sys,
                                     const LinearInfeasibility& cert) {
  auto srows = sys.sign_rows();
  if (cert.eq_coeffs.size() != sys.eq_rows.size()) return false;
  if (cert.ineq_coeffs.size() != sys.ineq_rows.size()) return false;
  if (cert.sign_coeffs.size() != srows.size()) return false;
  IntVec sum(sys.n, 0);
  Int strict_mass = 0;
  for (std::size_t r = 0; r < sys.eq_rows.size(); ++r)
    for (int j = 0; j < sys.n; ++j) sum[j] += cert.eq_coeffs[r] * sys.eq_rows[r][j];
  for (std::size_t r = 0; r < sys.ineq_rows.size(); ++r) {
    if (cert.ineq_coeffs[r] < 0) return false;
    strict_mass += cert.ineq_coeffs[r];
    for (int j = 0; j < sys.n; ++j)
      sum[j] += cert.ineq_coeffs[r] * sys.ineq_rows[r][j];
  }
  for (std::size_t r = 0; r < srows.size(); ++r) {
    if (cert.sign_coeffs[r] < 0) return false;
    if (srows[r].strict) strict_mass += cert.sign_coeffs[r];
    for (int j = 0; j < sys.n; ++j)
      sum[j] += cert.sign_coeffs[r] * srows[r].coeffs[j];
  }
  if (strict_mass == 0) return false;
  for (int j = 0; j < sys.n; ++j)
    if (sum[j] != 0) return false;
  return true;
}

/// Exact substitution check of an integer vector against the full system.
inline bool satisfies_system(const MixedLinearSystem& sys, const IntVec& x) {
  if (static_cast<int>(x.size()) != sys.n) return false;
  auto dot = [&](const IntVec& row) {
    Int s = 0;
    for (int j = 0; j < sys.n; ++j) s += row[j] * x[j];
    return s;
  };
  for (const IntVec& r : sys.eq_rows)
    if (dot(r) != 0) return false;
  for (const IntVec& r : sys.ineq_rows)
    if (dot(r) <= 0) return false;
  for (const auto& sr : sys.sign_rows()) {
    Int s = dot(sr.coeffs);
    if (sr.strict ? s <= 0 : s < 0) return false;
  }
  return true;
}

/// a_i x_i = sum_j rhs_j x_j with positive lead a_i; rhs is supported on the
/// free indices only. eq_combo expresses the defining row
/// (lead at index, -rhs elsewhere) as an exact combination of the original
/// equation rows.
struct Expression {
  int index;  // 0-based
  Int lead;
  IntVec rhs;
  RatVec eq_combo;
};

/// An inequality row rewritten over the free indices:
///   coeffs = scale * original_row + eq_combo . eq_rows,  scale > 0.
struct ReducedIneq {
  IntVec coeffs;
  bool strict = true;
  Rat scale = 1;
  RatVec eq_combo;
};

struct EliminationResult {
  int n = 0;
  std::vector<Expression> expressions;  // ascending index
  std::vector<ReducedIneq> reduced_ineqs;

  bool expressed(int index) const {
    for (const auto& e : expressions)
      if (e.index == index) return true;
    return false;
  }
  std::vector<int> free_indices() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
      if (!expressed(i)) out.push_back(i);
    return out;
  }
};

namespace detail {

inline void normalize_equation(IntVec& coeffs, RatVec& combo) {
  Int g = vector_gcd(coeffs);
  if (g > 1) {
    for (Int& x : coeffs) x /= g;
    for (Rat& x : combo) x /= Rat(g);
  }
  for (const Int& x : coeffs) {
    if (x == 0) continue;
    if (x < 0) {
      for (Int& y : coeffs) y = -y;
      for (Rat& y : combo) y = -y;
    }
    break;
  }
}

}  // namespace detail

/// Rewrites one inequality row over the free indices of an elimination
/// result, multiplying by the (positive) leads instead of dividing.
inline ReducedIneq substitute_row(const EliminationResult& res, IntVec row,
                                  bool strict, std::size_t eq_count) {
  ReducedIneq out;
  out.strict = strict;
  out.scale = 1;
  out.eq_combo.assign(eq_count, Rat(0));
  for (const Expression& e : res.expressions) {
    Int c = row[e.index];
    if (c == 0) continue;
    IntVec next(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
      next[j] = e.lead * row[j] + c * e.rhs[j];
    next[e.index] = 0;
    row = std::move(next);
    for (std::size_t r = 0; r < eq_count; ++r)
      out.eq_combo[r] = Rat(e.lead) * out.eq_combo[r] - Rat(c) * e.eq_combo[r];
    out.scale *= Rat(e.lead);
  }
  Int g = vector_gcd(row);
  if (g > 1) {
    for (Int& x : row) x /= g;
    for (Rat& x : out.eq_combo) x /= Rat(g);
    out.scale /= Rat(g);
  }
  out.coeffs = std::move(row);
  return out;
}

/// Integer Gauss-Jordan elimination of the equation subsystem. Pivot rule:
/// lowest column index first, then lowest row. The inequality rows are
/// rewritten over the free indices without any division.
inline EliminationResult eliminate_equations(const MixedLinearSystem& sys) {
  struct Work {
    IntVec coeffs;
    RatVec combo;
  };
  std::vector<Work> rows;
  rows.reserve(sys.eq_rows.size());
  for (std::size_t r = 0; r < sys.eq_rows.size(); ++r) {
    Work w{sys.eq_rows[r], RatVec(sys.eq_rows.size(), Rat(0))};
    w.combo[r] = 1;
    detail::normalize_equation(w.coeffs, w.combo);
    rows.push_back(std::move(w));
  }
  std::vector<int> pivot_row_of_col(sys.n, -1);
  std::vector<bool> is_pivot_row(rows.size(), false);
  for (int col = 0; col < sys.n; ++col) {
    int pivot = -1;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!is_pivot_row[r] && rows[r].coeffs[col] != 0) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    pivot_row_of_col[col] = pivot;
    is_pivot_row[pivot] = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == pivot || rows[r].coeffs[col] == 0) continue;
      Int a = rows[pivot].coeffs[col];
      Int b = rows[r].coeffs[col];
      Int g = int_gcd(a, b);
      Int fa = a / g, fb = b / g;
      for (int j = 0; j < sys.n; ++j)
        rows[r].coeffs[j] = fa * rows[r].coeffs[j] - fb * rows[pivot].coeffs[j];
      for (std::size_t e = 0; e < rows[r].combo.size(); ++e)
        rows[r].combo[e] =
            Rat(fa) * rows[r].combo[e] - Rat(fb) * rows[pivot].combo[e];
      detail::normalize_equation(rows[r].coeffs, rows[r].combo);
    }
  }

  EliminationResult res;
  res.n = sys.n;
  for (int col = 0; col < sys.n; ++col) {
    int p = pivot_row_of_col[col];
    if (p < 0) continue;
    Work w = rows[p];
    if (w.coeffs[col] < 0) {
      for (Int& x : w.coeffs) x = -x;
      for (Rat& x : w.combo) x = -x;
    }
    Expression e;
    e.index = col;
    e.lead = w.coeffs[col];
    e.rhs.assign(sys.n, Int(0));
    for (int j = 0; j < sys.n; ++j)
      if (j != col) e.rhs[j] = -w.coeffs[j];
    e.eq_combo = w.combo;
    res.expressions.push_back(std::move(e));
  }
  for (const IntVec& r : sys.ineq_rows)
    res.reduced_ineqs.push_back(
        substitute_row(res, r, /*strict=*/true, sys.eq_rows.size()));
  return res;
}

/// One homogeneous inequality row: coeffs . x > 0 (strict) or >= 0.
struct IneqRow {
  IntVec coeffs;
  bool strict = true;
};

namespace detail {

struct FMRow {
  IntVec coeffs;
  bool strict;
  RatVec prov;  // combination of the caller's input rows, nonnegative
};

inline void normalize_fm(FMRow& row) {
  Int g = vector_gcd(row.coeffs);
  if (g > 1) {
    for (Int& x : row.coeffs) x /= g;
    for (Rat& x : row.prov) x /= Rat(g);
  }
}

inline bool all_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

/// Point over the variables, or a nonnegative combination of the input rows
/// that sums to the zero form (with positive weight on a strict row).
struct FMOutcome {
  std::optional<RatVec> point;
  std::optional<RatVec> certificate;
};

inline FMOutcome fourier_motzkin(std::vector<FMRow> rows, int nvars) {
  FMOutcome out;
  // Zero rows never enter the working set: a strict one is already the
  // contradiction 0 > 0, a non-strict one carries no information.
  std::vector<FMRow> live;
  for (FMRow& r : rows) {
    if (all_zero(r.coeffs)) {
      if (r.strict) {
        out.certificate = std::move(r.prov);
        return out;
      }
      continue;
    }
    normalize_fm(r);
    live.push_back(std::move(r));
  }

  std::vector<std::pair<int, std::vector<FMRow>>> states;
  for (int v = 0; v < nvars; ++v) {
    bool present = false;
    for (const FMRow& r : live)
      if (r.coeffs[v] != 0) {
        present = true;
        break;
      }
    if (!present) continue;
    states.emplace_back(v, live);

    std::vector<FMRow> next;
    std::map<std::pair<IntVec, bool>, std::size_t> seen;
    auto push = [&](FMRow&& r) -> bool {
      if (all_zero(r.coeffs)) {
        if (r.strict) {
          out.certificate = std::move(r.prov);
          return false;
        }
        return true;
      }
      normalize_fm(r);
      auto key = std::make_pair(r.coeffs, r.strict);
      auto dual = std::make_pair(r.coeffs, !r.strict);
      if (seen.contains(key)) return true;  // exact duplicate
      auto dt = seen.find(dual);
      if (dt != seen.end()) {
        if (r.strict) {
          // strict and non-strict copies conjoin to the strict one
          std::size_t idx = dt->second;
          next[idx] = std::move(r);
          seen.erase(dt);
          seen.emplace(key, idx);
        }
        return true;
      }
      seen.emplace(key, next.size());
      next.push_back(std::move(r));
      return true;
    };

    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < live.size(); ++r) {
      if (live[r].coeffs[v] > 0)
        pos.push_back(r);
      else if (live[r].coeffs[v] < 0)
        neg.push_back(r);
      else {
        FMRow copy = live[r];
        if (!push(std::move(copy))) return out;
      }
    }
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        const FMRow &rp = live[p], &rq = live[q];
        Int a = rp.coeffs[v];
        Int b = -rq.coeffs[v];
        FMRow comb;
        comb.strict = rp.strict || rq.strict;
        comb.coeffs.assign(nvars, Int(0));
        for (int j = 0; j < nvars; ++j)
          comb.coeffs[j] = b * rp.coeffs[j] + a * rq.coeffs[j];
        comb.prov.assign(rp.prov.size(), Rat(0));
        for (std::size_t t = 0; t < comb.prov.size(); ++t)
          comb.prov[t] = Rat(b) * rp.prov[t] + Rat(a) * rq.prov[t];
        if (!push(std::move(comb))) return out;
      }
    live = std::move(next);
  }

  // Feasible: back-substitute in reverse elimination order.
  RatVec values(nvars, Rat(0));
  for (auto it = states.rbegin(); it != states.rend(); ++it) {
    int v = it->first;
    std::optional<Rat> lower, upper;
    bool lower_strict = false, upper_strict = false;
    for (const FMRow& r : it->second) {
      if (r.coeffs[v] == 0) continue;
      Rat rest(0);
      for (int j = 0; j < nvars; ++j)
        if (j != v && r.coeffs[j] != 0) rest += Rat(r.coeffs[j]) * values[j];
      Rat bound = -rest / Rat(r.coeffs[v]);
      if (r.coeffs[v] > 0) {
        if (!lower || bound > *lower) {
          lower = bound;
          lower_strict = r.strict;
        } else if (bound == *lower) {
          lower_strict = lower_strict || r.strict;
        }
      } else {
        if (!upper || bound < *upper) {
          upper = bound;
          upper_strict = r.strict;
        } else if (bound == *upper) {
          upper_strict = upper_strict || r.strict;
        }
      }
    }
    if (lower && upper) {
      if (*lower == *upper) {
        if (lower_strict || upper_strict)
          throw Error("internal: empty interval in feasible system");
        values[v] = *lower;
      } else {
        values[v] = (*lower + *upper) / 2;
      }
    } else if (lower) {
      values[v] = *lower + 1;
    } else if (upper) {
      values[v] = *upper - 1;
    }
  }
  out.point = std::move(values);
  return out;
}

}  // namespace detail

/// Fourier-Motzkin over exact rationals: an interior point of the homogeneous
/// system, or natural multipliers combining the rows to the zero form.
inline std::variant<RatVec, IntVec> solve_strict_inequalities(
    const std::vector<IneqRow>& rows, int nvars) {
  std::vector<detail::FMRow> work;
  work.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    detail::FMRow w;
    w.coeffs = rows[r].coeffs;
    w.strict = rows[r].strict;
    w.prov.assign(rows.size(), Rat(0));
    w.prov[r] = 1;
    work.push_back(std::move(w));
  }
  auto outcome = detail::fourier_motzkin(std::move(work), nvars);
  if (outcome.point) return *outcome.point;
  const RatVec& mult = *outcome.certificate;
  Int l = common_denominator(mult);
  IntVec cleared;
  cleared.reserve(mult.size());
  for (const Rat& m : mult) cleared.push_back(scale_to_int(m, l));
  return cleared;
}

/// Integer solution of the full mixed system, or an infeasibility witness.
///
/// Composes the equation elimination, Fourier-Motzkin over the free indices,
/// back-substitution of the expressed indices, denominator clearing by the
/// lcm and reduction by the gcd of the entries. The returned vector satisfies
/// every row and sign constraint exactly.
inline std::variant<IntVec, LinearInfeasibility> solve_integer_signature(
    const MixedLinearSystem& sys) {
  EliminationResult res = eliminate_equations(sys);
  auto srows = sys.sign_rows();
  std::vector<ReducedIneq> reduced = res.reduced_ineqs;
  for (const auto& sr : srows)
    reduced.push_back(
        substitute_row(res, sr.coeffs, sr.strict, sys.eq_rows.size()));

  std::vector<detail::FMRow> work;
  work.reserve(reduced.size());
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    detail::FMRow w;
    w.coeffs = reduced[r].coeffs;
    w.strict = reduced[r].strict;
    w.prov.assign(reduced.size(), Rat(0));
    w.prov[r] = 1;
    work.push_back(std::move(w));
  }
  auto outcome = detail::fourier_motzkin(std::move(work), sys.n);

  if (outcome.certificate) {
    const RatVec& mult = *outcome.certificate;
    RatVec eq(sys.eq_rows.size(), Rat(0));
    RatVec ineq(sys.ineq_rows.size(), Rat(0));
    RatVec sign(srows.size(), Rat(0));
    for (std::size_t t = 0; t < reduced.size(); ++t) {
      if (mult[t] == 0) continue;
      if (t < res.reduced_ineqs.size())
        ineq[t] += mult[t] * reduced[t].scale;
      else
        sign[t - res.reduced_ineqs.size()] += mult[t] * reduced[t].scale;
      for (std::size_t e = 0; e < eq.size(); ++e)
        eq[e] += mult[t] * reduced[t].eq_combo[e];
    }
    RatVec all;
    all.insert(all.end(), eq.begin(), eq.end());
    all.insert(all.end(), ineq.begin(), ineq.end());
    all.insert(all.end(), sign.begin(), sign.end());
    Int l = common_denominator(all);
    LinearInfeasibility cert;
    for (const Rat& x : eq) cert.eq_coeffs.push_back(scale_to_int(x, l));
    for (const Rat& x : ineq) cert.ineq_coeffs.push_back(scale_to_int(x, l));
    for (const Rat& x : sign) cert.sign_coeffs.push_back(scale_to_int(x, l));
    if (!check_linear_certificate(sys, cert))
      throw Error("internal: certificate failed re-validation");
    return cert;
  }

  RatVec x = *outcome.point;
  for (const Expression& e : res.expressions) {
    Rat v(0);
    for (int j = 0; j < sys.n; ++j)
      if (e.rhs[j] != 0) v += Rat(e.rhs[j]) * x[j];
    x[e.index] = v / Rat(e.lead);
  }
  Int l = common_denominator(x);
  IntVec alpha;
  alpha.reserve(x.size());
  for (const Rat& v : x) alpha.push_back(scale_to_int(v, l));
  Int g = vector_gcd(alpha);
  if (g > 1)
    for (Int& v : alpha) v /= g;

  if (!satisfies_system(sys, alpha))
    throw Error("internal: solution failed the substitution check");
  return alpha;
}

}  // namespace liecontract
