#pragma once

#include <optional>
#include <tuple>
#include <variant>
#include <vector>

#include "liecontract/radical.hpp"
#include "liecontract/rational.hpp"

namespace liecontract {

/// One equation prod_i y_i^{e_i} = rhs with integer exponents and a nonzero
/// rational right-hand side.
struct MulEquation {
  IntVec exponents;
  Rat rhs;
};

/// The multiplicative system determining the rescaling constants: initially
/// one equation y_i y_j / y_k = F per surviving triple.
struct MultiplicativeSystem {
  int n = 0;
  std::vector<MulEquation> equations;
};

/// Witness that the system has no solution over the nonzero reals: integer
/// exponents m over the equations whose combination collapses the left side
/// to 1 while the right side differs from 1 (unit_mismatch), or to an even
/// power with a negative right side (negative_square).
struct MultiplicativeInfeasibility {
  enum class Kind { unit_mismatch, negative_square };
  Kind kind;
  IntVec exponents;
};

/// Exact re-validation of a certificate against its system.
inline bool check_multiplicative_certificate(
    const MultiplicativeSystem& sys, const MultiplicativeInfeasibility& cert) {
  if (cert.exponents.size() != sys.equations.size()) return false;
  IntVec combined(sys.n, 0);
  Rat prod(1);
  for (std::size_t s = 0; s < sys.equations.size(); ++s) {
    const Int& m = cert.exponents[s];
    if (m == 0) continue;
    for (int j = 0; j < sys.n; ++j)
      combined[j] += m * sys.equations[s].exponents[j];
    prod *= rat_pow(sys.equations[s].rhs, m);
  }
  bool zero = true, even = true, nonzero_seen = false;
  for (const Int& x : combined) {
    if (x != 0) {
      zero = false;
      nonzero_seen = true;
    }
    if (x % 2 != 0) even = false;
  }
  switch (cert.kind) {
    case MultiplicativeInfeasibility::Kind::unit_mismatch:
      return zero && prod != 1;
    case MultiplicativeInfeasibility::Kind::negative_square:
      return nonzero_seen && even && prod < 0;
  }
  return false;
}

namespace detail {

/// Extended Euclid: returns (g, x, y) with g = a x + b y, g = gcd(|a|,|b|) > 0
/// for (a, b) != (0, 0).
inline std::tuple<Int, Int, Int> extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

/// Sign subsystem over GF(2): one parity equation per multiplicative
/// equation. Returns the sign assignment, or the 0/1 combination witnessing
/// inconsistency.
struct SignOutcome {
  std::optional<std::vector<int>> signs;  // per variable, +-1
  std::optional<IntVec> witness;          // 0/1 over the equations
};

inline SignOutcome solve_sign_parities(const MultiplicativeSystem& sys) {
  struct Row {
    std::vector<char> bits;
    char rhs;
    std::vector<char> prov;
  };
  std::vector<Row> rows;
  rows.reserve(sys.equations.size());
  for (std::size_t s = 0; s < sys.equations.size(); ++s) {
    Row r;
    r.bits.assign(sys.n, 0);
    for (int j = 0; j < sys.n; ++j)
      r.bits[j] = static_cast<char>(sys.equations[s].exponents[j] % 2 != 0);
    r.rhs = static_cast<char>(sys.equations[s].rhs < 0);
    r.prov.assign(sys.equations.size(), 0);
    r.prov[s] = 1;
    rows.push_back(std::move(r));
  }
  std::vector<int> pivot_row_of_col(sys.n, -1);
  std::vector<bool> used(rows.size(), false);
  for (int col = 0; col < sys.n; ++col) {
    int pivot = -1;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!used[r] && rows[r].bits[col]) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    used[pivot] = true;
    pivot_row_of_col[col] = pivot;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == pivot || !rows[r].bits[col]) continue;
      for (int j = 0; j < sys.n; ++j) rows[r].bits[j] ^= rows[pivot].bits[j];
      rows[r].rhs ^= rows[pivot].rhs;
      for (std::size_t s = 0; s < rows[r].prov.size(); ++s)
        rows[r].prov[s] ^= rows[pivot].prov[s];
    }
  }
  SignOutcome out;
  for (const Row& r : rows) {
    bool zero = true;
    for (char b : r.bits)
      if (b) {
        zero = false;
        break;
      }
    if (zero && r.rhs) {
      IntVec w(r.prov.begin(), r.prov.end());
      out.witness = std::move(w);
      return out;
    }
  }
  std::vector<int> signs(sys.n, 1);
  for (int col = 0; col < sys.n; ++col) {
    int p = pivot_row_of_col[col];
    if (p >= 0 && rows[p].rhs) signs[col] = -1;  // free bits are 0
  }
  out.signs = std::move(signs);
  return out;
}

}  // namespace detail

/// Solves the multiplicative system over the nonzero reals.
///
/// Signs are resolved first (each equation constrains the sign pattern of its
/// unknowns through the parity of the exponents). Magnitudes then follow the
/// multiplicative Gaussian elimination: repeatedly combine the equations with
/// the Bezout coefficients of the pivot variable's degrees into an equation
/// of minimal positive degree, use it to clear that variable everywhere, and
/// back-solve the pivots as radical products. Unconstrained variables get
/// value 1. A residual equation 1 = G with G != 1 yields a unit_mismatch
/// certificate from the tracked integer combination; an inconsistent sign
/// pattern yields the even-power negative_square (or unit_mismatch)
/// certificate.
inline std::variant<std::vector<RadicalProduct>, MultiplicativeInfeasibility>
solve_gamma(const MultiplicativeSystem& sys) {
  for (const auto& eq : sys.equations) {
    if (eq.rhs == 0) throw Error("multiplicative right-hand sides are nonzero");
    if (static_cast<int>(eq.exponents.size()) != sys.n)
      throw Error("exponent vector length differs from n");
  }

  auto sign_outcome = detail::solve_sign_parities(sys);
  if (sign_outcome.witness) {
    MultiplicativeInfeasibility cert;
    cert.exponents = *sign_outcome.witness;
    IntVec combined(sys.n, 0);
    for (std::size_t s = 0; s < sys.equations.size(); ++s)
      if (cert.exponents[s] != 0)
        for (int j = 0; j < sys.n; ++j)
          combined[j] += cert.exponents[s] * sys.equations[s].exponents[j];
    bool zero = true;
    for (const Int& x : combined)
      if (x != 0) {
        zero = false;
        break;
      }
    cert.kind = zero ? MultiplicativeInfeasibility::Kind::unit_mismatch
                     : MultiplicativeInfeasibility::Kind::negative_square;
    if (!check_multiplicative_certificate(sys, cert))
      throw Error("internal: multiplicative certificate failed re-validation");
    return cert;
  }
  const std::vector<int>& signs = *sign_outcome.signs;

  // Magnitude elimination over positive rationals.
  struct MEq {
    IntVec e;
    Rat g;  // positive
    IntVec m;
  };
  std::vector<MEq> eqs;
  eqs.reserve(sys.equations.size());
  for (std::size_t s = 0; s < sys.equations.size(); ++s) {
    MEq q{sys.equations[s].exponents, abs(sys.equations[s].rhs),
          IntVec(sys.equations.size(), Int(0))};
    q.m[s] = 1;
    eqs.push_back(std::move(q));
  }

  struct Pivot {
    int var;  // 0-based
    MEq eq;
    Int degree;
  };
  std::vector<Pivot> pivots;

  auto drop_or_certify = [&](std::vector<MEq>& list)
      -> std::optional<MultiplicativeInfeasibility> {
    std::vector<MEq> keep;
    for (MEq& q : list) {
      bool zero = true;
      for (const Int& x : q.e)
        if (x != 0) {
          zero = false;
          break;
        }
      if (!zero) {
        keep.push_back(std::move(q));
        continue;
      }
      if (q.g != 1) {
        MultiplicativeInfeasibility cert;
        cert.kind = MultiplicativeInfeasibility::Kind::unit_mismatch;
        cert.exponents = q.m;
        return cert;
      }
    }
    list = std::move(keep);
    return std::nullopt;
  };

  if (auto cert = drop_or_certify(eqs)) {
    if (!check_multiplicative_certificate(sys, *cert))
      throw Error("internal: multiplicative certificate failed re-validation");
    return *cert;
  }

  while (!eqs.empty()) {
    int var = -1;
    for (int j = sys.n - 1; j >= 0; --j) {
      for (const MEq& q : eqs)
        if (q.e[j] != 0) {
          var = j;
          break;
        }
      if (var >= 0) break;
    }
    if (var < 0) throw Error("internal: nonempty system without variables");

    // Bezout combination of the degrees in `var`, folded in equation order.
    Int g = 0;
    IntVec delta(eqs.size(), Int(0));
    for (std::size_t s = 0; s < eqs.size(); ++s) {
      const Int& beta = eqs[s].e[var];
      if (beta == 0) continue;
      if (g == 0) {
        g = abs(beta);
        delta[s] = beta > 0 ? 1 : -1;
        continue;
      }
      auto [g2, u, v] = detail::extended_gcd(g, beta);
      for (std::size_t t = 0; t < s; ++t) delta[t] *= u;
      delta[s] = v;
      g = g2;
    }

    MEq piv{IntVec(sys.n, Int(0)), Rat(1), IntVec(sys.equations.size(), Int(0))};
    for (std::size_t s = 0; s < eqs.size(); ++s) {
      if (delta[s] == 0) continue;
      for (int j = 0; j < sys.n; ++j) piv.e[j] += delta[s] * eqs[s].e[j];
      for (std::size_t t = 0; t < piv.m.size(); ++t)
        piv.m[t] += delta[s] * eqs[s].m[t];
      piv.g *= rat_pow(eqs[s].g, delta[s]);
    }
    if (piv.e[var] != g) throw Error("internal: pivot degree mismatch");

    for (MEq& q : eqs) {
      if (q.e[var] == 0) continue;
      Int quo = q.e[var] / g;
      for (int j = 0; j < sys.n; ++j) q.e[j] -= quo * piv.e[j];
      for (std::size_t t = 0; t < q.m.size(); ++t) q.m[t] -= quo * piv.m[t];
      q.g *= rat_pow(piv.g, -quo);
    }
    pivots.push_back({var, piv, g});
    if (auto cert = drop_or_certify(eqs)) {
      if (!check_multiplicative_certificate(sys, *cert))
        throw Error(
            "internal: multiplicative certificate failed re-validation");
      return *cert;
    }
  }

  // Back-solve the pivots in reverse order; free variables stay 1.
  std::vector<RadicalProduct> magnitude(sys.n, RadicalProduct::one());
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    RadicalProduct r = RadicalProduct::from_rational(it->eq.g);
    for (int j = 0; j < sys.n; ++j) {
      if (j == it->var || it->eq.e[j] == 0) continue;
      r = r / magnitude[j].pow_int(it->eq.e[j]);
    }
    magnitude[it->var] = r.root(it->degree);
  }

  std::vector<RadicalProduct> gamma = std::move(magnitude);
  for (int j = 0; j < sys.n; ++j)
    if (signs[j] < 0) gamma[j].set_sign(-gamma[j].sign());
  return gamma;
}

/// Exact substitution check of a candidate solution. Rational fast path;
/// otherwise the comparison runs in canonical radical form.
inline bool verify_gamma(const MultiplicativeSystem& sys,
                         const std::vector<RadicalProduct>& gamma) {
  if (static_cast<int>(gamma.size()) != sys.n) return false;
  bool all_rational = true;
  RatVec as_rat(sys.n);
  for (int j = 0; j < sys.n; ++j) {
    auto r = gamma[j].to_rational();
    if (!r) {
      all_rational = false;
      break;
    }
    if (*r == 0) return false;
    as_rat[j] = *r;
  }
  for (const MulEquation& eq : sys.equations) {
    if (all_rational) {
      Rat lhs(1);
      for (int j = 0; j < sys.n; ++j)
        if (eq.exponents[j] != 0) lhs *= rat_pow(as_rat[j], eq.exponents[j]);
      if (lhs != eq.rhs) return false;
    } else {
      RadicalProduct lhs = RadicalProduct::one();
      for (int j = 0; j < sys.n; ++j)
        if (eq.exponents[j] != 0) lhs *= gamma[j].pow_int(eq.exponents[j]);
      if (!(lhs == RadicalProduct::from_rational(eq.rhs))) return false;
    }
  }
  return true;
}

inline bool verify_gamma(const MultiplicativeSystem& sys, const RatVec& gamma) {
  std::vector<RadicalProduct> g;
  g.reserve(gamma.size());
  for (const Rat& v : gamma) g.push_back(RadicalProduct::from_rational(v));
  return verify_gamma(sys, g);
}

}  // namespace liecontract
