#pragma once

#include <map>
#include <optional>
#include <vector>

#include "liecontract/errors.hpp"
#include "liecontract/rational.hpp"

namespace liecontract {

/// Exact nonzero real of the form sign * prod p^e over prime bases p with
/// rational exponents e. The canonical form (sorted primes, nonzero
/// exponents) makes equality a plain structural comparison.
class RadicalProduct {
public:
  RadicalProduct() = default;

  static RadicalProduct one() { return RadicalProduct(); }

  static RadicalProduct from_rational(const Rat& q) {
    if (q == 0) throw Error("radical products are nonzero");
    RadicalProduct r;
    r.sign_ = q < 0 ? -1 : 1;
    r.accumulate(abs(numerator(q)), Rat(1));
    r.accumulate(denominator(q), Rat(-1));
    return r;
  }

  /// Positive rational base raised to a rational exponent.
  static RadicalProduct power(const Rat& base, const Rat& exp) {
    if (base <= 0) throw Error("radical base must be positive");
    RadicalProduct r;
    r.accumulate(numerator(base), exp);
    r.accumulate(denominator(base), -exp);
    return r;
  }

  int sign() const { return sign_; }
  void set_sign(int s) { sign_ = s; }
  const std::map<Int, Rat>& factors() const { return factors_; }

  bool operator==(const RadicalProduct&) const = default;

  RadicalProduct& operator*=(const RadicalProduct& o) {
    sign_ *= o.sign_;
    for (const auto& [p, e] : o.factors_) add_exponent(p, e);
    return *this;
  }
  RadicalProduct operator*(const RadicalProduct& o) const {
    RadicalProduct r(*this);
    r *= o;
    return r;
  }
  RadicalProduct inverse() const {
    RadicalProduct r;
    r.sign_ = sign_;
    for (const auto& [p, e] : factors_) r.factors_.emplace(p, -e);
    return r;
  }
  RadicalProduct operator/(const RadicalProduct& o) const {
    return *this * o.inverse();
  }

  RadicalProduct pow_int(const Int& k) const {
    RadicalProduct r;
    if (k == 0) return r;
    r.sign_ = (k % 2 == 0) ? 1 : sign_;
    for (const auto& [p, e] : factors_) {
      Rat ne = e * Rat(k);
      if (ne != 0) r.factors_.emplace(p, ne);
    }
    return r;
  }

  /// Principal real k-th root, k >= 1. An even root of a negative value does
  /// not exist over the reals.
  RadicalProduct root(const Int& k) const {
    if (k < 1) throw Error("root order must be positive");
    if (sign_ < 0 && k % 2 == 0)
      throw Error("even root of a negative product");
    RadicalProduct r;
    r.sign_ = sign_;
    for (const auto& [p, e] : factors_) r.factors_.emplace(p, e / Rat(k));
    return r;
  }

  bool is_rational() const {
    for (const auto& [p, e] : factors_)
      if (!is_integer(e)) return false;
    return true;
  }

  std::optional<Rat> to_rational() const {
    if (!is_rational()) return std::nullopt;
    Rat v(sign_);
    for (const auto& [p, e] : factors_) v *= rat_pow(Rat(p), numerator(e));
    return v;
  }

private:
  void add_exponent(const Int& p, const Rat& e) {
    auto [it, inserted] = factors_.emplace(p, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) factors_.erase(it);
    }
  }

  // Trial-division factorization of m >= 1, each prime weighted by `weight`.
  void accumulate(Int m, const Rat& weight) {
    if (m < 1) throw Error("factorization argument must be positive");
    Int d = 2;
    while (d * d <= m) {
      if (m % d == 0) {
        int count = 0;
        while (m % d == 0) {
          m /= d;
          ++count;
        }
        add_exponent(d, Rat(count) * weight);
      }
      d += (d == 2) ? 1 : 2;
    }
    if (m > 1) add_exponent(m, weight);
  }

  int sign_ = 1;
  std::map<Int, Rat> factors_;
};

inline RadicalProduct radical_from_factors(
    int sign, const std::vector<std::pair<Rat, Rat>>& base_exp) {
  RadicalProduct r;
  for (const auto& [base, exp] : base_exp) r *= RadicalProduct::power(base, exp);
  if (sign < 0) r.set_sign(-r.sign());
  return r;
}

}  // namespace liecontract
