#pragma once

#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "liecontract/algebra.hpp"
#include "liecontract/errors.hpp"
#include "liecontract/matrix.hpp"
#include "liecontract/rational.hpp"

namespace liecontract {

/// Exponent tuple of the diagonal part diag(eps^a_1, ..., eps^a_n).
/// Defined up to a positive rational multiplier; normalized() is a view.
struct Signature {
  RatVec exponents;

  int dim() const { return static_cast<int>(exponents.size()); }
  bool operator==(const Signature&) const = default;

  /// Primitive integer representative of the ray through this signature
  /// (zero signature maps to itself).
  Signature normalized() const {
    RatVec v = exponents;
    Int l = common_denominator(v);
    IntVec w;
    w.reserve(v.size());
    for (const Rat& x : v) w.push_back(scale_to_int(x, l));
    Int g = vector_gcd(w);
    Signature out;
    for (const Int& x : w) out.exponents.push_back(g == 0 ? Rat(0) : Rat(x, g));
    return out;
  }
};

inline Signature signature_from_ints(const IntVec& v) {
  Signature s;
  s.exponents.assign(v.begin(), v.end());
  return s;
}

/// One diagonal entry f_i(eps) = coef * eps^exp.
struct Monomial {
  Rat coef;  // nonzero
  Rat exp;
};

/// Placeholder for an f_i given only through externally supplied limits.
struct AbstractEntry {
  bool operator==(const AbstractEntry&) const = default;
};

/// Diagonal part diag(f_1, ..., f_n) of a diagonal contraction matrix.
struct DiagonalFamily {
  std::vector<std::variant<Monomial, AbstractEntry>> entries;

  int dim() const { return static_cast<int>(entries.size()); }
  bool all_monomial() const {
    for (const auto& e : entries)
      if (!std::holds_alternative<Monomial>(e)) return false;
    return true;
  }
  const Monomial& monomial(int i) const {  // 1-based
    return std::get<Monomial>(entries[i - 1]);
  }
};

inline DiagonalFamily monomial_family(const RatVec& coefs, const RatVec& exps) {
  DiagonalFamily f;
  for (std::size_t i = 0; i < coefs.size(); ++i)
    f.entries.push_back(Monomial{coefs[i], exps[i]});
  return f;
}

/// Limit of f_i f_j / f_k for each nonzero bracket triple with i < j.
/// A value of 0 means the bracket dies; any other value is the finite
/// nonzero limit. Totality over the nonzero triples is required.
using LimitData = std::map<Triple, Rat>;

/// Partition of the nonzero bracket triples: `surviving` carries the nonzero
/// finite limit factor, `vanishing` collects triples whose limit is zero.
struct TripleClassification {
  std::map<Triple, Rat> surviving;  // triple -> limit factor (nonzero)
  std::set<Triple> vanishing;

  bool operator==(const TripleClassification&) const = default;
  bool improper() const { return vanishing.empty(); }

  /// Same partition, ignoring the limit factors.
  bool same_split(const TripleClassification& o) const {
    if (vanishing != o.vanishing) return false;
    if (surviving.size() != o.surviving.size()) return false;
    for (const auto& [t, f] : surviving)
      if (!o.surviving.contains(t)) return false;
    return true;
  }
};

/// Contraction matrix description U_eps = A * diag(...) * P with constant
/// invertible A and P. The diagonal part is either a pure signature
/// (f_i = eps^a_i) or a general diagonal family.
struct ContractionSpec {
  RationalMatrix A;  // dim 0 means identity
  std::variant<Signature, DiagonalFamily> family;
  RationalMatrix P;  // dim 0 means identity

  int family_dim() const {
    if (const auto* s = std::get_if<Signature>(&family)) return s->dim();
    return std::get<DiagonalFamily>(family).dim();
  }
};

/// Splits nonzero triples by the sign of a_i + a_j - a_k. Zero sum means the
/// bracket survives with factor 1; positive sum means it dies; a negative sum
/// has no limit and is an error.
inline TripleClassification classify_triples(const StructureConstants& c,
                                             const Signature& a) {
  if (a.dim() != c.dim()) throw Error("signature length mismatch");
  TripleClassification cls;
  for (const auto& [t, v] : c.brackets()) {
    Rat s = a.exponents[t.i - 1] + a.exponents[t.j - 1] - a.exponents[t.k - 1];
    if (s == 0)
      cls.surviving.emplace(t, Rat(1));
    else if (s > 0)
      cls.vanishing.insert(t);
    else
      throw DivergenceError(
          "signature violates validity constraint at " + to_string(t), t.i,
          t.j, t.k);
  }
  return cls;
}

/// Classification induced by an all-monomial diagonal family: the exponent
/// sum decides survival exactly as for a signature, and a surviving triple
/// keeps the coefficient ratio g_i g_j / g_k as its limit factor.
inline TripleClassification classify_from_family(const StructureConstants& c,
                                                 const DiagonalFamily& f) {
  if (f.dim() != c.dim()) throw Error("family length mismatch");
  if (!f.all_monomial())
    throw Error("family has abstract entries; supply limit data instead");
  TripleClassification cls;
  for (const auto& [t, v] : c.brackets()) {
    const Monomial &fi = f.monomial(t.i), &fj = f.monomial(t.j),
                   &fk = f.monomial(t.k);
    Rat s = fi.exp + fj.exp - fk.exp;
    if (s == 0)
      cls.surviving.emplace(t, fi.coef * fj.coef / fk.coef);
    else if (s > 0)
      cls.vanishing.insert(t);
    else
      throw DivergenceError("diagonal family has no limit at " + to_string(t),
                            t.i, t.j, t.k);
  }
  return cls;
}

/// Classification from hand-supplied limits. The limits must cover exactly
/// the nonzero triples of c with i < j.
inline TripleClassification classify_from_limits(const StructureConstants& c,
                                                 const LimitData& limits) {
  TripleClassification cls;
  for (const auto& [t, v] : c.brackets()) {
    auto it = limits.find(t);
    if (it == limits.end())
      throw Error("limit data missing nonzero triple " + to_string(t));
    if (it->second == 0)
      cls.vanishing.insert(t);
    else
      cls.surviving.emplace(t, it->second);
  }
  if (limits.size() != cls.surviving.size() + cls.vanishing.size())
    throw Error("limit data names a triple with zero bracket");
  return cls;
}

/// Applies a classification to the constants: surviving triples are scaled
/// by their limit factor, vanishing ones are dropped.
inline StructureConstants apply_classification(
    const StructureConstants& c, const TripleClassification& cls) {
  StructureConstants out(c.dim());
  for (const auto& [t, f] : cls.surviving)
    out.set(t.i, t.j, t.k, c.at(t.i, t.j, t.k) * f);
  return out;
}

/// Diagonal limit for a pure signature: brackets with zero exponent sum are
/// kept unchanged, brackets with positive sum vanish.
inline StructureConstants contract_diagonal(const StructureConstants& c,
                                            const Signature& a) {
  return apply_classification(c, classify_triples(c, a));
}

/// Diagonal limit for an all-monomial family.
inline StructureConstants contract_family(const StructureConstants& c,
                                          const DiagonalFamily& f) {
  return apply_classification(c, classify_from_family(c, f));
}

/// Full contraction A * diag * P: A-transform, then the diagonal limit, then
/// the P-transform (the order is forced by the right action).
inline StructureConstants contract_full(const StructureConstants& c,
                                        const ContractionSpec& spec) {
  StructureConstants cur = c;
  if (spec.A.dim() != 0 && !spec.A.is_identity()) cur = transform(cur, spec.A);
  if (const auto* s = std::get_if<Signature>(&spec.family))
    cur = contract_diagonal(cur, *s);
  else
    cur = contract_family(cur, std::get<DiagonalFamily>(spec.family));
  if (spec.P.dim() != 0 && !spec.P.is_identity()) cur = transform(cur, spec.P);
  return cur;
}

}  // namespace liecontract
