#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liecontract/algebra.hpp"
#include "liecontract/contraction.hpp"
#include "liecontract/linear_solver.hpp"
#include "liecontract/multiplicative_solver.hpp"
#include "liecontract/radical.hpp"

namespace liecontract {

/// The multiplicative system of a classification: one equation
/// y_i y_j / y_k = F per surviving triple, in sorted triple order.
inline MultiplicativeSystem build_multiplicative_system(
    const TripleClassification& cls, int n) {
  MultiplicativeSystem sys;
  sys.n = n;
  for (const auto& [t, f] : cls.surviving)
    sys.equations.push_back({triple_row(n, t), f});
  return sys;
}

struct VerificationReport {
  bool gamma_solves = true;
  bool alpha_solves = true;
  bool matches_target = true;
  bool derivation_ok = true;
  std::string detail;

  bool ok() const {
    return gamma_solves && alpha_solves && matches_target && derivation_ok;
  }
};

/// Constructive realization of a diagonal contraction as a generalized
/// IW-contraction with integer exponents: U_eps = A diag(gamma) W_eps P with
/// W_eps = diag(eps^alpha). When gamma is rational the product
/// A diag(gamma) is materialized as A_tilde.
struct IntegerizedContraction {
  RationalMatrix A;  // dim 0 = identity
  std::vector<RadicalProduct> gamma;
  std::optional<RationalMatrix> A_tilde;
  IntVec alpha;
  RationalMatrix P;  // dim 0 = identity
  StructureConstants contracted;
  TripleClassification classification;  // on the A-transformed algebra
  VerificationReport report;

  bool gamma_rational() const {
    for (const auto& g : gamma)
      if (!g.is_rational()) return false;
    return true;
  }
  RatVec gamma_as_rationals() const {
    RatVec out;
    out.reserve(gamma.size());
    for (const auto& g : gamma) out.push_back(*g.to_rational());
    return out;
  }
};

namespace detail {

inline StructureConstants apply_constant_factor(const StructureConstants& c,
                                                const RationalMatrix& m) {
  if (m.dim() == 0 || m.is_identity()) return c;
  return transform(c, m);
}

}  // namespace detail

/// Replaces a rational signature by an integer one realizing the same
/// contraction: the surviving triples give equations, the vanishing ones
/// strict inequalities, and any integer solution of that system classifies
/// the triples identically. Optional sign constraints (one per index) are
/// passed through to the solver; without them the system is always feasible.
inline std::variant<IntVec, LinearInfeasibility> integerize_signature(
    const StructureConstants& c, const Signature& a,
    const std::vector<SignConstraint>& signs = {}) {
  TripleClassification cls = classify_triples(c, a);
  MixedLinearSystem sys = build_system(c, cls, signs);
  auto solved = solve_integer_signature(sys);
  if (std::holds_alternative<LinearInfeasibility>(solved))
    return std::get<LinearInfeasibility>(solved);
  IntVec alpha = std::get<IntVec>(solved);
  Signature int_sig = signature_from_ints(alpha);
  if (!classify_triples(c, int_sig).same_split(cls))
    throw Error("internal: integer signature changed the classification");
  return alpha;
}

/// Independent end-to-end check of an integerization against a target:
/// re-runs the contraction (in canonical radical form when gamma is
/// irrational), compares with the target exactly, re-validates gamma and
/// alpha against their systems, and checks that diag(alpha) is a derivation
/// of the contracted algebra in the basis before the final constant factor.
inline VerificationReport verify_integerization(
    const StructureConstants& c, const IntegerizedContraction& result,
    const StructureConstants& target) {
  VerificationReport report;

  MultiplicativeSystem mul =
      build_multiplicative_system(result.classification, c.dim());
  report.gamma_solves = verify_gamma(mul, result.gamma);
  if (!report.gamma_solves) report.detail = "gamma fails the multiplicative system";

  StructureConstants c_a = detail::apply_constant_factor(c, result.A);
  MixedLinearSystem lin = build_system(c_a, result.classification);
  report.alpha_solves = satisfies_system(lin, result.alpha);
  if (!report.alpha_solves && report.detail.empty())
    report.detail = "alpha fails the mixed linear system";

  Signature alpha_sig = signature_from_ints(result.alpha);
  StructureConstants target_pre_p = target;
  if (result.P.dim() != 0 && !result.P.is_identity())
    target_pre_p = transform(target, result.P.inverse());

  try {
    TripleClassification cls = classify_triples(c_a, alpha_sig);
    StructureConstants realized_pre_p(c.dim());
    bool entry_ok = true;
    for (const auto& [t, f] : cls.surviving) {
      RadicalProduct ratio = result.gamma[t.i - 1] * result.gamma[t.j - 1] /
                             result.gamma[t.k - 1];
      auto rv = ratio.to_rational();
      if (!rv) {
        entry_ok = false;
        report.detail = "irrational limit factor at " + to_string(t);
        break;
      }
      realized_pre_p.set(t.i, t.j, t.k, c_a.at(t.i, t.j, t.k) * *rv);
    }
    if (!entry_ok) {
      report.matches_target = false;
    } else {
      StructureConstants realized =
          detail::apply_constant_factor(realized_pre_p, result.P);
      report.matches_target = realized == target;
      if (!report.matches_target && report.detail.empty())
        report.detail = "realized contraction differs from the target";
    }
  } catch (const DivergenceError& e) {
    report.matches_target = false;
    report.detail = e.what();
  }

  RatVec alpha_rat(result.alpha.begin(), result.alpha.end());
  report.derivation_ok = is_derivation(target_pre_p, alpha_rat);
  if (!report.derivation_ok && report.detail.empty())
    report.detail = "diag(alpha) is not a derivation of the target";
  return report;
}

using IntegerizeOutcome = std::variant<IntegerizedContraction,
                                       LinearInfeasibility,
                                       MultiplicativeInfeasibility>;

/// Constructive realization of a diagonal contraction with integer exponents.
///
/// The limits of f_i f_j / f_k over the nonzero triples of the A-transformed
/// algebra (computed from an all-monomial family, or supplied by hand) feed
/// two systems: the multiplicative one fixing the rescaling gamma and the
/// mixed linear one fixing the integer signature alpha. Both always solve for
/// genuine contraction data; a certificate proves the supplied limits belong
/// to no diagonal contraction. A family with no vanishing triple describes an
/// improper contraction and gets the zero signature unless sign constraints
/// ask for more.
inline IntegerizeOutcome integerize_diagonal(
    const StructureConstants& c, const RationalMatrix& a_factor,
    const std::variant<DiagonalFamily, LimitData>& family_or_limits,
    const RationalMatrix& p_factor,
    const std::vector<SignConstraint>& signs = {}) {
  StructureConstants c_a = detail::apply_constant_factor(c, a_factor);
  TripleClassification cls;
  if (const auto* fam = std::get_if<DiagonalFamily>(&family_or_limits))
    cls = classify_from_family(c_a, *fam);
  else
    cls = classify_from_limits(c_a, std::get<LimitData>(family_or_limits));

  MultiplicativeSystem mul = build_multiplicative_system(cls, c.dim());
  auto gamma_solved = solve_gamma(mul);
  if (std::holds_alternative<MultiplicativeInfeasibility>(gamma_solved))
    return std::get<MultiplicativeInfeasibility>(gamma_solved);

  MixedLinearSystem lin = build_system(c_a, cls, signs);
  auto alpha_solved = solve_integer_signature(lin);
  if (std::holds_alternative<LinearInfeasibility>(alpha_solved))
    return std::get<LinearInfeasibility>(alpha_solved);

  IntegerizedContraction result;
  result.A = a_factor;
  result.P = p_factor;
  result.gamma = std::get<std::vector<RadicalProduct>>(gamma_solved);
  result.alpha = std::get<IntVec>(alpha_solved);
  result.classification = cls;
  if (result.gamma_rational()) {
    RationalMatrix base = a_factor.dim() == 0
                              ? RationalMatrix::identity(c.dim())
                              : a_factor;
    result.A_tilde = base * RationalMatrix::diagonal(result.gamma_as_rationals());
  }
  StructureConstants target =
      detail::apply_constant_factor(apply_classification(c_a, cls), p_factor);
  result.contracted = target;
  result.report = verify_integerization(c, result, target);
  if (!result.report.ok())
    throw Error("internal: integerization failed verification: " +
                result.report.detail);
  return result;
}

}  // namespace liecontract
