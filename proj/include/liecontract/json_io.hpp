#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "liecontract/contraction.hpp"
#include "liecontract/linear_solver.hpp"
#include "liecontract/multiplicative_solver.hpp"
#include "liecontract/pipeline.hpp"

namespace liecontract {

using Json = nlohmann::json;

namespace jsondetail {

inline Rat rational_field(const Json& j, const std::string& where) {
  if (!j.is_string())
    throw ParseError(where + ": rationals must be decimal-free strings");
  return parse_rational(j.get<std::string>());
}

inline int int_field(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

inline Int bigint_field(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": integers must be strings");
  Rat r = parse_rational(j.get<std::string>());
  if (!is_integer(r)) throw ParseError(where + ": expected an integer");
  return numerator(r);
}

}  // namespace jsondetail

// ---------------------------------------------------------------------------
// Algebra documents: {"dim": n, "brackets": [{"i":1,"j":2,"k":3,"c":"1"}]}

inline Json algebra_to_json(const StructureConstants& c) {
  Json brackets = Json::array();
  for (const auto& [t, v] : c.brackets())
    brackets.push_back(
        {{"i", t.i}, {"j", t.j}, {"k", t.k}, {"c", to_string(v)}});
  return Json{{"dim", c.dim()}, {"brackets", brackets}};
}

inline StructureConstants algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim"))
    throw ParseError("algebra document: missing \"dim\"");
  int n = jsondetail::int_field(j.at("dim"), "dim");
  if (n < 1) throw ParseError("algebra document: dim must be positive");
  StructureConstants c(n);
  std::set<Triple> seen;
  if (j.contains("brackets")) {
    if (!j.at("brackets").is_array())
      throw ParseError("algebra document: \"brackets\" must be an array");
    for (const Json& b : j.at("brackets")) {
      int i = jsondetail::int_field(b.at("i"), "bracket i");
      int jj = jsondetail::int_field(b.at("j"), "bracket j");
      int k = jsondetail::int_field(b.at("k"), "bracket k");
      if (i < 1 || i > n || jj < 1 || jj > n || k < 1 || k > n)
        throw ParseError("bracket " + to_string(Triple{i, jj, k}) +
                         ": index out of range 1.." + std::to_string(n));
      if (i >= jj)
        throw ParseError("bracket " + to_string(Triple{i, jj, k}) +
                         ": only i < j entries are accepted");
      if (!seen.insert({i, jj, k}).second)
        throw ParseError("duplicate bracket " + to_string(Triple{i, jj, k}));
      Rat v = jsondetail::rational_field(b.at("c"), "bracket c");
      c.set(i, jj, k, v);
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Matrices: arrays of arrays of rational strings. A dim-0 matrix means
// "identity, omitted from the document".

inline Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline RationalMatrix matrix_from_json(const Json& j, const std::string& name) {
  if (!j.is_array()) throw ParseError(name + ": expected an array of rows");
  int n = static_cast<int>(j.size());
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(name + ": row " + std::to_string(i) +
                       " does not have " + std::to_string(n) + " entries");
    for (int k = 0; k < n; ++k)
      m.at(i, k) = jsondetail::rational_field(row.at(k), name);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Contraction documents. The diagonal part is a "family" (signature or
// monomial) or a "limits" array classifying every nonzero bracket triple.

struct ContractionDocument {
  RationalMatrix A;  // dim 0 = omitted (identity)
  RationalMatrix P;
  std::optional<std::variant<Signature, DiagonalFamily>> family;
  std::optional<LimitData> limits;
};

inline Json contraction_doc_to_json(const ContractionDocument& d) {
  Json j = Json::object();
  if (d.A.dim() != 0) j["A"] = matrix_to_json(d.A);
  if (d.P.dim() != 0) j["P"] = matrix_to_json(d.P);
  if (d.family) {
    if (const auto* s = std::get_if<Signature>(&*d.family)) {
      Json exps = Json::array();
      for (const Rat& e : s->exponents) exps.push_back(to_string(e));
      j["family"] = Json{{"kind", "signature"}, {"exponents", exps}};
    } else {
      const auto& fam = std::get<DiagonalFamily>(*d.family);
      Json entries = Json::array();
      for (const auto& e : fam.entries) {
        if (const auto* m = std::get_if<Monomial>(&e))
          entries.push_back(
              {{"coef", to_string(m->coef)}, {"exp", to_string(m->exp)}});
        else
          entries.push_back({{"kind", "abstract"}});
      }
      j["family"] = Json{{"kind", "monomial"}, {"entries", entries}};
    }
  }
  if (d.limits) {
    Json limits = Json::array();
    for (const auto& [t, f] : *d.limits)
      limits.push_back(
          {{"i", t.i}, {"j", t.j}, {"k", t.k}, {"F", to_string(f)}});
    j["limits"] = limits;
  }
  return j;
}

inline ContractionDocument contraction_doc_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("contraction document: expected object");
  ContractionDocument d;
  if (j.contains("A")) d.A = matrix_from_json(j.at("A"), "A");
  if (j.contains("P")) d.P = matrix_from_json(j.at("P"), "P");
  if (j.contains("family")) {
    const Json& f = j.at("family");
    std::string kind = f.at("kind").get<std::string>();
    if (kind == "signature") {
      Signature s;
      for (const Json& e : f.at("exponents"))
        s.exponents.push_back(jsondetail::rational_field(e, "exponents"));
      d.family = s;
    } else if (kind == "monomial") {
      DiagonalFamily fam;
      for (const Json& e : f.at("entries")) {
        if (e.contains("kind") && e.at("kind") == "abstract") {
          fam.entries.push_back(AbstractEntry{});
          continue;
        }
        Monomial m{jsondetail::rational_field(e.at("coef"), "coef"),
                   jsondetail::rational_field(e.at("exp"), "exp")};
        if (m.coef == 0) throw ParseError("monomial coefficient must be nonzero");
        fam.entries.push_back(m);
      }
      d.family = fam;
    } else {
      throw ParseError("unknown family kind \"" + kind + "\"");
    }
  }
  if (j.contains("limits")) {
    LimitData limits;
    for (const Json& e : j.at("limits")) {
      Triple t{jsondetail::int_field(e.at("i"), "limit i"),
               jsondetail::int_field(e.at("j"), "limit j"),
               jsondetail::int_field(e.at("k"), "limit k")};
      if (t.i >= t.j)
        throw ParseError("limit " + to_string(t) + ": need i < j");
      if (!limits.emplace(t, jsondetail::rational_field(e.at("F"), "limit F"))
               .second)
        throw ParseError("duplicate limit " + to_string(t));
    }
    d.limits = limits;
  }
  if (!d.family && !d.limits)
    throw ParseError("contraction document: need \"family\" or \"limits\"");
  return d;
}

/// A document usable with contract_full (requires a signature or an
/// all-monomial family).
inline ContractionSpec spec_from_doc(const ContractionDocument& d) {
  if (!d.family)
    throw ParseError("contraction document: \"family\" required here");
  ContractionSpec spec;
  spec.A = d.A;
  spec.P = d.P;
  spec.family = *d.family;
  return spec;
}

// ---------------------------------------------------------------------------
// Radical products: [{"sign":1,"factors":[{"base":"2","exp":"-1/2"}]}, ...]

inline Json gamma_to_json(const std::vector<RadicalProduct>& gamma) {
  Json arr = Json::array();
  for (const RadicalProduct& g : gamma) {
    Json factors = Json::array();
    for (const auto& [p, e] : g.factors())
      factors.push_back({{"base", p.str()}, {"exp", to_string(e)}});
    arr.push_back({{"sign", g.sign()}, {"factors", factors}});
  }
  return arr;
}

inline std::vector<RadicalProduct> gamma_from_json(const Json& j) {
  std::vector<RadicalProduct> out;
  for (const Json& e : j) {
    std::vector<std::pair<Rat, Rat>> base_exp;
    for (const Json& f : e.at("factors"))
      base_exp.emplace_back(jsondetail::rational_field(f.at("base"), "base"),
                            jsondetail::rational_field(f.at("exp"), "exp"));
    int sign = jsondetail::int_field(e.at("sign"), "sign");
    if (sign != 1 && sign != -1) throw ParseError("radical sign must be +-1");
    out.push_back(radical_from_factors(sign, base_exp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Systems and certificates.

inline Json mixed_system_to_json(const MixedLinearSystem& sys) {
  auto rows_to_json = [](const std::vector<IntVec>& rows) {
    Json arr = Json::array();
    for (const IntVec& r : rows) {
      Json row = Json::array();
      for (const Int& x : r) row.push_back(x.convert_to<long long>());
      arr.push_back(row);
    }
    return arr;
  };
  Json j{{"n", sys.n},
         {"eq", rows_to_json(sys.eq_rows)},
         {"ineq", rows_to_json(sys.ineq_rows)}};
  if (!sys.sign_constraints.empty()) {
    Json signs = Json::array();
    for (SignConstraint sc : sys.sign_constraints) {
      switch (sc) {
        case SignConstraint::free_: signs.push_back("free"); break;
        case SignConstraint::positive: signs.push_back(">0"); break;
        case SignConstraint::nonnegative: signs.push_back(">=0"); break;
        case SignConstraint::negative: signs.push_back("<0"); break;
        case SignConstraint::nonpositive: signs.push_back("<=0"); break;
      }
    }
    j["signs"] = signs;
  }
  return j;
}

inline MixedLinearSystem mixed_system_from_json(const Json& j) {
  MixedLinearSystem sys;
  sys.n = jsondetail::int_field(j.at("n"), "n");
  auto rows_from_json = [&](const Json& arr) {
    std::vector<IntVec> rows;
    for (const Json& r : arr) {
      IntVec row;
      for (const Json& x : r) {
        if (!x.is_number_integer()) throw ParseError("row entries are integers");
        row.push_back(Int(x.get<long long>()));
      }
      if (static_cast<int>(row.size()) != sys.n)
        throw ParseError("row length differs from n");
      rows.push_back(std::move(row));
    }
    return rows;
  };
  if (j.contains("eq")) sys.eq_rows = rows_from_json(j.at("eq"));
  if (j.contains("ineq")) sys.ineq_rows = rows_from_json(j.at("ineq"));
  if (j.contains("signs")) {
    for (const Json& s : j.at("signs")) {
      std::string v = s.get<std::string>();
      if (v == "free")
        sys.sign_constraints.push_back(SignConstraint::free_);
      else if (v == ">0")
        sys.sign_constraints.push_back(SignConstraint::positive);
      else if (v == ">=0")
        sys.sign_constraints.push_back(SignConstraint::nonnegative);
      else if (v == "<0")
        sys.sign_constraints.push_back(SignConstraint::negative);
      else if (v == "<=0")
        sys.sign_constraints.push_back(SignConstraint::nonpositive);
      else
        throw ParseError("unknown sign constraint \"" + v + "\"");
    }
    if (static_cast<int>(sys.sign_constraints.size()) != sys.n)
      throw ParseError("signs length differs from n");
  }
  return sys;
}

inline Json multiplicative_system_to_json(const MultiplicativeSystem& sys) {
  Json eqs = Json::array();
  for (const MulEquation& e : sys.equations) {
    Json exps = Json::array();
    for (const Int& x : e.exponents) exps.push_back(x.convert_to<long long>());
    eqs.push_back({{"exponents", exps}, {"rhs", to_string(e.rhs)}});
  }
  return Json{{"n", sys.n}, {"equations", eqs}};
}

inline MultiplicativeSystem multiplicative_system_from_json(const Json& j) {
  MultiplicativeSystem sys;
  sys.n = jsondetail::int_field(j.at("n"), "n");
  for (const Json& e : j.at("equations")) {
    MulEquation eq;
    for (const Json& x : e.at("exponents")) {
      if (!x.is_number_integer()) throw ParseError("exponents are integers");
      eq.exponents.push_back(Int(x.get<long long>()));
    }
    if (static_cast<int>(eq.exponents.size()) != sys.n)
      throw ParseError("exponent vector length differs from n");
    eq.rhs = jsondetail::rational_field(e.at("rhs"), "rhs");
    if (eq.rhs == 0) throw ParseError("rhs must be nonzero");
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

/// Standalone re-checkable witness: the system plus the vanishing
/// combination, nonzero coefficients listed against their row indices.
inline Json linear_certificate_to_json(const MixedLinearSystem& sys,
                                       const LinearInfeasibility& cert) {
  auto sparse = [](const IntVec& v, const char* key) {
    Json arr = Json::array();
    for (std::size_t r = 0; r < v.size(); ++r)
      if (v[r] != 0) arr.push_back({{key, static_cast<int>(r)},
                                    {"coeff", v[r].str()}});
    return arr;
  };
  Json c{{"eq", sparse(cert.eq_coeffs, "row")},
         {"ineq", sparse(cert.ineq_coeffs, "row")}};
  Json signs = Json::array();
  auto srows = sys.sign_rows();
  for (std::size_t r = 0; r < cert.sign_coeffs.size(); ++r)
    if (cert.sign_coeffs[r] != 0)
      signs.push_back(
          {{"index", srows[r].index}, {"coeff", cert.sign_coeffs[r].str()}});
  c["sign"] = signs;
  return Json{{"kind", "linear_infeasibility"},
              {"system", mixed_system_to_json(sys)},
              {"certificate", c}};
}

inline std::pair<MixedLinearSystem, LinearInfeasibility>
linear_certificate_from_json(const Json& j) {
  MixedLinearSystem sys = mixed_system_from_json(j.at("system"));
  const Json& c = j.at("certificate");
  LinearInfeasibility cert;
  cert.eq_coeffs.assign(sys.eq_rows.size(), Int(0));
  cert.ineq_coeffs.assign(sys.ineq_rows.size(), Int(0));
  auto srows = sys.sign_rows();
  cert.sign_coeffs.assign(srows.size(), Int(0));
  for (const Json& e : c.at("eq"))
    cert.eq_coeffs.at(e.at("row").get<std::size_t>()) =
        jsondetail::bigint_field(e.at("coeff"), "eq coeff");
  for (const Json& e : c.at("ineq"))
    cert.ineq_coeffs.at(e.at("row").get<std::size_t>()) =
        jsondetail::bigint_field(e.at("coeff"), "ineq coeff");
  for (const Json& e : c.at("sign")) {
    int index = jsondetail::int_field(e.at("index"), "sign index");
    bool found = false;
    for (std::size_t r = 0; r < srows.size(); ++r)
      if (srows[r].index == index) {
        cert.sign_coeffs[r] =
            jsondetail::bigint_field(e.at("coeff"), "sign coeff");
        found = true;
      }
    if (!found)
      throw ParseError("sign coefficient for unconstrained index " +
                       std::to_string(index));
  }
  return {std::move(sys), std::move(cert)};
}

inline Json multiplicative_certificate_to_json(
    const MultiplicativeSystem& sys, const MultiplicativeInfeasibility& cert) {
  Json m = Json::array();
  for (const Int& x : cert.exponents) m.push_back(x.str());
  const char* kind =
      cert.kind == MultiplicativeInfeasibility::Kind::unit_mismatch
          ? "unit_mismatch"
          : "negative_square";
  return Json{{"kind", "multiplicative_infeasibility"},
              {"system", multiplicative_system_to_json(sys)},
              {"certificate", Json{{"kind", kind}, {"m", m}}}};
}

inline std::pair<MultiplicativeSystem, MultiplicativeInfeasibility>
multiplicative_certificate_from_json(const Json& j) {
  MultiplicativeSystem sys = multiplicative_system_from_json(j.at("system"));
  const Json& c = j.at("certificate");
  MultiplicativeInfeasibility cert;
  std::string kind = c.at("kind").get<std::string>();
  if (kind == "unit_mismatch")
    cert.kind = MultiplicativeInfeasibility::Kind::unit_mismatch;
  else if (kind == "negative_square")
    cert.kind = MultiplicativeInfeasibility::Kind::negative_square;
  else
    throw ParseError("unknown multiplicative certificate kind \"" + kind + "\"");
  for (const Json& x : c.at("m"))
    cert.exponents.push_back(jsondetail::bigint_field(x, "m"));
  if (cert.exponents.size() != sys.equations.size())
    throw ParseError("certificate length differs from the equation count");
  return {std::move(sys), std::move(cert)};
}

// ---------------------------------------------------------------------------
// Result bundles.

inline Json report_to_json(const VerificationReport& r) {
  return Json{{"gamma_solves", r.gamma_solves},
              {"alpha_solves", r.alpha_solves},
              {"matches_target", r.matches_target},
              {"derivation_ok", r.derivation_ok},
              {"detail", r.detail}};
}

inline VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.gamma_solves = j.at("gamma_solves").get<bool>();
  r.alpha_solves = j.at("alpha_solves").get<bool>();
  r.matches_target = j.at("matches_target").get<bool>();
  r.derivation_ok = j.at("derivation_ok").get<bool>();
  r.detail = j.at("detail").get<std::string>();
  return r;
}

inline Json bundle_to_json(const IntegerizedContraction& ic) {
  Json j = Json::object();
  if (ic.A.dim() != 0) j["A"] = matrix_to_json(ic.A);
  if (ic.P.dim() != 0) j["P"] = matrix_to_json(ic.P);
  if (ic.A_tilde) j["A_tilde"] = matrix_to_json(*ic.A_tilde);
  Json alpha = Json::array();
  for (const Int& a : ic.alpha) alpha.push_back(a.str());
  j["alpha"] = alpha;
  j["gamma"] = gamma_to_json(ic.gamma);
  j["contracted"] = algebra_to_json(ic.contracted);
  j["report"] = report_to_json(ic.report);
  return j;
}

/// Rebuilds the serialized fields of a bundle (the classification is not
/// part of the document; it lives on the original algebra).
inline IntegerizedContraction bundle_from_json(const Json& j) {
  IntegerizedContraction ic;
  if (j.contains("A")) ic.A = matrix_from_json(j.at("A"), "A");
  if (j.contains("P")) ic.P = matrix_from_json(j.at("P"), "P");
  if (j.contains("A_tilde"))
    ic.A_tilde = matrix_from_json(j.at("A_tilde"), "A_tilde");
  for (const Json& a : j.at("alpha"))
    ic.alpha.push_back(jsondetail::bigint_field(a, "alpha"));
  ic.gamma = gamma_from_json(j.at("gamma"));
  ic.contracted = algebra_from_json(j.at("contracted"));
  ic.report = report_from_json(j.at("report"));
  return ic;
}

}  // namespace liecontract
