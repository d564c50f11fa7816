// Acceptance suite: exercises the end-to-end guarantees on randomized inputs
// against independent oracles, one line per criterion. Exit code 0 only when
// every criterion passes.
#include <chrono>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "liecontract/corpus.hpp"
#include "liecontract/json_io.hpp"
#include "liecontract/pipeline.hpp"
#include "oracles.hpp"

using namespace liecontract;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const char* name, bool pass, const std::string& info) {
  std::printf("criterion %d (%s): %s (%s)\n", number, name,
              pass ? "PASS" : "FAIL", info.c_str());
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string counts(int good, int total, double secs) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d/%d in %.2fs", good, total, secs);
  return buf;
}

// 1. Integer signatures reproduce the contraction of random rational
//    signatures on every corpus algebra, within 5 seconds.
void criterion_1() {
  auto start = Clock::now();
  oracles::Rng rng(101);
  int good = 0, total = 0;
  for (const CorpusEntry& entry : builtin_corpus()) {
    for (int trial = 0; trial < 200; ++trial) {
      ++total;
      Signature a = rng.valid_signature(entry.algebra, 12, 6);
      auto out = integerize_signature(entry.algebra, a);
      if (!std::holds_alternative<IntVec>(out)) continue;
      IntVec alpha = std::get<IntVec>(out);
      if (contract_diagonal(entry.algebra, signature_from_ints(alpha)) ==
          contract_diagonal(entry.algebra, a))
        ++good;
    }
  }
  double secs = seconds_since(start);
  report(1, "integer signatures reproduce rational contractions",
         good == total && secs < 5.0, counts(good, total, secs));
}

// 2. Solver verdicts match exhaustive integer search on random mixed
//    systems; points and certificates re-validate exactly.
void criterion_2() {
  auto start = Clock::now();
  oracles::Rng rng(102);
  int good = 0, total = 1000;
  for (int trial = 0; trial < total; ++trial) {
    MixedLinearSystem sys = rng.mixed_system(5, 6);
    auto sol = solve_integer_signature(sys);
    bool oracle = oracles::grid_search(oracles::to_grid(sys), 6).has_value();
    if (std::holds_alternative<IntVec>(sol)) {
      if (oracle && satisfies_system(sys, std::get<IntVec>(sol))) ++good;
    } else {
      if (!oracle &&
          check_linear_certificate(sys, std::get<LinearInfeasibility>(sol)))
        ++good;
    }
  }
  double secs = seconds_since(start);
  report(2, "solver verdicts match exhaustive search", good == total && secs < 60.0,
         counts(good, total, secs));
}

// 3. Random monomial families integerize, reproducing every nonzero limit
//    exactly and sending every vanishing limit to a positive exponent sum.
void criterion_3() {
  auto start = Clock::now();
  oracles::Rng rng(103);
  int good = 0, total = 200;
  const auto& corpus = builtin_corpus();
  for (int trial = 0; trial < total; ++trial) {
    const CorpusEntry& entry = corpus[trial % corpus.size()];
    const StructureConstants& c = entry.algebra;
    DiagonalFamily fam = rng.valid_monomial_family(c, 2, 6, 4, false);
    auto out = integerize_diagonal(c, RationalMatrix(), fam, RationalMatrix());
    if (!std::holds_alternative<IntegerizedContraction>(out)) continue;
    const auto& ic = std::get<IntegerizedContraction>(out);
    bool ok = ic.report.ok();
    for (const auto& [t, v] : c.brackets()) {
      auto limit = oracles::monomial_limit(fam, t);
      if (!limit) {
        ok = false;
        break;
      }
      Int sum = ic.alpha[t.i - 1] + ic.alpha[t.j - 1] - ic.alpha[t.k - 1];
      if (*limit == 0) {
        ok = ok && sum > 0;
      } else {
        RadicalProduct ratio =
            ic.gamma[t.i - 1] * ic.gamma[t.j - 1] / ic.gamma[t.k - 1];
        ok = ok && sum == 0 && ratio == RadicalProduct::from_rational(*limit);
      }
    }
    if (ok) ++good;
  }
  double secs = seconds_since(start);
  report(3, "monomial families integerize with exact limits", good == total,
         counts(good, total, secs));
}

// 4. Multiplicative verdicts match the prime-exponent/sign-parity oracle;
//    every certificate re-validates in exact arithmetic.
void criterion_4() {
  auto start = Clock::now();
  oracles::Rng rng(104);
  int good = 0, total = 200;
  for (int trial = 0; trial < total; ++trial) {
    MultiplicativeSystem sys = rng.multiplicative_system(4, 5, 3);
    auto out = solve_gamma(sys);
    bool oracle = oracles::multiplicative_feasible(sys);
    if (std::holds_alternative<std::vector<RadicalProduct>>(out)) {
      if (oracle &&
          verify_gamma(sys, std::get<std::vector<RadicalProduct>>(out)))
        ++good;
    } else {
      if (!oracle && check_multiplicative_certificate(
                         sys, std::get<MultiplicativeInfeasibility>(out)))
        ++good;
    }
  }
  double secs = seconds_since(start);
  report(4, "multiplicative verdicts match the prime oracle", good == total,
         counts(good, total, secs));
}

// 5. The Heisenberg algebra contracts to the abelian one via an integer
//    signature, and diag(alpha) is a derivation there and in every improper
//    corpus case.
void criterion_5() {
  auto start = Clock::now();
  int good = 0, total = 0;

  ++total;
  const CorpusEntry* h3 = corpus_find("h3");
  const CorpusEntry* abelian3 = corpus_find("abelian3");
  Signature trivial{{Rat(1), Rat(1), Rat(1)}};
  auto out = integerize_signature(h3->algebra, trivial);
  if (std::holds_alternative<IntVec>(out)) {
    IntVec alpha = std::get<IntVec>(out);
    RatVec alpha_rat(alpha.begin(), alpha.end());
    StructureConstants contracted =
        contract_diagonal(h3->algebra, signature_from_ints(alpha));
    if (contracted == abelian3->algebra && is_derivation(contracted, alpha_rat))
      ++good;
  }

  // every improper corpus contraction admits its signature as a derivation
  for (const CorpusEntry& entry : builtin_corpus()) {
    for (const auto& known : entry.known_contractions) {
      if (known.expected != entry.name) continue;  // improper cases only
      const auto* s = std::get_if<Signature>(&known.spec.family);
      if (s == nullptr) continue;
      ++total;
      auto res = integerize_signature(entry.algebra, *s);
      if (!std::holds_alternative<IntVec>(res)) continue;
      IntVec alpha = std::get<IntVec>(res);
      RatVec alpha_rat(alpha.begin(), alpha.end());
      StructureConstants contracted =
          contract_diagonal(entry.algebra, signature_from_ints(alpha));
      if (contracted == entry.algebra &&
          is_derivation(contracted, alpha_rat) &&
          is_derivation(entry.algebra, s->exponents))
        ++good;
    }
  }
  double secs = seconds_since(start);
  report(5, "heisenberg-to-abelian and improper derivation checks",
         good == total, counts(good, total, secs));
}

// 6. Families with finite limits everywhere admit nonnegative integer
//    exponents under the nonnegative mode (the --nonneg flag).
void criterion_6() {
  auto start = Clock::now();
  oracles::Rng rng(106);
  int good = 0, total = 100;
  const auto& corpus = builtin_corpus();
  for (int trial = 0; trial < total; ++trial) {
    const CorpusEntry& entry = corpus[trial % corpus.size()];
    const StructureConstants& c = entry.algebra;
    DiagonalFamily fam = rng.valid_monomial_family(c, 2, 4, 3, true);
    std::vector<SignConstraint> nonneg(c.dim(), SignConstraint::nonnegative);
    auto out =
        integerize_diagonal(c, RationalMatrix(), fam, RationalMatrix(), nonneg);
    if (!std::holds_alternative<IntegerizedContraction>(out)) continue;
    const auto& ic = std::get<IntegerizedContraction>(out);
    bool ok = ic.report.ok();
    for (const Int& a : ic.alpha) ok = ok && a >= 0;
    if (ok) ++good;
  }
  double secs = seconds_since(start);
  report(6, "nonnegative mode yields nonnegative exponents", good == total,
         counts(good, total, secs));
}

// 7. Contractions are invariant under positive scaling of the signature.
void criterion_7() {
  auto start = Clock::now();
  oracles::Rng rng(107);
  int good = 0, total = 100;
  const auto& corpus = builtin_corpus();
  for (int trial = 0; trial < total; ++trial) {
    const CorpusEntry& entry = corpus[trial % corpus.size()];
    const StructureConstants& c = entry.algebra;
    Signature a = rng.valid_signature(c, 10, 6);
    StructureConstants base = contract_diagonal(c, a);
    bool ok = true;
    for (int lambda : {2, 3, 7}) {
      Signature scaled;
      for (const Rat& e : a.exponents) scaled.exponents.push_back(e * lambda);
      ok = ok && contract_diagonal(c, scaled) == base;
    }
    if (ok) ++good;
  }
  double secs = seconds_since(start);
  report(7, "scaling invariance of the diagonal limit", good == total,
         counts(good, total, secs));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  if (failures == 0)
    std::printf("ACCEPTANCE: all criteria passed\n");
  else
    std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
