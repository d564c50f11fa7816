#include <catch2/catch_amalgamated.hpp>

#include "liecontract/linear_solver.hpp"
#include "oracles.hpp"

using namespace liecontract;

namespace {

IntVec row(std::initializer_list<int> v) { return IntVec(v.begin(), v.end()); }

MixedLinearSystem sys_of(int n, std::vector<IntVec> eq, std::vector<IntVec> ineq,
                         std::vector<SignConstraint> signs = {}) {
  return MixedLinearSystem{n, std::move(eq), std::move(ineq), std::move(signs)};
}

}  // namespace

TEST_CASE("build_system transcribes the classification") {
  StructureConstants h3(3);
  h3.set(1, 2, 3, Rat(1));

  TripleClassification dying;
  dying.vanishing.insert({1, 2, 3});
  MixedLinearSystem a = build_system(h3, dying);
  CHECK(a.eq_rows.empty());
  REQUIRE(a.ineq_rows.size() == 1);
  CHECK(a.ineq_rows[0] == row({1, 1, -1}));

  TripleClassification kept;
  kept.surviving.emplace(Triple{1, 2, 3}, Rat(1));
  MixedLinearSystem b = build_system(h3, kept);
  REQUIRE(b.eq_rows.size() == 1);
  CHECK(b.eq_rows[0] == row({1, 1, -1}));
  CHECK(b.ineq_rows.empty());

  StructureConstants c4(4);
  c4.set(1, 2, 3, Rat(1));
  c4.set(1, 3, 2, Rat(1));
  c4.set(2, 3, 1, Rat(1));
  c4.set(1, 3, 4, Rat(1));
  c4.set(1, 2, 4, Rat(1));
  TripleClassification mixed;
  mixed.surviving.emplace(Triple{1, 2, 3}, Rat(1));
  mixed.surviving.emplace(Triple{1, 3, 2}, Rat(1));
  mixed.surviving.emplace(Triple{2, 3, 1}, Rat(1));
  mixed.surviving.emplace(Triple{1, 3, 4}, Rat(1));
  mixed.vanishing.insert({1, 2, 4});
  MixedLinearSystem m = build_system(c4, mixed);
  CHECK(m.eq_rows.size() == 4);
  CHECK(m.ineq_rows.size() == 1);
  // sorted triple order
  CHECK(m.eq_rows[0] == row({1, 1, -1, 0}));
  CHECK(m.eq_rows[1] == row({1, -1, 1, 0}));
  CHECK(m.eq_rows[2] == row({1, 0, 1, -1}));
  CHECK(m.eq_rows[3] == row({-1, 1, 1, 0}));
}

TEST_CASE("collapsing indices in a triple row are summed") {
  CHECK(triple_row(3, {1, 2, 1}) == row({0, 1, 0}));
  CHECK(triple_row(3, {1, 2, 2}) == row({1, 0, 0}));
}

TEST_CASE("eliminate_equations expresses a maximal subset") {
  MixedLinearSystem one = sys_of(3, {row({1, 1, -1})}, {});
  EliminationResult r1 = eliminate_equations(one);
  REQUIRE(r1.expressions.size() == 1);
  CHECK(r1.expressions[0].index == 0);
  CHECK(r1.expressions[0].lead == 1);
  CHECK(r1.expressions[0].rhs == row({0, -1, 1}));  // x1 = x3 - x2

  MixedLinearSystem forced =
      sys_of(3, {row({1, 1, -1}), row({1, -1, 1}), row({-1, 1, 1})}, {});
  EliminationResult r2 = eliminate_equations(forced);
  REQUIRE(r2.expressions.size() == 3);
  for (const Expression& e : r2.expressions) {
    CHECK(e.lead == 1);
    CHECK(e.rhs == row({0, 0, 0}));  // x1 = x2 = x3 = 0
  }

  MixedLinearSystem none = sys_of(2, {}, {row({1, -1})});
  EliminationResult r3 = eliminate_equations(none);
  CHECK(r3.expressions.empty());
  REQUIRE(r3.reduced_ineqs.size() == 1);
  CHECK(r3.reduced_ineqs[0].coeffs == row({1, -1}));
}

TEST_CASE("expression combos reproduce the defining rows exactly") {
  oracles::Rng rng(300);
  for (int trial = 0; trial < 60; ++trial) {
    MixedLinearSystem sys = rng.mixed_system(5, 6);
    EliminationResult res = eliminate_equations(sys);
    for (const Expression& e : res.expressions) {
      // lead * x_index - rhs = eq_combo . eq_rows, entrywise
      for (int j = 0; j < sys.n; ++j) {
        Rat lhs = j == e.index ? Rat(e.lead) : Rat(-e.rhs[j]);
        Rat rhs(0);
        for (std::size_t r = 0; r < sys.eq_rows.size(); ++r)
          rhs += e.eq_combo[r] * Rat(sys.eq_rows[r][j]);
        CHECK(lhs == rhs);
      }
    }
    for (std::size_t t = 0; t < res.reduced_ineqs.size(); ++t) {
      const ReducedIneq& ri = res.reduced_ineqs[t];
      CHECK(ri.scale > 0);
      for (int j = 0; j < sys.n; ++j) {
        Rat lhs(ri.coeffs[j]);
        Rat rhs = ri.scale * Rat(sys.ineq_rows[t][j]);
        for (std::size_t r = 0; r < sys.eq_rows.size(); ++r)
          rhs += ri.eq_combo[r] * Rat(sys.eq_rows[r][j]);
        CHECK(lhs == rhs);
      }
      for (const Expression& e : res.expressions)
        CHECK(ri.coeffs[e.index] == 0);
    }
  }
}

TEST_CASE("fourier-motzkin finds an interior point") {
  auto fm = solve_strict_inequalities({{row({1, 1, -1}), true}}, 3);
  REQUIRE(std::holds_alternative<RatVec>(fm));
  RatVec p = std::get<RatVec>(fm);
  CHECK(p[0] + p[1] - p[2] > 0);
  CHECK(p == RatVec{Rat(1), Rat(0), Rat(0)});  // deterministic reference value

  auto empty = solve_strict_inequalities({}, 2);
  CHECK(std::get<RatVec>(empty) == RatVec{Rat(0), Rat(0)});
}

TEST_CASE("fourier-motzkin certifies opposing rows") {
  auto fm = solve_strict_inequalities(
      {{row({1, -1}), true}, {row({-1, 1}), true}}, 2);
  REQUIRE(std::holds_alternative<IntVec>(fm));
  CHECK(std::get<IntVec>(fm) == IntVec{Int(1), Int(1)});
}

TEST_CASE("solve_integer_signature on the h3 trivial contraction") {
  MixedLinearSystem sys = sys_of(3, {}, {row({1, 1, -1})});
  auto sol = solve_integer_signature(sys);
  REQUIRE(std::holds_alternative<IntVec>(sol));
  IntVec alpha = std::get<IntVec>(sol);
  CHECK(satisfies_system(sys, alpha));
  CHECK(alpha == IntVec{Int(1), Int(0), Int(0)});  // deterministic

  // oracle confirms feasibility
  CHECK(oracles::grid_search(oracles::to_grid(sys), 6).has_value());
}

TEST_CASE("solve_integer_signature returns a checkable certificate") {
  MixedLinearSystem sys = sys_of(
      4,
      {row({1, 1, -1, 0}), row({1, -1, 1, 0}), row({-1, 1, 1, 0}),
       row({1, 0, 1, -1})},
      {row({1, 1, 0, -1})});
  auto sol = solve_integer_signature(sys);
  REQUIRE(std::holds_alternative<LinearInfeasibility>(sol));
  CHECK(check_linear_certificate(sys, std::get<LinearInfeasibility>(sol)));
  CHECK_FALSE(oracles::grid_search(oracles::to_grid(sys), 6).has_value());
}

TEST_CASE("empty systems yield the zero signature") {
  MixedLinearSystem sys = sys_of(3, {}, {});
  auto sol = solve_integer_signature(sys);
  CHECK(std::get<IntVec>(sol) == IntVec{Int(0), Int(0), Int(0)});

  MixedLinearSystem eq_only = sys_of(3, {row({1, 1, -1})}, {});
  auto sol2 = solve_integer_signature(eq_only);
  CHECK(std::get<IntVec>(sol2) == IntVec{Int(0), Int(0), Int(0)});
}

TEST_CASE("sign constraints are honored") {
  MixedLinearSystem nonneg =
      sys_of(3, {row({1, 1, -1})}, {},
             {SignConstraint::nonnegative, SignConstraint::nonnegative,
              SignConstraint::nonnegative});
  auto sol = solve_integer_signature(nonneg);
  REQUIRE(std::holds_alternative<IntVec>(sol));
  for (const Int& v : std::get<IntVec>(sol)) CHECK(v >= 0);
  CHECK(satisfies_system(nonneg, std::get<IntVec>(sol)));

  MixedLinearSystem negative_third =
      sys_of(3, {row({1, 1, -1})}, {},
             {SignConstraint::free_, SignConstraint::free_,
              SignConstraint::negative});
  auto sol2 = solve_integer_signature(negative_third);
  REQUIRE(std::holds_alternative<IntVec>(sol2));
  CHECK(std::get<IntVec>(sol2)[2] < 0);

  MixedLinearSystem contradictory =
      sys_of(2, {}, {},
             {SignConstraint::positive, SignConstraint::free_});
  contradictory.sign_constraints[0] = SignConstraint::positive;
  MixedLinearSystem clash = contradictory;
  clash.ineq_rows.push_back(row({-1, 0}));  // x1 < 0 against x1 > 0
  auto sol3 = solve_integer_signature(clash);
  REQUIRE(std::holds_alternative<LinearInfeasibility>(sol3));
  CHECK(check_linear_certificate(clash, std::get<LinearInfeasibility>(sol3)));
}

TEST_CASE("verdicts agree with exhaustive search at desk scale") {
  oracles::Rng rng(301);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    MixedLinearSystem sys = rng.mixed_system(5, 6);
    auto sol = solve_integer_signature(sys);
    bool oracle = oracles::grid_search(oracles::to_grid(sys), 6).has_value();
    if (std::holds_alternative<IntVec>(sol)) {
      ++feasible;
      CHECK(oracle);
      CHECK(satisfies_system(sys, std::get<IntVec>(sol)));
    } else {
      ++infeasible;
      CHECK_FALSE(oracle);
      CHECK(check_linear_certificate(sys, std::get<LinearInfeasibility>(sol)));
    }
  }
  // the generator must exercise both verdicts
  CHECK(feasible > 10);
  CHECK(infeasible > 10);
}

TEST_CASE("solutions are homogeneous: positive multiples still solve") {
  oracles::Rng rng(302);
  for (int trial = 0; trial < 40; ++trial) {
    MixedLinearSystem sys = rng.mixed_system(4, 5);
    auto sol = solve_integer_signature(sys);
    if (!std::holds_alternative<IntVec>(sol)) continue;
    IntVec alpha = std::get<IntVec>(sol);
    for (int lambda : {2, 5}) {
      IntVec scaled;
      for (const Int& v : alpha) scaled.push_back(v * lambda);
      CHECK(satisfies_system(sys, scaled));
    }
  }
}
