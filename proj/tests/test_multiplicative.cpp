#include <catch2/catch_amalgamated.hpp>

#include "liecontract/multiplicative_solver.hpp"
#include "oracles.hpp"

using namespace liecontract;

namespace {

MulEquation eq(std::initializer_list<int> exps, const Rat& rhs) {
  IntVec e;
  for (int x : exps) e.push_back(Int(x));
  return {std::move(e), rhs};
}

MultiplicativeSystem sys_of(int n, std::vector<MulEquation> eqs) {
  return MultiplicativeSystem{n, std::move(eqs)};
}

}  // namespace

TEST_CASE("a single equation back-solves its highest unknown") {
  MultiplicativeSystem sys = sys_of(3, {eq({1, 1, -1}, Rat(4))});
  auto out = solve_gamma(sys);
  REQUIRE(std::holds_alternative<std::vector<RadicalProduct>>(out));
  auto gamma = std::get<std::vector<RadicalProduct>>(out);
  CHECK(verify_gamma(sys, gamma));
  REQUIRE(gamma[2].to_rational().has_value());
  CHECK(*gamma[0].to_rational() == Rat(1));
  CHECK(*gamma[1].to_rational() == Rat(1));
  CHECK(*gamma[2].to_rational() == Rat(1, 4));
}

TEST_CASE("the empty system has the all-ones solution") {
  MultiplicativeSystem sys = sys_of(4, {});
  auto gamma = std::get<std::vector<RadicalProduct>>(solve_gamma(sys));
  for (const auto& g : gamma) CHECK(g == RadicalProduct::one());
}

TEST_CASE("y1^2 = -1 is certified as a negative square") {
  MultiplicativeSystem sys =
      sys_of(3, {eq({1, 1, -1}, Rat(1)), eq({1, -1, 1}, Rat(-1))});
  auto out = solve_gamma(sys);
  REQUIRE(std::holds_alternative<MultiplicativeInfeasibility>(out));
  auto cert = std::get<MultiplicativeInfeasibility>(out);
  CHECK(cert.kind == MultiplicativeInfeasibility::Kind::negative_square);
  CHECK(cert.exponents == IntVec{Int(1), Int(1)});
  CHECK(check_multiplicative_certificate(sys, cert));
  CHECK_FALSE(oracles::multiplicative_feasible(sys));
}

TEST_CASE("conflicting values for one unknown give a unit mismatch") {
  MultiplicativeSystem sys = sys_of(2, {eq({1, 0}, Rat(2)), eq({1, 0}, Rat(3))});
  auto out = solve_gamma(sys);
  REQUIRE(std::holds_alternative<MultiplicativeInfeasibility>(out));
  auto cert = std::get<MultiplicativeInfeasibility>(out);
  CHECK(cert.kind == MultiplicativeInfeasibility::Kind::unit_mismatch);
  CHECK(check_multiplicative_certificate(sys, cert));
  CHECK_FALSE(oracles::multiplicative_feasible(sys));
}

TEST_CASE("negative right-hand sides can force negative unknowns") {
  // y2^2 = 1 and y1^2 y2 = -1: solvable only with y2 = -1.
  MultiplicativeSystem sys =
      sys_of(2, {eq({0, 2}, Rat(1)), eq({2, 1}, Rat(-1))});
  REQUIRE(oracles::multiplicative_feasible(sys));
  auto out = solve_gamma(sys);
  REQUIRE(std::holds_alternative<std::vector<RadicalProduct>>(out));
  auto gamma = std::get<std::vector<RadicalProduct>>(out);
  CHECK(verify_gamma(sys, gamma));
  CHECK(*gamma[1].to_rational() == Rat(-1));
}

TEST_CASE("bezout elimination handles non-unit degree gcds") {
  // y1^2 = 4/9 has the rational solution 2/3 (principal root).
  MultiplicativeSystem sqs = sys_of(1, {eq({2}, Rat(4, 9))});
  auto gamma = std::get<std::vector<RadicalProduct>>(solve_gamma(sqs));
  CHECK(*gamma[0].to_rational() == Rat(2, 3));

  // y1^2 = 2 forces the irrational sqrt(2).
  MultiplicativeSystem irr = sys_of(1, {eq({2}, Rat(2))});
  auto g2 = std::get<std::vector<RadicalProduct>>(solve_gamma(irr));
  CHECK(g2[0] == RadicalProduct::power(Rat(2), Rat(1, 2)));
  CHECK(verify_gamma(irr, g2));

  // degrees 2 and 3 combine to a degree-1 pivot
  MultiplicativeSystem mix =
      sys_of(2, {eq({2, 1}, Rat(8)), eq({3, 1}, Rat(16))});
  auto g3 = std::get<std::vector<RadicalProduct>>(solve_gamma(mix));
  CHECK(verify_gamma(mix, g3));
}

TEST_CASE("verify_gamma checks exactly, including radicals") {
  MultiplicativeSystem sys = sys_of(3, {eq({1, 1, -1}, Rat(4))});
  CHECK(verify_gamma(sys, RatVec{Rat(1), Rat(1), Rat(1, 4)}));
  CHECK_FALSE(verify_gamma(sys, RatVec{Rat(1), Rat(1), Rat(1)}));

  MultiplicativeSystem two = sys_of(3, {eq({1, 1, -1}, Rat(2))});
  RadicalProduct sqrt2 = RadicalProduct::power(Rat(2), Rat(1, 2));
  CHECK(verify_gamma(two, {sqrt2, sqrt2, RadicalProduct::one()}));
  CHECK_FALSE(verify_gamma(two, {sqrt2, sqrt2, sqrt2}));
}

TEST_CASE("verdicts agree with the prime-exponent oracle at desk scale") {
  oracles::Rng rng(500);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    MultiplicativeSystem sys = rng.multiplicative_system(4, 5, 3);
    auto out = solve_gamma(sys);
    bool oracle = oracles::multiplicative_feasible(sys);
    if (std::holds_alternative<std::vector<RadicalProduct>>(out)) {
      ++feasible;
      CHECK(oracle);
      CHECK(verify_gamma(sys, std::get<std::vector<RadicalProduct>>(out)));
    } else {
      ++infeasible;
      CHECK_FALSE(oracle);
      CHECK(check_multiplicative_certificate(
          sys, std::get<MultiplicativeInfeasibility>(out)));
    }
  }
  CHECK(feasible > 10);
  CHECK(infeasible > 10);
}
