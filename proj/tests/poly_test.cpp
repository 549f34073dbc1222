#include <random>

#include "doctest.h"
#include "syzlab/errors.hpp"
#include "syzlab/polynomial.hpp"

using namespace syzlab;

namespace {

PolyRing ring_xy(MonomialOrder order = {}) { return PolyRing(PrimeField(), {"x", "y"}, order); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, int max_exp) {
  std::vector<int> e(nvars);
  for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
  return Monomial::from_exponents(e);
}

Polynomial random_poly(std::mt19937_64& rng, const PolyRing& R, int terms) {
  std::vector<PolyTerm> ts;
  for (int i = 0; i < terms; ++i) {
    ts.push_back({static_cast<Coeff>(rng() % R.field().characteristic()), random_monomial(rng, R.nvars(), 3)});
  }
  return R.from_terms(ts);
}

}  // namespace

TEST_CASE("field arithmetic") {
  PrimeField F(7);
  for (Coeff a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK_THROWS_AS(PrimeField(4), UsageError);
  CHECK_THROWS_AS(F.inv(0), UsageError);
  PrimeField big;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Coeff a = 1 + static_cast<Coeff>(rng() % (big.characteristic() - 1));
    CHECK(big.mul(a, big.inv(a)) == 1);
  }
}

TEST_CASE("monomial_cmp examples") {
  MonomialOrder grevlex(MonomialOrderKind::GrevLex);
  MonomialOrder lex(MonomialOrderKind::Lex);
  CHECK(monomial_cmp(grevlex, Monomial{2, 1}, Monomial{1, 2}) > 0);
  CHECK(monomial_cmp(lex, Monomial{0, 5}, Monomial{1, 0}) < 0);
  CHECK(monomial_cmp(grevlex, Monomial{3, 1}, Monomial{3, 1}) == 0);
  CHECK(monomial_cmp(lex, Monomial{3, 1}, Monomial{3, 1}) == 0);
  CHECK_THROWS_AS(monomial_cmp(lex, Monomial{1, 0}, Monomial{1, 0, 0}), UsageError);
}

TEST_CASE("monomial orders are total, multiplicative, with 1 minimal") {
  std::mt19937_64 rng(42);
  for (auto kind : {MonomialOrderKind::Lex, MonomialOrderKind::GrevLex}) {
    MonomialOrder order(kind);
    for (int trial = 0; trial < 1000; ++trial) {
      Monomial a = random_monomial(rng, 4, 4), b = random_monomial(rng, 4, 4), c = random_monomial(rng, 4, 4);
      auto ab = order.compare(a, b);
      CHECK((ab == 0) == (a == b));
      CHECK(std::is_gt(order.compare(b, a)) == std::is_lt(ab));
      if (ab < 0 && order.compare(b, c) < 0) CHECK(order.compare(a, c) < 0);
      CHECK(order.compare(a * c, b * c) == ab);
      CHECK(order.compare(Monomial(4), a) <= 0);
      CHECK((a * b).degree() == a.degree() + b.degree());
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("module orders respect position and blocks") {
  ModuleOrder top(MonomialOrder{}, ModuleExtension::TermOverPosition);
  ModuleOrder pot(MonomialOrder{}, ModuleExtension::PositionOverTerm);
  Monomial x{1, 0}, y2{0, 2};
  CHECK(top.compare(y2, 1, x, 0) > 0);
  CHECK(pot.compare(y2, 1, x, 0) < 0);
  CHECK(top.compare(x, 0, x, 1) > 0);
  auto blocked = top.with_block(1);
  CHECK(blocked.compare(Monomial{0, 0}, 0, y2, 1) > 0);
  auto sch = ModuleOrder::schreyer(MonomialOrder{}, {Monomial{0, 0}, Monomial{0, 3}});
  CHECK(sch.compare(x, 1, y2, 0) > 0);
}

TEST_CASE("poly_arith examples") {
  PolyRing R = ring_xy();
  Polynomial x = R.variable(0), y = R.variable(1);
  CHECK(poly_arith(R, PolyOp::Add, R.add(x, y), R.neg(R.add(x, y))).is_zero());
  CHECK(poly_arith(R, PolyOp::Mul, R.add(x, y), R.sub(x, y)) == R.sub(R.mul(x, x), R.mul(y, y)));
  Polynomial f = R.scale(x, 32002);
  Polynomial g = poly_arith(R, PolyOp::Scale, f, R.constant(2));
  REQUIRE(g.size() == 1);
  CHECK(g.lead().coeff == (2u * 32002u) % 32003u);
  CHECK(g.lead().coeff == 32001);
  CHECK_THROWS_AS(poly_arith(R, PolyOp::Scale, f, x), UsageError);
  CHECK(R.format(R.sub(R.mul(x, x), R.scale(y, 3))) == "x^2 - 3*y");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (auto kind : {MonomialOrderKind::Lex, MonomialOrderKind::GrevLex}) {
    PolyRing R(PrimeField(), {"x", "y", "z"}, MonomialOrder(kind));
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial a = random_poly(rng, R, 4), b = random_poly(rng, R, 4), c = random_poly(rng, R, 3);
      CHECK(R.add(a, b) == R.add(b, a));
      CHECK(R.mul(a, b) == R.mul(b, a));
      CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
      CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
      CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
      CHECK(R.sub(a, a).is_zero());
    }
  }
}

TEST_CASE("degree is additive on homogeneous products") {
  std::mt19937_64 rng(11);
  PolyRing R(PrimeField(), {"x", "y", "z"});
  for (int trial = 0; trial < 100; ++trial) {
    int da = 1 + static_cast<int>(rng() % 3), db = 1 + static_cast<int>(rng() % 3);
    std::vector<PolyTerm> ta, tb;
    for (int i = 0; i < 3; ++i) {
      Monomial m = Monomial::variable(3, rng() % 3);
      Monomial n = Monomial::variable(3, rng() % 3);
      for (int k = 1; k < da; ++k) m = m * Monomial::variable(3, rng() % 3);
      for (int k = 1; k < db; ++k) n = n * Monomial::variable(3, rng() % 3);
      ta.push_back({1 + static_cast<Coeff>(rng() % 100), m});
      tb.push_back({1 + static_cast<Coeff>(rng() % 100), n});
    }
    Polynomial a = R.from_terms(ta), b = R.from_terms(tb);
    if (a.is_zero() || b.is_zero()) continue;
    Polynomial ab = R.mul(a, b);
    CHECK(ab.is_homogeneous());
    CHECK(ab.degree() == a.degree() + b.degree());
  }
}

TEST_CASE("homogeneous_degree examples") {
  PolyRing R = ring_xy();
  Polynomial x = R.variable(0), y = R.variable(1);
  CHECK(homogeneous_degree(FreeModule{{0, 0}}, FreeModuleElement{{x, y}}) == 1);
  CHECK(homogeneous_degree(FreeModule{{1}}, FreeModuleElement{{R.mul(x, x)}}) == 3);
  CHECK_FALSE(homogeneous_degree(FreeModule{{0}}, FreeModuleElement{{R.add(x, R.mul(y, y))}}).has_value());
}

TEST_CASE("exponent overflow is a resource error") {
  Monomial a = Monomial::from_exponents(std::vector<int>{200, 0});
  CHECK_THROWS_AS(a * a, ResourceError);
}
