#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "cluskit/series.hpp"

using namespace cluskit;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, Trunc tr, bool unit) {
  std::uniform_int_distribution<int> es(0, tr.s), et(0, tr.t), eq(0, tr.q),
      ex(0, tr.x), c(-4, 4), nterms(1, 8);
  TruncatedSeries f(tr);
  for (int i = nterms(rng); i > 0; --i)
    f.add_term(c(rng), Expo{es(rng), et(rng), eq(rng), ex(rng)});
  if (unit) f += TruncatedSeries::constant(1, tr);
  return f;
}

}  // namespace

TEST_CASE("trunc bookkeeping") {
  Trunc a{2, 3, 0, 5}, b{4, 1, 0, 5};
  auto m = Trunc::meet(a, b);
  CHECK(m == Trunc{2, 1, 0, 5});
  CHECK(a.contains(Expo{2, 3, 0, 0}));
  CHECK_FALSE(a.contains(Expo{3, 0, 0, 0}));
  CHECK(a.get(Var::t) == 3);
}

TEST_CASE("construction, geometric, arithmetic") {
  Trunc tr{0, 6, 0, 0};
  auto one = TruncatedSeries::constant(1, tr);
  auto t = TruncatedSeries::variable(Var::t, tr);
  auto g = TruncatedSeries::geometric(Var::t, tr);

  CHECK(equal_within((one - t) * g, one));
  CHECK(equal_within(g, (one - t).inverse()));
  CHECK(g.coeff(Expo{0, 6, 0, 0}) == 1);
  CHECK(g.term_count() == 7);

  CHECK((t - t).is_zero());
  CHECK(equal_within(t.pow(3), t * t * t));
  CHECK(equal_within(t.scaled(Rat(1, 2)).scaled(2), t));

  // beyond-truncation terms are dropped on entry, never read back
  auto h = t.pow(7);
  CHECK(h.is_zero());
  CHECK_THROWS_AS(g.coeff(Expo{0, 7, 0, 0}), std::out_of_range);
}

TEST_CASE("ring laws on random series") {
  std::mt19937_64 rng(91);
  Trunc tr{2, 4, 0, 4};
  for (int rep = 0; rep < 25; ++rep) {
    auto a = random_series(rng, tr, false);
    auto b = random_series(rng, tr, false);
    auto c = random_series(rng, tr, false);
    CHECK(equal_within((a * b) * c, a * (b * c)));
    CHECK(equal_within(a * b, b * a));
    CHECK(equal_within(a * (b + c), a * b + a * c));
    CHECK(equal_within((a + b) + c, a + (b + c)));
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(92);
  Trunc tr{1, 3, 0, 4};
  auto one = TruncatedSeries::constant(1, tr);
  for (int rep = 0; rep < 25; ++rep) {
    auto u = random_series(rng, tr, true);
    if (u.coeff(Expo{}) == 0) continue;
    CHECK(equal_within(u * u.inverse(), one));
  }
  auto x = TruncatedSeries::variable(Var::x, tr);
  CHECK_THROWS_WITH_AS(x.inverse(), "not invertible", std::domain_error);
}

TEST_CASE("hadamard product in t") {
  Trunc tr{0, 4, 0, 3};
  auto one = TruncatedSeries::constant(1, tr);
  auto t = TruncatedSeries::variable(Var::t, tr);
  auto x = TruncatedSeries::variable(Var::x, tr);
  auto hone = TruncatedSeries::hadamard_one(tr);

  // 1/(1-t) is the unit: slice-wise multiplication by 1
  auto f = TruncatedSeries::geometric(Var::t, tr) * (one + x) + t * x * x;
  CHECK(equal_within(f.hadamard(hone), f));
  CHECK(equal_within(hone.hadamard(f), f));
  CHECK(equal_within(f.hadamard_pow(0), hone));
  CHECK(equal_within(f.hadamard_pow(3), f.hadamard(f).hadamard(f)));

  // substituting tx for t multiplies slice k by x^k; hadamard with the
  // geometric series in tx therefore recovers exactly the diagonal scaling
  auto fi = f.hadamard_inverse();
  CHECK(equal_within(f.hadamard(fi), hone));

  // slices with zero constant term are not hadamard-invertible
  CHECK_THROWS_AS((t * x).hadamard_inverse(), std::domain_error);
}

TEST_CASE("square root of one plus positive order") {
  Trunc tr{0, 8, 0, 0};
  auto one = TruncatedSeries::constant(1, tr);
  auto t = TruncatedSeries::variable(Var::t, tr);

  auto r = (one + t).sqrt_one_plus();
  CHECK(equal_within(r * r, one + t));

  auto sq = (one - t) * (one - t);
  CHECK(equal_within(sq.sqrt_one_plus(), one - t));

  std::mt19937_64 rng(93);
  for (int rep = 0; rep < 10; ++rep) {
    auto f = random_series(rng, tr, false) * t;  // positive order
    CHECK(equal_within((one + f).sqrt_one_plus().pow(2), one + f));
  }

  CHECK_THROWS_WITH_AS(t.sqrt_one_plus(), "sqrt requires constant term 1",
                       std::domain_error);
}

TEST_CASE("substitution") {
  Trunc tr{0, 6, 0, 6};
  auto one = TruncatedSeries::constant(1, tr);
  auto t = TruncatedSeries::variable(Var::t, tr);
  auto x = TruncatedSeries::variable(Var::x, tr);

  // t -> t^2 in 1/(1-t)
  auto g = TruncatedSeries::geometric(Var::t, tr);
  auto gt2 = g.substitute(Var::t, t * t);
  CHECK(gt2.coeff(Expo{0, 4, 0, 0}) == 1);
  CHECK(gt2.coeff(Expo{0, 3, 0, 0}) == 0);

  // t -> x(1+t) is sound through the x-grading
  auto mixed = g.substitute(Var::t, x * (one + t));
  CHECK(mixed.coeff(Expo{0, 1, 0, 2}) == 2);  // x^2(1+t)^2

  // substituting a unit is unsound and must fail loudly
  CHECK_THROWS_WITH_AS(g.substitute(Var::t, one + t), "unbounded substitution",
                       std::domain_error);

  // u(v(t)) = t through degree 12, with u = 4t/(1+t)^2 and
  // v = 2(1 - sqrt(1-t))/t - 1
  Trunc deep{0, 12, 0, 0};
  auto od = TruncatedSeries::constant(1, deep);
  auto td = TruncatedSeries::variable(Var::t, deep);
  auto u = td.scaled(4) * (od + td).pow(2).inverse();
  Trunc high = deep;
  high.t += 1;
  auto oh = TruncatedSeries::constant(1, high);
  auto th = TruncatedSeries::variable(Var::t, high);
  auto v = ((oh - (oh - th).sqrt_one_plus()).scaled(2) - th).divide_by(Var::t, 1);
  CHECK(v.trunc().t == 12);
  CHECK(equal_within(u.substitute(Var::t, v), td));
  CHECK(equal_within(v.substitute(Var::t, u), td));
}

TEST_CASE("divide and slice") {
  Trunc tr{1, 4, 0, 4};
  auto t = TruncatedSeries::variable(Var::t, tr);
  auto x = TruncatedSeries::variable(Var::x, tr);
  auto s = TruncatedSeries::variable(Var::s, tr);

  auto f = t * x + t * t * x;
  auto d = f.divide_by(Var::t, 1);
  CHECK(d.trunc().t == 3);
  CHECK(d.coeff(Expo{0, 0, 0, 1}) == 1);
  CHECK(d.coeff(Expo{0, 1, 0, 1}) == 1);
  CHECK_THROWS_WITH_AS((t + x).divide_by(Var::t, 1), "divide_by: not divisible",
                       std::domain_error);

  auto sl = (s * x * x + x * x + t).x_slice(2);
  CHECK(sl.trunc().x == 0);
  CHECK(sl.coeff(Expo{1, 0, 0, 0}) == 1);
  CHECK(sl.coeff(Expo{}) == 1);
  CHECK_THROWS_AS(t.slice(Var::x, 5), std::out_of_range);
}

TEST_CASE("poly conversions") {
  Trunc tr{2, 3, 2, 2};
  Poly p = Poly::parse("1 + 2*s*t + q^2");
  auto f = TruncatedSeries::from_poly(p, tr);
  CHECK(f.to_poly() == p);

  auto x = TruncatedSeries::variable(Var::x, tr);
  CHECK_THROWS_AS(x.to_poly(), std::domain_error);
  CHECK_THROWS_AS(x.scaled(Rat(1, 2)).x_slice(1).to_poly(), std::domain_error);

  // exact polynomial composition: p with t := x(1+t), beyond-trunc dropped
  auto g = TruncatedSeries::variable(Var::x, tr) *
           (TruncatedSeries::constant(1, tr) + TruncatedSeries::variable(Var::t, tr));
  auto sub = from_poly_substituted(p, Var::t, g, tr);
  CHECK(sub.coeff(Expo{1, 0, 0, 1}) == 2);
  CHECK(sub.coeff(Expo{1, 1, 0, 1}) == 2);
  CHECK_THROWS_AS(from_poly_substituted(p, Var::x, g, tr), std::invalid_argument);
}

TEST_CASE("equal_within compares on the meet") {
  Trunc small{0, 2, 0, 0}, big{0, 5, 0, 0};
  auto gs = TruncatedSeries::geometric(Var::t, small);
  auto gb = TruncatedSeries::geometric(Var::t, big);
  CHECK(equal_within(gs, gb));
  auto one = TruncatedSeries::constant(1, big);
  CHECK_FALSE(equal_within(gs, one));
}

TEST_CASE("canonical text") {
  Trunc tr{1, 2, 0, 2};
  auto f = TruncatedSeries::variable(Var::s, tr) +
           TruncatedSeries::variable(Var::x, tr).scaled(Rat(1, 2));
  CHECK(f.str() == "s + 1/2*x");
  CHECK(TruncatedSeries(tr).str() == "0");
}
