#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verma/operators.hpp"
#include "verma/verify.hpp"
#include "verma/weyl.hpp"

#include "test_util.hpp"

using namespace verma;
using namespace verma::testutil;

TEST_CASE("cartan matrix") {
  const auto a = cartan_matrix(4);
  for (int l = 1; l <= 3; ++l)
    for (int i = 1; i <= 3; ++i) {
      CHECK(a[l - 1][i - 1] == a[i - 1][l - 1]);
      CHECK(a[l - 1][i - 1] == (l == i ? 2 : (std::abs(l - i) == 1 ? -1 : 0)));
    }
}

TEST_CASE("lowering operator") {
  CHECK(apply_eta(1, TruncatedSeries::one(2)) ==
        TruncatedSeries::variable(2, x21));
  CHECK(apply_eta(2, TruncatedSeries::one(3)) ==
        TruncatedSeries::variable(3, x32));
  // eta_2 x21 = x32 x21 + x31.
  CHECK(apply_eta(2, TruncatedSeries::variable(3, x21)) ==
        add(mono(3, q(1), {{x32, q(1)}, {x21, q(1)}}), mono(3, q(1), {{x31, q(1)}})));
  CHECK_THROWS_AS(apply_eta(3, TruncatedSeries::one(3)), std::out_of_range);
}

TEST_CASE("diagonal operator") {
  const Weight lam = weight({q(2, 3), q(5, 7)});
  CHECK(apply_zeta(1, lam, TruncatedSeries::one(3)) ==
        scale(q(2, 3), TruncatedSeries::one(3)));
  const auto x = TruncatedSeries::variable(3, x21);
  CHECK(apply_zeta(1, lam, x) == scale(lam.at(1) - 2, x));
  CHECK(apply_zeta(2, lam, x) == scale(lam.at(2) + 1, x));
}

TEST_CASE("raising operator") {
  const Weight lam2 = weight({q(3)});
  CHECK(apply_d(1, lam2, TruncatedSeries::one(2)).is_zero());
  CHECK(apply_d(1, lam2, TruncatedSeries::variable(2, x21)) ==
        scale(q(3), TruncatedSeries::one(2)));
  // The classical rank-2 singular vector x^{lambda_1 + 1}.
  CHECK(apply_d(1, lam2, mono(2, q(1), {{x21, q(4)}})).is_zero());

  const Weight lam3 = weight({q(1, 2), q(-2)});
  CHECK(apply_d(1, lam3, TruncatedSeries::variable(3, x21)) ==
        scale(q(1, 2), TruncatedSeries::one(3)));
}

TEST_CASE("rational powers: pure multiplication at the first generator") {
  const auto p = apply_eta_power(1, q(7, 3), TruncatedSeries::one(2));
  CHECK(p == mono(2, q(1), {{x21, q(7, 3)}}));
  CHECK(p.exact());
}

TEST_CASE("rational powers: binomial case against iterated lowering") {
  const auto f = TruncatedSeries::variable(3, x21);
  const auto sq = apply_eta_power(2, q(2), f);
  CHECK(sq == add(mono(3, q(1), {{x32, q(2)}, {x21, q(1)}}),
                  mono(3, q(2), {{x31, q(1)}, {x32, q(1)}})));
  CHECK(sq == apply_eta(2, apply_eta(2, f)));
}

TEST_CASE("rational powers: group law and inverses above the frontier") {
  const TruncationPolicy pol{24};
  const auto f = mono(3, q(1), {{x21, q(1, 2)}, {x31, q(1)}});
  const Rational a1 = q(3, 4), a2 = q(-5, 3);
  const auto lhs =
      apply_eta_power(2, a1, apply_eta_power(2, a2, f, pol), pol);
  const auto rhs = apply_eta_power(2, a1 + a2, f, pol);
  CHECK_FALSE(lhs.exact());
  CHECK(agrees_above_frontier(lhs, rhs));

  const auto inv =
      apply_eta_power(2, -a1, apply_eta_power(2, a1, f, pol), pol);
  CHECK(agrees_above_frontier(inv, f));
}

TEST_CASE("rational powers: truncation frontier placement") {
  const TruncationPolicy pol{24};
  // Nonterminating: fractional exponent under the derivation.
  const auto f = mono(3, q(1), {{x21, q(1, 2)}});
  const auto g = apply_eta_power(2, q(1, 2), f, pol);
  CHECK_FALSE(g.exact());
  REQUIRE(g.frontier().at(2).has_value());
  CHECK(*g.frontier().at(2) == q(1, 2) - 24);
  CHECK_FALSE(g.frontier().at(1).has_value());
  // Retained indices p = 0..23, all strictly above the frontier.
  CHECK(g.terms().size() == 24);

  // Integer exponents terminate by nilpotency whatever the power.
  const auto h = apply_eta_power(2, q(-7, 2), TruncatedSeries::variable(3, x21));
  CHECK(h.exact());
  CHECK(h.terms().size() == 2);
}

TEST_CASE("composite raising operators") {
  const Weight lam = weight({q(1), q(1)});
  const auto f = add(mono(3, q(2), {{x21, q(2)}, {x32, q(1)}}),
                     mono(3, q(1), {{x31, q(3)}}));
  // At the top index the composite is the plain raising operator.
  CHECK(apply_raising_composite(2, lam, f) == apply_d(2, lam, f));
  CHECK(apply_raising_composite(2, lam, TruncatedSeries::one(3)).is_zero());

  const Weight lam4 = weight({q(1, 2), q(2), q(-1, 3)});
  CHECK(apply_raising_composite(2, lam4, TruncatedSeries::one(4)).is_zero());
  CHECK_THROWS_AS(apply_raising_composite(1, lam, f), std::out_of_range);

  // Positive root vectors annihilate every singular vector.
  for (const auto& cert : singular_vectors(weight({q(1), q(1)}))) {
    CHECK(apply_raising_composite(2, lam, cert.series).is_zero());
  }
}

TEST_CASE("eta chains compose right to left") {
  const TruncationPolicy pol{24};
  const auto one3 = TruncatedSeries::one(3);
  CHECK(apply_eta_chain({}, one3, pol) == one3);
  CHECK(apply_eta_chain({{1, q(5, 2)}}, TruncatedSeries::one(2), pol) ==
        mono(2, q(1), {{x21, q(5, 2)}}));

  const Weight lam = weight({q(1, 2), q(1, 3)});
  const Rational a2 = lam.at(2) + 1;
  const Rational a1 = lam.at(1) + lam.at(2) + 2;
  const auto chain = apply_eta_chain({{1, a1}, {2, a2}}, one3, pol);
  CHECK(chain == mono(3, q(1), {{x21, a1}, {x32, a2}}));
  CHECK(chain == evaluate_word({1, 2}, lam, pol));
}

TEST_CASE("pde residuals") {
  const Weight lam = weight({q(1, 2), q(1, 3)});
  for (const auto& r : check_pde(lam, TruncatedSeries::one(3)))
    CHECK(r.is_zero());
  CHECK(pde_residuals_vanish(lam, TruncatedSeries::one(3)));

  const auto res = check_pde(lam, TruncatedSeries::variable(3, x21));
  CHECK(res.size() == 2);
  CHECK(res[0] == scale(q(1, 2), TruncatedSeries::one(3)));
  CHECK_FALSE(pde_residuals_vanish(lam, TruncatedSeries::variable(3, x21)));

  CHECK(pde_residuals_vanish(weight({q(3)}), mono(2, q(1), {{x21, q(4)}})));
}

TEST_CASE("generator triple bracket on random polynomials") {
  RandomSource rng(21);
  for (int c = 0; c < 50; ++c) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    const Weight lam = rng.weight(n, false);
    const int i = static_cast<int>(rng.uniform(1, n - 1));
    const int j = static_cast<int>(rng.uniform(1, n - 1));
    const auto f = rng.polynomial(n, 3);
    const auto lhs = sub(apply_d(i, lam, apply_eta(j, f)),
                         apply_eta(j, apply_d(i, lam, f)));
    const auto rhs =
        i == j ? apply_zeta(i, lam, f) : TruncatedSeries::zero(n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("power-raising commutator at a fixed fractional power") {
  const TruncationPolicy pol{24};
  const Weight lam = weight({q(-1, 2), q(4, 5)});
  const Rational a = q(7, 6);
  const auto f = mono(3, q(1), {{x21, q(1, 3)}, {x31, q(2)}});

  // Same generator: a eta^{a-1} ((1-a) + zeta).
  const auto lhs = sub(apply_d(2, lam, apply_eta_power(2, a, f, pol)),
                       apply_eta_power(2, a, apply_d(2, lam, f), pol));
  const auto inner = add(scale(1 - a, f), apply_zeta(2, lam, f));
  const auto rhs = scale(a, apply_eta_power(2, a - 1, inner, pol));
  CHECK(agrees_above_frontier(lhs, rhs));

  // Different generator: commutes.
  const auto lhs2 = sub(apply_d(1, lam, apply_eta_power(2, a, f, pol)),
                        apply_eta_power(2, a, apply_d(1, lam, f), pol));
  CHECK(is_zero_above_frontier(lhs2));
}

TEST_CASE("diagonal-power commutator at a fixed fractional power") {
  const TruncationPolicy pol{24};
  const Weight lam = weight({q(2), q(-3, 4)});
  const Rational a = q(-5, 6);
  const auto f = mono(3, q(1), {{x21, q(3, 2)}});
  for (int l = 1; l <= 2; ++l) {
    const auto pw = apply_eta_power(2, a, f, pol);
    const auto lhs = sub(apply_zeta(l, lam, pw),
                         apply_eta_power(2, a, apply_zeta(l, lam, f), pol));
    CHECK(agrees_above_frontier(lhs, scale(-a * cartan_entry(l, 2), pw)));
  }
}

TEST_CASE("truncation policy validation") {
  CHECK_THROWS_AS(
      apply_eta_power(1, q(1), TruncatedSeries::one(2), TruncationPolicy{0}),
      std::invalid_argument);
}
