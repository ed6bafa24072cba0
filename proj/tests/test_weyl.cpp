#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "verma/json_io.hpp"
#include "verma/oracle.hpp"
#include "verma/verify.hpp"
#include "verma/weyl.hpp"

#include "test_util.hpp"

using namespace verma;
using namespace verma::testutil;

TEST_CASE("canonical words") {
  CHECK(canonical_word(identity_perm(3)).empty());
  CHECK(canonical_word(Permutation{2, 1}) == PermWord{1});
  CHECK(canonical_word(Permutation{3, 2, 1}) == PermWord{1, 2, 1});

  for (int n = 2; n <= 4; ++n) {
    for (const auto& p : all_permutations(n)) {
      const PermWord w = canonical_word(p);
      CHECK(static_cast<int>(w.size()) == inversion_count(p));
      CHECK(is_reduced(w, n));
      CHECK(perm_of_word(w, n) == p);
    }
  }
}

TEST_CASE("canonical word is lex-minimal among reduced words at rank 3") {
  // Brute force over all words up to the longest length.
  for (const auto& p : all_permutations(3)) {
    const PermWord best = canonical_word(p);
    const int len = inversion_count(p);
    std::vector<PermWord> stack{{}};
    for (int l = 0; l < len; ++l) {
      std::vector<PermWord> next;
      for (const auto& w : stack)
        for (int g = 1; g <= 2; ++g) {
          PermWord e = w;
          e.push_back(g);
          next.push_back(std::move(e));
        }
      stack = std::move(next);
    }
    for (const auto& w : stack)
      if (perm_of_word(w, 3) == p) CHECK(best <= w);
  }
}

TEST_CASE("weighted decomposition") {
  const Weight lam = weight({q(1, 2), q(1, 3)});
  const auto m = mono(3, q(2), {{x21, q(1)}});
  CHECK(decompose_weighted(m, lam).size() == 1);
  CHECK(decompose_weighted(TruncatedSeries::zero(3), lam).empty());

  const auto f = add(TruncatedSeries::one(3), TruncatedSeries::variable(3, x21));
  const auto parts = decompose_weighted(f, lam);
  REQUIRE(parts.size() == 2);
  TruncatedSeries back = TruncatedSeries::zero(3);
  std::set<WeightVector> seen;
  for (const auto& [mu, part] : parts) {
    back = add(back, part);
    seen.insert(mu);
  }
  CHECK(back == f);
  CHECK(seen.count(WeightVector{q(1, 2), q(1, 3)}) == 1);
  CHECK(seen.count(WeightVector{q(1, 2) - 2, q(1, 3) + 1}) == 1);
}

TEST_CASE("sigma examples") {
  const Weight lam = weight({q(1, 2), q(1, 3)});
  CHECK(apply_sigma(1, lam, TruncatedSeries::one(3)) ==
        mono(3, q(1), {{x21, lam.at(1) + 1}}));
  // Terminating despite the fractional power: the derivation kills 1.
  const auto s2 = apply_sigma(2, lam, TruncatedSeries::one(3));
  CHECK(s2 == mono(3, q(1), {{x32, lam.at(2) + 1}}));
  CHECK(s2.exact());
}

TEST_CASE("sigma involution on a weighted input") {
  const TruncationPolicy pol{24};
  const Weight lam = weight({q(3, 5), q(-1, 2)});
  const auto f = mono(3, q(2), {{x21, q(1, 4)}, {x31, q(1)}});
  const auto back = apply_sigma(2, lam, apply_sigma(2, lam, f, pol), pol);
  CHECK(agrees_above_frontier(back, f));

  // Dominant integral on a polynomial input: exact round trip.
  const Weight dom = weight({q(2), q(1)});
  const auto g = mono(3, q(1), {{x21, q(1)}, {x32, q(2)}});
  const auto gb = apply_sigma(1, dom, apply_sigma(1, dom, g, pol), pol);
  CHECK(gb == g);
}

TEST_CASE("word evaluation") {
  const TruncationPolicy pol{24};
  const Weight lam = weight({q(1, 2), q(1, 3)});
  CHECK(evaluate_word({}, lam, pol) == TruncatedSeries::one(3));
  CHECK(evaluate_word({1}, lam, pol) == mono(3, q(1), {{x21, q(3, 2)}}));
  CHECK(evaluate_word({1, 2}, lam, pol) ==
        mono(3, q(1), {{x21, q(17, 6)}, {x32, q(4, 3)}}));
}

TEST_CASE("longest-element word independence at rank 3") {
  const TruncationPolicy pol{24};
  // Dominant integral: exact equality of the two evaluations.
  const Weight dom = weight({q(1), q(1)});
  CHECK(evaluate_word({1, 2, 1}, dom, pol) == evaluate_word({2, 1, 2}, dom, pol));

  const Weight lam = weight({q(1, 2), q(1, 3)});
  const auto a = evaluate_word({1, 2, 1}, lam, pol);
  const auto b = evaluate_word({2, 1, 2}, lam, pol);
  CHECK_FALSE(a.exact());
  CHECK(agrees_above_frontier(a, b));
  // The comparison is not vacuous.
  CHECK(!a.is_zero());
  CHECK(is_zero_above_frontier(sub(a, b)));
}

TEST_CASE("orbit at rank 2") {
  const auto certs = orbit(weight({q(3)}));
  REQUIRE(certs.size() == 2);
  CHECK(certs[0].word.empty());
  CHECK(certs[0].series == TruncatedSeries::one(2));
  CHECK(certs[1].word == PermWord{1});
  CHECK(certs[1].series == mono(2, q(1), {{x21, q(4)}}));
  for (const auto& c : certs) {
    CHECK(c.polynomial);
    CHECK(c.pde_zero);
  }

  const auto half = orbit(weight({q(1, 2)}));
  CHECK(half[1].series == mono(2, q(1), {{x21, q(3, 2)}}));
  CHECK_FALSE(half[1].polynomial);
}

TEST_CASE("orbit budget") {
  Weight lam;
  for (int i = 0; i < 6; ++i) lam.lambda.push_back(q(1));
  CHECK_THROWS_AS(orbit(lam), BudgetExceeded); // 7! past the default cap
}

TEST_CASE("singular vectors filter, normalize, dedupe") {
  const auto only_trivial = singular_vectors(weight({q(-1, 2)}));
  REQUIRE(only_trivial.size() == 1);
  CHECK(only_trivial[0].series == TruncatedSeries::one(2));

  const auto zero_weight = singular_vectors(weight({q(0)}));
  REQUIRE(zero_weight.size() == 2);
  CHECK(zero_weight[1].series == TruncatedSeries::variable(2, x21));

  // Degenerate weight: distinct words can collapse to the same vector.
  const auto collapsed = singular_vectors(weight({q(-1)}));
  CHECK(collapsed.size() == 1);

  const auto six = singular_vectors(weight({q(1), q(1)}));
  CHECK(six.size() == 6);
  for (std::size_t a = 0; a < six.size(); ++a) {
    CHECK(six[a].series.terms().front().coeff == 1);
    CHECK(six[a].polynomial);
    CHECK(six[a].pde_zero);
    for (std::size_t b = a + 1; b < six.size(); ++b)
      CHECK_FALSE(six[a].series == six[b].series);
  }
}

TEST_CASE("polynomial certificates land in the module kernel") {
  const Weight lam = weight({q(1), q(1)});
  for (const auto& cert : singular_vectors(lam)) {
    const VermaVector v = tau_inverse(cert.series);
    for (int i = 1; i <= 2; ++i) CHECK(raise(i, lam, v).is_zero());
  }
}

TEST_CASE("mff vectors") {
  const TruncationPolicy pol{24};
  auto [s1, poly1] = mff_vector(1, 1, weight({q(2)}), pol);
  CHECK(poly1);
  CHECK(s1 == mono(2, q(1), {{x21, q(3)}}));

  auto [s2, poly2] = mff_vector(1, 1, weight({q(1, 3)}), pol);
  CHECK_FALSE(poly2);
  CHECK(s2 == mono(2, q(1), {{x21, q(4, 3)}}));

  auto [s3, poly3] = mff_vector(1, 2, weight({q(1), q(1)}), pol);
  CHECK(poly3);
  CHECK(pde_residuals_vanish(weight({q(1), q(1)}), s3));
  // Degree (4,4) vector, frozen from the evaluated word s1.s2.s1.
  CHECK(s3 == add(add(mono(3, q(12), {{x21, q(2)}, {x31, q(2)}, {x32, q(2)}}),
                      mono(3, q(8), {{x21, q(3)}, {x31, q(1)}, {x32, q(3)}})),
                  mono(3, q(1), {{x21, q(4)}, {x32, q(4)}})));

  CHECK_THROWS_AS(mff_vector(2, 1, weight({q(1), q(1)}), pol), std::out_of_range);
}

TEST_CASE("irreducibility criterion with witnesses") {
  CHECK(is_irreducible(weight({q(1, 2)})).irreducible);
  CHECK(is_irreducible(weight({q(-1)})).irreducible);
  CHECK(is_irreducible(weight({q(-2)})).irreducible);

  const auto red = is_irreducible(weight({q(3)}));
  CHECK_FALSE(red.irreducible);
  REQUIRE(red.witnesses.size() == 1);
  CHECK(red.witnesses[0].i == 1);
  CHECK(red.witnesses[0].j == 1);
  CHECK(red.witnesses[0].value == q(4));

  const auto red3 = is_irreducible(weight({q(-1, 2), q(-1, 2)}));
  CHECK_FALSE(red3.irreducible);
  REQUIRE(red3.witnesses.size() == 1);
  CHECK(red3.witnesses[0].i == 1);
  CHECK(red3.witnesses[0].j == 2);
  CHECK(red3.witnesses[0].value == q(1));

  // Cross-checked against the module: no kernel up to total degree 12.
  CHECK(search_singular(weight({q(1, 2)}), 12).empty());
}

TEST_CASE("certificate JSON round trip") {
  for (const auto& cert : singular_vectors(weight({q(1), q(1)}))) {
    const auto j = certificate_to_json(cert);
    const SingularCertificate back = certificate_from_json(j);
    CHECK(back.word == cert.word);
    CHECK(back.series == cert.series);
    CHECK(back.weight == cert.weight);
    CHECK(back.polynomial == cert.polynomial);
    CHECK(back.pde_zero == cert.pde_zero);
    CHECK(certificate_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("non-polynomial orbit members are reported, not certified") {
  const auto certs = orbit(weight({q(1, 2)}));
  CHECK_FALSE(certs[1].polynomial);
  CHECK(certs[1].pde_zero); // solution above its frontier
  const auto sv = singular_vectors(weight({q(1, 2)}));
  CHECK(sv.size() == 1); // only the trivial one
}
