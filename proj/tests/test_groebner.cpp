#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace fga;

namespace {

AlgebraElement wrd(FieldSpec f, const Word &w) {
  return AlgebraElement::from_word(f, w);
}

bool has_lpp_prefix(const Word &w, const WordSet &lpps) {
  for (const Word &u : lpps)
    if (u.is_prefix_of(w))
      return true;
  return false;
}

void check_invariants(const std::vector<AlgebraElement> &gens,
                      const GroebnerData &g) {
  for (const auto &a : g.firsts)
    CHECK(is_monic(a));
  for (const auto &b : g.seconds)
    CHECK(is_monic(b));
  // the reduction system is interreduced: no support word other than an
  // element's own leading word has any leading word as a prefix
  auto all = g.basis_pointers();
  for (const AlgebraElement *e : all)
    for (const auto &[w, c] : e->terms()) {
      if (w == lpp(*e)) {
        for (const AlgebraElement *o : all)
          if (o != e)
            CHECK(!lpp(*o).is_prefix_of(w));
      } else {
        CHECK(!has_lpp_prefix(w, g.lpp_set));
      }
    }
  // beta = alpha C, column by column
  for (std::size_t j = 0; j < g.seconds.size(); ++j) {
    AlgebraElement acc = AlgebraElement::zero(g.field, g.rank);
    for (std::size_t i = 0; i < g.firsts.size(); ++i)
      acc = acc + g.firsts[i] * g.C.at(i, j);
    CHECK(acc == g.seconds[j]);
  }
  // v A = alpha for the input generator row
  for (std::size_t j = 0; j < g.firsts.size(); ++j) {
    AlgebraElement acc = AlgebraElement::zero(g.field, g.rank);
    for (std::size_t i = 0; i < gens.size(); ++i)
      acc = acc + gens[i] * g.transform_A.at(i, j);
    CHECK(acc == g.firsts[j]);
  }
}

} // namespace

TEST_CASE("basis of a principal ideal and cubic membership") {
  auto q = FieldSpec::rationals();
  int r = 2;
  Word x = Word::generator(r, 1);
  auto one = AlgebraElement::one(q, r);
  auto xm1 = wrd(q, x) - one;
  auto g = rosenmann_basis({xm1});
  check_invariants({xm1}, g);
  CHECK(g.ideal_rank() == 1);
  CHECK(g.firsts[0] == xm1);

  auto x3m1 = wrd(q, x * x * x) - one;
  CHECK(remainder(x3m1, g).is_zero());
  CHECK(remainder(AlgebraElement::zero(q, r), g).is_zero());

  auto [coeffs, rem] = extract_coefficients(g, x3m1);
  CHECK(rem.is_zero());
  CHECK(coeffs[0] == wrd(q, x * x) + wrd(q, x) + one);
}

TEST_CASE("augmentation ideal of F2") {
  auto q = FieldSpec::rationals();
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);
  auto one = AlgebraElement::one(q, r);
  auto xm1 = wrd(q, x) - one, ym1 = wrd(q, y) - one;
  auto xym1 = wrd(q, x * y) - one;

  auto g = rosenmann_basis({xm1, ym1, xym1});
  check_invariants({xm1, ym1, xym1}, g);
  CHECK(g.ideal_rank() == 2);
  CHECK(rosenmann_basis({xm1, ym1}).firsts == g.firsts);

  CHECK(remainder(wrd(q, x), g) == one); // x ≡ 1 mod (x−1)
  CHECK(!ideal_membership(g, one));      // the ideal is proper
}

TEST_CASE("unit ideal collapses to the unity") {
  auto q = FieldSpec::rationals();
  int r = 2;
  Word x = Word::generator(r, 1);
  auto one = AlgebraElement::one(q, r);
  for (auto gens : std::vector<std::vector<AlgebraElement>>{
           {one},
           {wrd(q, x) - one, wrd(q, x)},
           {AlgebraElement::monomial(Scalar::from_int(q, 3), x)}}) {
    auto g = rosenmann_basis(gens);
    CHECK(g.is_unit_ideal);
    CHECK(g.firsts.size() == 1);
    CHECK(g.firsts[0] == one);
    CHECK(g.seconds.empty());
  }
}

TEST_CASE("conjugate generators are already a basis") {
  auto q = FieldSpec::gf(2);
  int r = 2;
  Word b1 = Word::generator(r, 1), b2 = Word::generator(r, 2);
  auto one = AlgebraElement::one(q, r);
  Word c1 = b2.inverse() * b1 * b2;
  Word c2 = b2.inverse() * c1 * b2;
  auto g = rosenmann_basis({wrd(q, c1) - one, wrd(q, c2) - one});
  check_invariants({wrd(q, c1) - one, wrd(q, c2) - one}, g);
  CHECK(g.ideal_rank() == 2);
}

TEST_CASE("zero generators give the zero ideal") {
  auto q = FieldSpec::rationals();
  auto z = AlgebraElement::zero(q, 2);
  auto g = rosenmann_basis({z, z});
  CHECK(g.is_zero_ideal());
  CHECK(g.ideal_rank() == 0);
  CHECK(remainder(AlgebraElement::one(q, 2), g) ==
        AlgebraElement::one(q, 2));
  CHECK_THROWS_AS(rosenmann_basis({}), precondition_error);
}

TEST_CASE("ideal equality by mutual membership") {
  auto q = FieldSpec::rationals();
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);
  auto one = AlgebraElement::one(q, r);
  auto xm1 = wrd(q, x) - one, ym1 = wrd(q, y) - one;
  auto xym1 = wrd(q, x * y) - one;

  CHECK(ideal_equal({xm1, ym1}, {xm1, ym1, xym1}));
  CHECK(!ideal_equal({xm1}, {ym1}));
  CHECK(ideal_equal({xm1, ym1},
                    {ym1 * Scalar::from_int(q, 5), xm1 * wrd(q, y)}));
  // xy−1 = (x−1)y + (y−1) so it lies in the augmentation ideal
  CHECK(xym1 == xm1 * wrd(q, y) + ym1);
}

TEST_CASE("rank matches the subgroup it came from") {
  auto q = FieldSpec::gf(2);
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);
  auto one = AlgebraElement::one(q, r);
  std::vector<AlgebraElement> jh = {wrd(q, x * x) - one, wrd(q, y) - one,
                                    wrd(q, x * y * x) - one};
  CHECK(ideal_rank(jh) == 3);
  CHECK(ideal_rank({wrd(q, x) - one, wrd(q, y) - one}) == 2);
}

TEST_CASE("canonical output under generator recombination") {
  std::mt19937 rng(41);
  int done = 0;
  for (FieldSpec f : {FieldSpec::gf(2), FieldSpec::gf(3)}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::uniform_int_distribution<int> ngens(2, 4);
      std::vector<AlgebraElement> gens;
      int n = ngens(rng);
      for (int i = 0; i < n; ++i)
        gens.push_back(testutil::random_element(rng, f, 2, 3, 5));

      auto g1 = rosenmann_basis(gens);
      check_invariants(gens, g1);

      // invertible recombination: shuffle, unit-scale, add right multiples
      std::vector<AlgebraElement> mixed = gens;
      std::shuffle(mixed.begin(), mixed.end(), rng);
      for (auto &e : mixed)
        e = e * AlgebraElement::monomial(
                    testutil::random_nonzero_scalar(rng, f),
                    testutil::random_word(rng, 2, 2));
      if (mixed.size() >= 2)
        mixed[0] = mixed[0] +
                   mixed[1] * testutil::random_element(rng, f, 2, 2, 3);

      auto g2 = rosenmann_basis(mixed);
      CHECK(g1.firsts == g2.firsts);
      CHECK(g1.seconds == g2.seconds);
      ++done;
    }
  }
  CHECK(done >= 60);
}

TEST_CASE("transversal words are their own remainders") {
  auto f = FieldSpec::gf(3);
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);
  auto one = AlgebraElement::one(f, r);
  auto g = rosenmann_basis({wrd(f, x * x) - one, wrd(f, y) - wrd(f, x)});
  auto words = testutil::all_words(2, 6);

  std::vector<Word> transversal;
  for (const Word &t : words) {
    bool reducible = false;
    for (const Word &u : g.lpp_set)
      if (u.is_prefix_of(t))
        reducible = true;
    if (!reducible)
      transversal.push_back(t);
  }
  REQUIRE(!transversal.empty());
  for (const Word &t : transversal)
    CHECK(remainder(wrd(f, t), g) == wrd(f, t));

  // the span of the transversal meets the ideal trivially: random
  // combinations reduce to themselves
  std::mt19937 rng(43);
  std::uniform_int_distribution<std::size_t> pick(0, transversal.size() - 1);
  for (int t = 0; t < 50; ++t) {
    AlgebraElement comb = AlgebraElement::zero(f, r);
    for (int i = 0; i < 4; ++i)
      comb.add_term(transversal[pick(rng)], testutil::random_scalar(rng, f));
    CHECK(remainder(comb, g) == comb);
  }
}

TEST_CASE("coefficient extraction round trip") {
  std::mt19937 rng(47);
  auto q = FieldSpec::rationals();
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);
  auto one = AlgebraElement::one(q, r);
  std::vector<std::vector<AlgebraElement>> ideals = {
      {wrd(q, x) - one, wrd(q, y) - one},
      {wrd(q, x * x) - one},
      {wrd(q, x * y) - wrd(q, y * x)},
  };
  int trips = 0;
  for (const auto &gens : ideals) {
    auto g = rosenmann_basis(gens);
    for (int t = 0; t < 70; ++t) {
      std::vector<AlgebraElement> h;
      AlgebraElement f = AlgebraElement::zero(q, r);
      for (std::size_t i = 0; i < g.firsts.size(); ++i) {
        h.push_back(testutil::random_element(rng, q, r, 3, 4));
        f = f + g.firsts[i] * h.back();
      }
      auto [coeffs, rem] = extract_coefficients(g, f);
      CHECK(rem.is_zero());
      CHECK(coeffs == h); // freeness: coefficients are unique
      ++trips;
    }
  }
  CHECK(trips >= 200);
}

TEST_CASE("division identity holds on arbitrary inputs") {
  std::mt19937 rng(53);
  auto f3 = FieldSpec::gf(3);
  int r = 2;
  for (int t = 0; t < 60; ++t) {
    std::vector<AlgebraElement> gens;
    for (int i = 0; i < 2; ++i)
      gens.push_back(testutil::random_nonzero_element(rng, f3, r, 3, 4));
    auto g = rosenmann_basis(gens);
    auto f = testutil::random_element(rng, f3, r, 4, 5);
    auto [coeffs, rem] = extract_coefficients(g, f);
    AlgebraElement recon = rem;
    for (std::size_t i = 0; i < g.firsts.size(); ++i)
      recon = recon + g.firsts[i] * coeffs[i];
    CHECK(recon == f);
    // the remainder is fully reduced
    for (const auto &[w, c] : rem.terms())
      CHECK(!has_lpp_prefix(w, g.lpp_set));
  }
}

TEST_CASE("membership of constructed combinations") {
  std::mt19937 rng(59);
  auto q = FieldSpec::rationals();
  int r = 2;
  for (int t = 0; t < 40; ++t) {
    std::vector<AlgebraElement> gens;
    for (int i = 0; i < 2; ++i)
      gens.push_back(testutil::random_nonzero_element(rng, q, r, 2, 3));
    auto g = rosenmann_basis(gens);
    AlgebraElement comb = AlgebraElement::zero(q, r);
    for (const auto &gen : gens)
      comb = comb + gen * testutil::random_element(rng, q, r, 2, 3);
    CHECK(ideal_membership(g, comb));
  }
}
