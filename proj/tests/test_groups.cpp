#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace fga;

TEST_CASE("core graph shapes") {
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);

  CoreGraph loop(Subgroup(r, {x}));
  CHECK(loop.vertex_count() == 1);
  CHECK(loop.edge_count() == 1);
  CHECK(loop.rank() == 1);

  CoreGraph two(Subgroup(r, {x * x, y}));
  CHECK(two.vertex_count() == 2);
  CHECK(two.rank() == 2);

  CoreGraph none(Subgroup::trivial(r));
  CHECK(none.vertex_count() == 1);
  CHECK(none.rank() == 0);

  CHECK(subgroup_rank(Subgroup::whole(r)) == 2);
  CHECK(subgroup_rank(Subgroup(r, {x, x * x})) == 1);
}

TEST_CASE("membership and equality through folding") {
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);
  Subgroup h(r, {x * x, y});

  CHECK(subgroup_membership(h, x * x));
  CHECK(!subgroup_membership(h, x));
  CHECK(subgroup_membership(h, y * x * x * y));
  CHECK(subgroup_membership(h, Word(r)));

  CHECK(subgroup_equal(Subgroup::whole(r), Subgroup(r, {x * y, y})));
  CHECK(!subgroup_equal(h, Subgroup::whole(r)));
  CHECK(subgroup_equal(Subgroup(r, {x, y, x * y}), Subgroup::whole(r)));
}

TEST_CASE("membership transfers to the augmentation ideal") {
  std::mt19937 rng(83);
  int agreements = 0;
  for (int t = 0; t < 200; ++t) {
    int r = (t % 2) ? 2 : 3;
    std::vector<Word> gens;
    std::uniform_int_distribution<int> ngens(1, 3);
    int n = ngens(rng);
    for (int i = 0; i < n; ++i) {
      Word w = testutil::random_word(rng, r, 5);
      if (!w.is_identity())
        gens.push_back(w);
    }
    if (gens.empty())
      gens.push_back(Word::generator(r, 1));
    Subgroup h(r, gens);
    Word probe = testutil::random_word(rng, r, 8);

    Submodule jh = augmentation_generators(h);
    auto one = AlgebraElement::one(FieldSpec::gf(2), r);
    bool in_group = subgroup_membership(h, probe);
    bool in_ideal = module_membership(
        jh, AlgebraVector({AlgebraElement::from_word(FieldSpec::gf(2), probe) -
                           one}));
    CHECK(in_group == in_ideal);
    CHECK(subgroup_rank(h) == module_rank(jh));
    ++agreements;
  }
  CHECK(agreements == 200);
}

TEST_CASE("ideal bases coming from subgroups are binomial") {
  std::mt19937 rng(89);
  for (int t = 0; t < 25; ++t) {
    std::vector<Word> gens;
    for (int i = 0; i < 2; ++i) {
      Word w = testutil::random_word(rng, 2, 5);
      if (!w.is_identity())
        gens.push_back(w);
    }
    if (gens.empty())
      continue;
    for (FieldSpec f : {FieldSpec::gf(2), FieldSpec::gf(3)}) {
      Submodule jh = augmentation_generators(Subgroup(2, gens), f);
      if (jh.is_zero())
        continue;
      for (const auto &b : jh.basis()) {
        const AlgebraElement &e = b[0];
        CHECK(e.support_size() == 2);
        // u - v: leading coefficient 1, trailing coefficient -1
        CHECK(leading_coefficient(e).is_one());
        CHECK(e.terms().begin()->second == -Scalar::one(f));
      }
    }
  }
}

TEST_CASE("named closures in the free group of rank two") {
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);
  Word comm = x * y * x.inverse() * y.inverse();
  Subgroup f2 = Subgroup::whole(r);

  Subgroup c1 = group_algebraic_closure(Subgroup(r, {x * x}), f2);
  CHECK(subgroup_equal(c1, Subgroup(r, {x})));

  Subgroup c2 = group_algebraic_closure(Subgroup(r, {x}), f2);
  CHECK(subgroup_equal(c2, Subgroup(r, {x})));

  Subgroup c3 = group_algebraic_closure(Subgroup(r, {comm}), f2);
  CHECK(subgroup_equal(c3, f2));

  Subgroup c4 = group_algebraic_closure(Subgroup::trivial(r), f2);
  CHECK(subgroup_equal(c4, Subgroup::trivial(r)));

  CHECK_THROWS_AS(group_algebraic_closure(f2, Subgroup(r, {x})),
                  precondition_error);
}

TEST_CASE("closures agree across coefficient fields") {
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);
  Word comm = x * y * x.inverse() * y.inverse();
  Subgroup f2 = Subgroup::whole(r);
  for (Subgroup h : {Subgroup(r, {x * x}), Subgroup(r, {comm}),
                     Subgroup(r, {x * x, y}), Subgroup(r, {x * y * x})}) {
    Subgroup a = group_algebraic_closure(h, f2, FieldSpec::gf(2));
    Subgroup b = group_algebraic_closure(h, f2, FieldSpec::gf(3));
    CHECK(subgroup_equal(a, b));
  }
}

TEST_CASE("closure transfers to the algebra side") {
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);
  Subgroup f2 = Subgroup::whole(r);
  for (Subgroup h :
       {Subgroup(r, {x * x}), Subgroup(r, {x * y * x.inverse() * y.inverse()}),
        Subgroup(r, {x * x, y})}) {
    Subgroup l = group_algebraic_closure(h, f2);
    Submodule lhs = augmentation_generators(l);
    Submodule rhs = algebraic_closure(augmentation_generators(h),
                                      augmentation_generators(f2));
    CHECK(module_equal(lhs, rhs));
  }
}

TEST_CASE("freeness and algebraicity predicates") {
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);
  Word comm = x * y * x.inverse() * y.inverse();
  Subgroup f2 = Subgroup::whole(r);

  CHECK(group_is_free_factor(Subgroup(r, {x}), f2));
  CHECK(!group_is_free_factor(Subgroup(r, {x * x}), f2));
  CHECK(group_is_algebraic(Subgroup(r, {x * x, y}), f2));
  CHECK(group_is_algebraic(Subgroup(r, {comm}), f2));
  CHECK(!group_is_algebraic(Subgroup(r, {x}), f2));

  CHECK(word_is_primitive(x * y, f2));
  CHECK(!word_is_primitive(comm, f2));
  CHECK(!word_is_primitive(x * x, f2));
  CHECK_THROWS_AS(word_is_primitive(Word(r), f2), precondition_error);
}

TEST_CASE("freeness transfers between groups and ideals") {
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);
  Subgroup f2 = Subgroup::whole(r);
  for (Subgroup h : {Subgroup(r, {x}), Subgroup(r, {x * x}),
                     Subgroup(r, {x * y}), Subgroup(r, {x * x, y})}) {
    bool group_side = group_is_free_factor(h, f2);
    bool algebra_side = is_free_factor(augmentation_generators(h),
                                       augmentation_generators(f2));
    CHECK(group_side == algebra_side);
  }
}

TEST_CASE("brute-force primitivity oracle") {
  int r = 2;
  Word x = Word::generator(r, 1), y = Word::generator(r, 2);
  CHECK(whitehead_primitivity_oracle(x));
  CHECK(whitehead_primitivity_oracle(x * y));
  CHECK(whitehead_primitivity_oracle(x * y * x));
  CHECK(!whitehead_primitivity_oracle(x * x));
  CHECK(!whitehead_primitivity_oracle(x * y * x.inverse() * y.inverse()));
  CHECK(!whitehead_primitivity_oracle(Word(r)));

  Word z3 = Word::generator(3, 3);
  CHECK(whitehead_primitivity_oracle(z3));

  CHECK_THROWS_AS(
      whitehead_primitivity_oracle(Word::from_letters(2, std::vector<int>(11, 1))),
      budget_error);
  CHECK_THROWS_AS(
      whitehead_primitivity_oracle(Word::from_letters(4, {1, 2, 3, 4})),
      budget_error);
}
