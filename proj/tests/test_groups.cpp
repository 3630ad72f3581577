#include "doctest.h"

#include <random>
#include <set>

#include "amalgam/groups.hpp"
#include "amalgam/presets.hpp"
#include "oracles.hpp"

using namespace amg;

namespace {

RawWord random_word(const AmalgamPresentation& p, std::size_t len, std::mt19937& rng) {
  RawWord w;
  for (std::size_t k = 0; k < len; ++k) {
    const int f = 1 + int(rng() % 2);
    w.push_back({f, int(rng() % unsigned(p.group(f).order()))});
  }
  return w;
}

int product_in(const FiniteGroup& g, const RawWord& w, int factor) {
  int x = g.identity();
  for (const auto& l : w)
    if (l.factor == factor) x = g.mul(x, l.element);
  return x;
}

}  // namespace

TEST_CASE("built-in groups satisfy the axioms") {
  for (const auto& g : {FiniteGroup::trivial(), FiniteGroup::cyclic(4), FiniteGroup::cyclic(6), FiniteGroup::symmetric3()}) {
    const int n = g->order();
    for (int a = 0; a < n; ++a) {
      CHECK(g->mul(a, g->inverse(a)) == g->identity());
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
    }
  }
  const auto s3 = FiniteGroup::symmetric3();
  CHECK(s3->element_order(1) == 2);
  CHECK(s3->element_order(3) == 3);
  CHECK(s3->mul(1, 2) != s3->mul(2, 1));
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), InputError);        // not a Latin square
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2}, {1, 0, 2}}), InputError);  // not square
  // Latin square without associativity
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
                  InputError);
}

TEST_CASE("homomorphism checks find a witness") {
  const auto c4 = FiniteGroup::cyclic(4), c2 = FiniteGroup::cyclic(2);
  CHECK(check_hom(GroupHom{c4, c2, {0, 1, 0, 1}}).passes);
  CHECK(check_hom(GroupHom{c2, c4, {0, 2}}).passes);
  const auto bad = check_hom(GroupHom{c2, c4, {0, 1}});
  CHECK_FALSE(bad.passes);
  CHECK(bad.witness.has_value());
  CHECK_FALSE(check_hom(GroupHom{c2, c4, {1, 3}}).passes);
  CHECK(GroupHom{c2, c4, {0, 2}}.injective());
  CHECK_FALSE(GroupHom{c4, c2, {0, 1, 0, 1}}.injective());
}

TEST_CASE("amalgam presentations reject non-homomorphisms") {
  const auto c2 = FiniteGroup::cyclic(2), c4 = FiniteGroup::cyclic(4);
  CHECK_THROWS(AmalgamPresentation(GroupHom{c2, c4, {0, 1}}, GroupHom{c2, c4, {0, 2}}));
  CHECK_THROWS(AmalgamPresentation(GroupHom{c2, c4, {0, 2}}, GroupHom{FiniteGroup::cyclic(3), c4, {0, 0, 0}}));
}

TEST_CASE("reduced words: counts match a rewriting oracle") {
  const auto p = presets::c2_star_c2();
  for (int n = 0; n <= 5; ++n)
    CHECK(enumerate_reduced_words(*p, n).size() == oracle::free_product_elements(2, 2, n));
  const auto q = presets::c2_star_c3();
  for (int n = 0; n <= 4; ++n)
    CHECK(enumerate_reduced_words(*q, n).size() == oracle::free_product_elements(2, 3, n));
  const auto z = presets::z4_star_z6();
  CHECK(enumerate_reduced_words(*z, 3).size() == oracle::free_product_elements(4, 6, 3));
}

TEST_CASE("normal forms: multiplication is associative with inverses") {
  std::mt19937 rng(21);
  for (const auto& p : {presets::c2_star_c2(), presets::c4_amalg_c2_c4(), presets::c2_star_c3()}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = p->normal_form(random_word(*p, rng() % 5, rng));
      const auto b = p->normal_form(random_word(*p, rng() % 5, rng));
      const auto c = p->normal_form(random_word(*p, rng() % 5, rng));
      CHECK(p->multiply(p->multiply(a, b), c) == p->multiply(a, p->multiply(b, c)));
      const auto e = p->normal_form(RawWord{});
      CHECK(p->multiply(a, p->inverse(a)) == e);
      CHECK(p->normal_form(p->to_letters(a)) == a);
      CHECK(p->length(a) == p->to_letters(a).size());
    }
  }
}

TEST_CASE("normal forms agree with a quotient map to an abelian image") {
  // C4 *_C2 C4 maps onto C4 x C4 / diag(C2); the letters of each factor
  // multiply independently, so equal normal forms give equal images.
  std::mt19937 rng(4);
  const auto p = presets::c4_amalg_c2_c4();
  for (int trial = 0; trial < 80; ++trial) {
    const RawWord u = random_word(*p, rng() % 6, rng), v = random_word(*p, rng() % 6, rng);
    if (!(p->normal_form(u) == p->normal_form(v))) continue;
    const int x1 = product_in(*p->g1(), u, 1), x2 = product_in(*p->g2(), u, 2);
    const int y1 = product_in(*p->g1(), v, 1), y2 = product_in(*p->g2(), v, 2);
    // (x1, x2) and (y1, y2) differ by (h, h) with h in {0, 2}
    const int d1 = (x1 - y1 + 4) % 4, d2 = (x2 - y2 + 4) % 4;
    CHECK(d1 == d2);
    CHECK(d1 % 2 == 0);
  }
}

TEST_CASE("collapsed amalgam and non-injective maps") {
  const auto p = presets::c2_amalg_c2_c2();
  CHECK(p->has_normal_forms());
  CHECK(enumerate_reduced_words(*p, 4).size() == 2);
  const auto c2 = FiniteGroup::cyclic(2), c4 = FiniteGroup::cyclic(4);
  const AmalgamPresentation q(GroupHom{c4, c2, {0, 1, 0, 1}}, GroupHom::identity(c4));
  CHECK_FALSE(q.has_normal_forms());
  CHECK_THROWS_AS(q.normal_form(RawWord{}), DomainError);
}

TEST_CASE("letters are validated") {
  const auto p = presets::c2_star_c2();
  CHECK_THROWS_AS(p->validate_letter({3, 0}), DomainError);
  CHECK_THROWS_AS(p->validate_letter({1, 2}), DomainError);
  CHECK_NOTHROW(p->validate_letter({2, 1}));
}

TEST_CASE("presets are looked up by name") {
  for (const auto& name : presets::presentation_names()) CHECK(presets::presentation(name)->name() == name);
  CHECK_THROWS_AS(presets::presentation("c5-star-c5"), InputError);
}
