#include "doctest.h"

#include "amalgam/hopf.hpp"

using namespace amg;

TEST_CASE("function algebras are Hopf algebras") {
  for (const Field& f : {Field::rationals(), Field::finite(2), Field::finite(3, 2)})
    for (const auto& g : {FiniteGroup::trivial(), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()}) {
      const FunctionHopfAlgebra a(g, f);
      const auto rep = verify_hopf_axioms(a);
      CHECK(rep.passes());
      CHECK(rep.axioms.size() >= 7);
    }
}

TEST_CASE("structure maps on the delta basis") {
  const auto s3 = FiniteGroup::symmetric3();
  const Field q = Field::rationals();
  const FunctionHopfAlgebra a(s3, q);
  // Δ(δ_g) = Σ_{xy=g} δ_x ⊗ δ_y
  for (int g = 0; g < 6; ++g) {
    const Vector d = a.comultiply(a.delta(g));
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) CHECK(d[std::size_t(x * 6 + y)] == (s3->mul(x, y) == g ? q.one() : q.zero()));
    CHECK(a.counit(a.delta(g)) == (g == s3->identity() ? q.one() : q.zero()));
    CHECK(a.antipode(a.delta(g)) == a.delta(s3->inverse(g)));
    CHECK(a.multiply(a.delta(g), a.delta(g)) == a.delta(g));
  }
  Vector sum(6, q.zero());
  for (int g = 0; g < 6; ++g)
    for (std::size_t k = 0; k < 6; ++k) sum[k] += a.delta(g)[k];
  CHECK(sum == a.unit());
}

TEST_CASE("a corrupted coproduct is caught") {
  const FunctionHopfAlgebra a(FiniteGroup::symmetric3(), Field::rationals());
  const auto broken = a.with_swapped_coproducts(1, 3);
  const auto rep = verify_hopf_axioms(broken);
  CHECK_FALSE(rep.passes());
  bool witnessed = false;
  for (const auto& ax : rep.axioms) witnessed = witnessed || (!ax.passes && ax.witness.has_value());
  CHECK(witnessed);
}

TEST_CASE("dual of a group homomorphism is a Hopf morphism") {
  const auto c2 = FiniteGroup::cyclic(2), c4 = FiniteGroup::cyclic(4);
  const Field f = Field::finite(5);
  const FunctionHopfAlgebra k4(c4, f), k2(c2, f);
  CHECK(check_hopf_morphism({&k4, &k2, dualize_hom(GroupHom{c2, c4, {0, 2}}, f)}).passes());
  CHECK(check_hopf_morphism({&k2, &k4, dualize_hom(GroupHom{c4, c2, {0, 1, 0, 1}}, f)}).passes());
  // a map of sets that is not a homomorphism
  const auto bad = check_hopf_morphism({&k4, &k2, dualize_hom(GroupHom{c2, c4, {0, 1}}, f)});
  CHECK_FALSE(bad.passes());
  CHECK_FALSE(bad.comultiplicative);
}
