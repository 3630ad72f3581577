#include "doctest.h"

#include <cstdlib>
#include <random>

#include "amalgam/frobplus.hpp"
#include "amalgam/samples.hpp"
#include "oracles.hpp"

using namespace amg;

TEST_CASE("tensor power action: sigma has order p and matches kronecker indexing") {
  for (const Field& f : {Field::finite(2), Field::finite(3), Field::finite(5)}) {
    const unsigned p = f.characteristic();
    for (std::size_t d = 1; d <= 2; ++d) {
      const Matrix s = cyclic_shift(f, d, p);
      CHECK(s.pow(p).is_identity());
      if (d > 1) CHECK_FALSE(s.is_identity());
      // sigma (v1 ⊗ ... ⊗ vp) = vp ⊗ v1 ⊗ ...
      std::mt19937 rng(p);
      std::vector<Matrix> vs;
      for (unsigned k = 0; k < p; ++k) vs.push_back(samples::random_matrix(f, d, 1, rng));
      Matrix t = vs[0], r = vs[p - 1];
      for (unsigned k = 1; k < p; ++k) t = kronecker(t, vs[k]);
      for (unsigned k = 0; k + 1 < p; ++k) r = kronecker(r, vs[k]);
      CHECK(s * t == r);
    }
  }
  const auto sym = tensor_power_action(Field::finite(3), 2, SymmetryChoice::Symmetric);
  CHECK(sym.generators.size() == 2);
  for (const auto& g : sym.generators) CHECK((g * g).is_identity());
}

TEST_CASE("Fr+ dimension and t injectivity against brute force") {
  for (const auto& [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    const auto brute = oracle::fr_brute(p, d);
    const auto space = fr_plus_space(Field::finite(p), d);
    CHECK(space.dim() == brute.image_dim);
    CHECK(brute.image_dim == d);
    CHECK(brute.t_injective);
    CHECK(t_map(space).bijective);
  }
}

TEST_CASE("coinvariant dimensions count necklaces") {
  // dim H_0(Z/p, V^{⊗p}) = number of orbits of rotations on p-tuples = (d^p - d)/p + d
  for (const auto& [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 3}, {5, 2}, {3, 4}}) {
    std::size_t dp = 1;
    for (unsigned k = 0; k < p; ++k) dp *= d;
    CHECK(fr_plus_space(Field::finite(p), d).coinvariant_dim() == (dp - d) / p + d);
  }
}

TEST_CASE("the t map is additive and p-semilinear") {
  for (const Field& f : {Field::finite(2, 2), Field::finite(3, 2), Field::finite(2, 3), Field::finite(5)}) {
    const auto space = fr_plus_space(f, 2);
    const auto t = t_map(space, 30, 3);
    CHECK(t.bijective);
    CHECK(t.additive);
    CHECK(t.semilinear);
    CHECK(t.matches_twisted_matrix);
    // t(e_i) is the class of e_i^{⊗p}, so t is the identity in its own basis up to Frobenius
    std::mt19937 rng(1);
    for (int k = 0; k < 10; ++k) {
      const Vector v = samples::random_matrix(f, 2, 1, rng).col(0);
      const Scalar lambda = samples::random_scalar(f, rng);
      Vector lv = v;
      for (auto& x : lv) x *= lambda;
      Vector expect = t_map_apply(space, v);
      for (auto& x : expect) x *= lambda.pow(f.characteristic());
      CHECK(t_map_apply(space, lv) == expect);
    }
  }
}

TEST_CASE("Fr+ of a representation is its Frobenius twist") {
  for (const Field& f : {Field::finite(2), Field::finite(2, 2), Field::finite(3)})
    for (const std::string g : {"c3", "s3"})
      for (const auto& nr : samples::rep_corpus(g, f)) {
        const auto fr = fr_plus(nr.rep);
        REQUIRE(fr.space.dim() == nr.rep.dim());
        const auto t = t_map(fr.space, 5);
        const Matrix tinv = *t.matrix.inverse();
        for (int x = 0; x < nr.rep.group()->order(); ++x)
          CHECK(fr.action(x) == t.matrix * frobenius(nr.rep(x)) * tinv);
        // Hom(Fr+ V, V^(1)) contains an isomorphism
        CHECK(find_isomorphism(fr.action, nr.rep.twisted()).has_value());
      }
}

TEST_CASE("Fr+ on morphisms: functorial, additive, p-semilinear") {
  for (const Field& f : {Field::finite(2, 2), Field::finite(3, 2)}) {
    const unsigned p = f.characteristic();
    for (const auto& nr : samples::rep_corpus("c3", f)) {
      const auto fr = fr_plus(nr.rep);
      const auto ends = hom_space(nr.rep, nr.rep);
      for (const auto& phi : ends) {
        const Matrix img = fr_plus_morphism(fr, fr, nr.rep, nr.rep, phi);
        for (const Scalar& lambda : f.elements())
          CHECK(fr_plus_morphism(fr, fr, nr.rep, nr.rep, phi.scaled(lambda)) == img.scaled(lambda.pow(p)));
        for (const auto& psi : ends) {
          const Matrix other = fr_plus_morphism(fr, fr, nr.rep, nr.rep, psi);
          CHECK(fr_plus_morphism(fr, fr, nr.rep, nr.rep, phi * psi) == img * other);
          CHECK(fr_plus_morphism(fr, fr, nr.rep, nr.rep, phi + psi) == img + other);
        }
      }
    }
  }
}

TEST_CASE("a non-intertwiner is refused") {
  const Field f = Field::finite(2);
  const auto v = samples::s3_permutation(f);
  const auto fr = fr_plus(v);
  const Matrix bad = Matrix::from_ints(f, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK_THROWS_AS(fr_plus_morphism(fr, fr, v, v, bad), DomainError);
}

TEST_CASE("exactness of Fr+ on the permutation filtration") {
  for (const Field& f : {Field::finite(2), Field::finite(3), Field::finite(2, 2)}) {
    const auto s = samples::s3_permutation_filtration(f);
    const auto e = exactness_probe(s);
    CHECK(e.exact());
    CHECK(e.dim_a == 1);
    CHECK(e.dim_v == 3);
    CHECK(e.dim_b == 2);
  }
  // a sequence that is not exact is rejected up front
  const Field f = Field::finite(2);
  auto s = samples::s3_permutation_filtration(f);
  s.quotient = Matrix(f, 2, 3);
  CHECK_THROWS_AS(exactness_probe(s), DomainError);
}

TEST_CASE("faithfulness and the two symmetry choices") {
  for (const Field& f : {Field::finite(2), Field::finite(2, 2)}) {
    const auto corpus = samples::rep_corpus("s3", f);
    for (const auto& v : corpus)
      for (const auto& w : corpus) {
        const auto r = faithfulness_probe(v.rep, w.rep);
        CHECK(r.bijective());
        CHECK(r.hom_dim == oracle::intertwiner_dim(f, v.rep.matrices(), w.rep.matrices()));
      }
    for (const auto& v : corpus) {
      const auto c = compare_symmetry_choices(v.rep);
      CHECK(c.images_coincide);
      CHECK(c.actions_agree);
      CHECK(c.cyclic_dim == c.symmetric_dim);
    }
  }
}

TEST_CASE("Fr+ preconditions") {
  CHECK_THROWS_AS(fr_plus_space(Field::rationals(), 2), DomainError);
  CHECK_THROWS_AS(fr_plus_space(Field::finite(2), 0), InputError);
  CHECK_THROWS_AS(fr_plus_space(Field::finite(5), 4), SizeError);  // 4^5 > 256
  setenv("AMG_MAX_TENSOR_DIM", "1024", 1);
  CHECK(fr_plus_space(Field::finite(5), 4).dim() == 4);
  unsetenv("AMG_MAX_TENSOR_DIM");
}

TEST_CASE("twisted space is semilinear") {
  for (const Field& f : {Field::finite(2, 2), Field::finite(3, 2)}) {
    const TwistedSpace tw{f, 3};
    CHECK(tw.semilinear_on_basis(f.elements()));
    const Vector v = {f.generator(), f.one(), f.zero()};
    const Vector w = tw.from_untwisted(v);
    CHECK(w[0] == frobenius(f.generator()));
  }
}
