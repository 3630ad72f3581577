#include "doctest.h"

#include <algorithm>
#include <random>

#include "amalgam/presets.hpp"
#include "amalgam/rep.hpp"
#include "amalgam/samples.hpp"
#include "oracles.hpp"

using namespace amg;

namespace {

std::vector<Matrix> letter_matrices(const AmalgamRep& rho) {
  std::vector<Matrix> out;
  for (int f : {1, 2})
    for (const auto& m : rho.factor(f).matrices()) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("representations are validated") {
  const auto c2 = FiniteGroup::cyclic(2);
  const Field q = Field::rationals();
  CHECK_NOTHROW(Representation(c2, q, {Matrix::identity(q, 2), Matrix::from_ints(q, {{0, 1}, {1, 0}})}));
  CHECK_THROWS(Representation(c2, q, {Matrix::identity(q, 2), Matrix::from_ints(q, {{0, 2}, {1, 0}})}));
  CHECK_THROWS(Representation(c2, q, {Matrix::from_ints(q, {{-1}}), Matrix::from_ints(q, {{-1}})}));
  CHECK_THROWS_AS(Representation::from_generators(FiniteGroup::cyclic(3), q, 1, {{1, Matrix::from_ints(q, {{2}})}}),
                  DomainError);
  const auto r = Representation::from_generators(FiniteGroup::cyclic(4), q, 2, {{1, Matrix::from_ints(q, {{0, -1}, {1, 0}})}});
  CHECK(r(2) == Matrix::from_ints(q, {{-1, 0}, {0, -1}}));
}

TEST_CASE("Hom spaces of group representations match an independent solve") {
  for (const Field& f : {Field::finite(2), Field::finite(3), Field::finite(2, 2)}) {
    const auto corpus = samples::rep_corpus("s3", f);
    for (const auto& v : corpus)
      for (const auto& w : corpus) {
        const auto basis = hom_space(v.rep, w.rep);
        CHECK(basis.size() == oracle::intertwiner_dim(f, v.rep.matrices(), w.rep.matrices()));
        for (const auto& m : basis) CHECK(is_intertwiner(m, v.rep, w.rep));
      }
  }
}

TEST_CASE("S3 permutation representation splits exactly away from 3") {
  for (const Field& f : {Field::rationals(), Field::finite(2), Field::finite(5)}) {
    const auto perm = samples::s3_permutation(f);
    CHECK(hom_space(perm, perm).size() == 2);
  }
  const auto p3 = samples::s3_permutation(Field::finite(3));
  CHECK(hom_space(p3, p3).size() == 2);
  const auto triv = Representation::trivial(FiniteGroup::symmetric3(), Field::finite(3));
  // invariants and coinvariants are both lines, but the trivial summand does not split off
  CHECK(hom_space(triv, p3).size() == 1);
  CHECK(hom_space(p3, triv).size() == 1);
  const auto inc = hom_space(triv, p3).front();
  const auto proj = hom_space(p3, triv).front();
  CHECK((proj * inc).is_zero());
}

TEST_CASE("find_isomorphism") {
  const Field f = Field::finite(5);
  std::mt19937 rng(2);
  const auto v = samples::s3_permutation(f);
  const Matrix b = samples::random_invertible(f, 3, rng);
  const auto iso = find_isomorphism(v, v.conjugated(b));
  REQUIRE(iso.has_value());
  CHECK(is_intertwiner(*iso, v, v.conjugated(b)));
  CHECK(iso->inverse().has_value());
  const auto corpus = samples::rep_corpus("s3", f);
  const auto sign = std::find_if(corpus.begin(), corpus.end(), [](const auto& r) { return r.name == "sign"; });
  REQUIRE(sign != corpus.end());
  const auto sign_plus = direct_sum(Representation::trivial(v.group(), f, 2), sign->rep);
  CHECK_FALSE(find_isomorphism(v, sign_plus).has_value());
}

TEST_CASE("gluing and splitting are inverse") {
  for (const auto& p : {presets::c2_star_c2(), presets::c4_amalg_c2_c4()})
    for (const Field& f : {Field::rationals(), Field::finite(5)}) {
      for (const auto& t : samples::sample_triples(p, f, 2, 3, 5)) {
        CHECK_NOTHROW(validate_triple(t));
        const AmalgamRep rho = glue(t);
        const GluedTriple s = split(rho);
        CHECK(is_triple_morphism(s, t, Matrix::identity(f, 2), t.c));
        const AmalgamRep again = glue(s);
        CHECK(letter_matrices(again) == letter_matrices(rho));
        // glued G1 and G2 actions agree on H
        for (int h = 0; h < p->h()->order(); ++h) CHECK(rho.factor(1)(p->phi1()(h)) == rho.factor(2)(p->phi2()(h)));
      }
    }
}

TEST_CASE("Hom dimensions: amalgam, fibre product and oracle agree") {
  for (const auto& p : {presets::c2_star_c2(), presets::c4_amalg_c2_c4(), presets::c2_star_c3()})
    for (const Field& f : {Field::rationals(), Field::finite(5)}) {
      std::vector<GluedTriple> ts;
      for (std::size_t d = 1; d <= 3; ++d)
        for (auto& t : samples::sample_triples(p, f, d, 1, 11 + unsigned(d))) ts.push_back(std::move(t));
      for (const auto& s : ts)
        for (const auto& t : ts) {
          const AmalgamRep a = glue(s), b = glue(t);
          const std::size_t direct = hom_space(a, b).size();
          CHECK(direct == oracle::intertwiner_dim(f, letter_matrices(a), letter_matrices(b)));
          CHECK(direct == fibre_product_homs(s, t).size());
          for (const auto& [x, y] : fibre_product_homs(s, t)) CHECK(is_triple_morphism(s, t, x, y));
        }
    }
}

TEST_CASE("invalid gluing data is rejected") {
  const auto p = presets::c4_amalg_c2_c4();
  const Field q = Field::rationals();
  const auto g1 = Representation::from_generators(p->g1(), q, 2, {{1, Matrix::from_ints(q, {{0, -1}, {1, 0}})}});
  const auto g2 = Representation::from_generators(p->g2(), q, 2, {{1, Matrix::from_ints(q, {{0, 1}, {-1, 0}})}});
  // both send the square to -I, so any invertible c is an H-map
  CHECK_NOTHROW(validate_triple({p, g1, g2, Matrix::from_ints(q, {{1, 2}, {3, 4}})}));
  CHECK_THROWS_AS(validate_triple({p, g1, g2, Matrix::from_ints(q, {{1, 2}, {2, 4}})}), DomainError);
  const auto g3 = Representation::from_generators(p->g2(), q, 2, {{1, Matrix::from_ints(q, {{1, 0}, {0, -1}})}});
  CHECK_THROWS_AS(validate_triple({p, g1, g3, Matrix::identity(q, 2)}), DomainError);
}

TEST_CASE("the V_a family is irreducible and pairwise distinct") {
  for (const Field& f : {Field::rationals(), Field::finite(7)}) {
    const std::vector<long> as = {2, 3, 5};
    for (long a : as)
      for (long b : as) {
        const auto ra = va_rep(f.from_int(a)), rb = va_rep(f.from_int(b));
        const std::size_t expected = a == b ? 1 : 0;
        CHECK(hom_space(ra, rb).size() == expected);
        CHECK(oracle::intertwiner_dim(f, letter_matrices(ra), letter_matrices(rb)) == expected);
      }
  }
  CHECK_THROWS_AS(va_rep(Field::rationals().from_int(1)), DomainError);
  CHECK_THROWS_AS(va_rep(Field::rationals().zero()), DomainError);
  CHECK_THROWS_AS(va_rep(Field::finite(2).one()), DomainError);
}

TEST_CASE("SL2 certificate against direct rational arithmetic") {
  const auto cert = sl2_infinite_order_certificate();
  // (0 -1; 1 0)(1 -1; 1 0) = (-1 0; 1 -1)
  mpq_class m[2][2] = {{-1, 0}, {1, -1}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(cert.product(i, j).rational() == m[i][j]);
  CHECK(cert.trace.rational() == -2);
  CHECK_FALSE(cert.is_plus_minus_identity);
  CHECK(cert.g4_order_4);
  CHECK(cert.g6_order_6);
  CHECK(cert.infinite_order);
  REQUIRE(cert.power_is_identity.size() == 12);
  // M^k = (-1)^k (1 0; -k 1), never I
  mpq_class x[2][2] = {{1, 0}, {0, 1}};
  for (int k = 1; k <= 12; ++k) {
    mpq_class y[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) y[i][j] = x[i][0] * m[0][j] + x[i][1] * m[1][j];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) x[i][j] = y[i][j];
    const bool identity = x[0][0] == 1 && x[1][1] == 1 && x[0][1] == 0 && x[1][0] == 0;
    CHECK(identity == bool(cert.power_is_identity[std::size_t(k - 1)]));
    CHECK(x[1][0] == (k % 2 ? k : -k));
  }
}
