#include "doctest.h"

#include <cstdlib>
#include <random>

#include "amalgam/coherent.hpp"
#include "amalgam/presets.hpp"
#include "amalgam/samples.hpp"
#include "oracles.hpp"

using namespace amg;

namespace {

TruncatedElement random_coherent(const CoherentBasis& b, std::mt19937& rng) {
  const Field& f = b.basis.front().field();
  TruncatedElement out = scale(b.basis.front(), samples::random_scalar(f, rng));
  for (std::size_t k = 1; k < b.basis.size(); ++k) out = add(out, scale(b.basis[k], samples::random_scalar(f, rng)));
  return out;
}

Matrix word_matrix(const AmalgamRep& rho, const RawWord& w) {
  Matrix m = Matrix::identity(rho.field(), rho.dim());
  for (const auto& l : w) m = m * rho.factor(l.factor)(l.element);
  return m;
}

}  // namespace

TEST_CASE("coherent dimension equals cell classes and element counts") {
  struct Case {
    PresentationPtr p;
    int a, b;  // factor orders when H is trivial
  };
  for (const Case& c : {Case{presets::c2_star_c2(), 2, 2}, Case{presets::c2_star_c3(), 2, 3}}) {
    for (int n = 0; n <= 3; ++n) {
      const auto basis = coherent_basis(c.p, n, Field::rationals());
      CHECK(basis.dimension() == oracle::cell_classes(*basis.layout));
      CHECK(basis.dimension() == oracle::free_product_elements(c.a, c.b, n));
    }
  }
  // the dimension does not depend on the field
  for (const Field& f : {Field::finite(2), Field::finite(3, 2)})
    CHECK(coherent_basis(presets::c2_star_c2(), 3, f).dimension() == 7);
}

TEST_CASE("C2 * C2 has dimension 2N + 1") {
  for (int n = 1; n <= 4; ++n) CHECK(coherent_basis(presets::c2_star_c2(), n, Field::rationals()).dimension() == std::size_t(2 * n + 1));
}

TEST_CASE("an amalgam over the whole group collapses") {
  for (int n = 1; n <= 4; ++n) CHECK(coherent_basis(presets::c2_amalg_c2_c2(), n, Field::rationals()).dimension() == 2);
}

TEST_CASE("proper amalgamation: truncation keeps more than the group elements") {
  const auto p = presets::c4_amalg_c2_c4();
  const auto b = coherent_basis(p, 2, Field::rationals());
  CHECK(b.dimension() == oracle::cell_classes(*b.layout));
  CHECK(b.dimension() == 14);
  CHECK(enumerate_reduced_words(*p, 2).size() == 10);
  const auto e = quotient_embedding_check(p, 2, Field::rationals());
  CHECK(e.inclusion_holds);
  CHECK(e.amalgamated_dimension <= e.free_dimension);
}

TEST_CASE("basis elements are coherent and independent") {
  const auto b = coherent_basis(presets::c4_amalg_c2_c4(), 2, Field::finite(3));
  std::vector<Vector> rows;
  for (const auto& f : b.basis) {
    CHECK(check_coherence(f).passes());
    rows.push_back(f.values());
  }
  CHECK(oracle::rank(rows) == b.dimension());
}

TEST_CASE("coherent elements form a subalgebra closed under the antipode") {
  std::mt19937 rng(17);
  for (const auto& p : {presets::c2_star_c2(), presets::c4_amalg_c2_c4()}) {
    const auto b = coherent_basis(p, 3, Field::rationals());
    CHECK(check_coherence(TruncatedElement::unit(b.layout, Field::rationals())).passes());
    for (int trial = 0; trial < 8; ++trial) {
      const auto f = random_coherent(b, rng), g = random_coherent(b, rng);
      CHECK(check_coherence(multiply(f, g)).passes());
      CHECK(check_coherence(add(f, g)).passes());
      const auto s = antipode(f);
      CHECK(check_coherence(s).passes());
      CHECK(antipode(s) == f);
      CHECK(multiply(f, g) == multiply(g, f));
    }
  }
}

TEST_CASE("perturbing one cell breaks coherence with a witness") {
  const auto b = coherent_basis(presets::c2_star_c2(), 2, Field::rationals());
  for (std::size_t cell : {std::size_t(1), std::size_t(5), b.layout->size() - 1}) {
    TruncatedElement f = b.basis.front();
    f.mutable_values()[cell] += Field::rationals().one();
    const auto rep = check_coherence(f);
    REQUIRE_FALSE(rep.passes());
    const auto& w = *rep.first_violation;
    CHECK_FALSE(w.lhs_value == w.rhs_value);
    CHECK(f(w.lhs_word) == w.lhs_value);
    CHECK(f(w.rhs_word) == w.rhs_value);
  }
}

TEST_CASE("H-coherence is a stronger condition than the free-product system") {
  const auto p = presets::c4_amalg_c2_c4();
  const auto free = std::make_shared<const AmalgamPresentation>(p->free_product());
  const auto fb = coherent_basis(free, 2, Field::rationals());
  std::size_t failing = 0;
  for (const auto& f : fb.basis) {
    const TruncatedElement g(std::make_shared<const CellLayout>(p, 2), f.field(), f.values());
    failing += !check_coherence(g).passes();
  }
  CHECK(failing > 0);
}

TEST_CASE("matrix coefficients evaluate matrix products") {
  std::mt19937 rng(8);
  const Field q = Field::rationals();
  const AmalgamRep rho = va_rep(q.from_int(3));
  const auto p = rho.presentation();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const auto f = matrix_coefficient_element(rho, i, j, 4);
      CHECK(f.counit() == (i == j ? q.one() : q.zero()));
      for (int trial = 0; trial < 20; ++trial) {
        RawWord w;
        const std::size_t len = rng() % 5;
        for (std::size_t k = 0; k < len; ++k) w.push_back({1 + int(rng() % 2), int(rng() % 2)});
        CHECK(f(w) == word_matrix(rho, w)(i, j));
      }
      CHECK(check_coherence(f).passes());
      const auto id = hopf_identity_check(f);
      CHECK(id.passes);
      CHECK(id.max_half_length == 2);
      CHECK(representativity_rank(f).rank <= 2);
    }
}

TEST_CASE("comultiplication components and evaluation splits") {
  const Field q = Field::rationals();
  const AmalgamRep rho = va_rep(q.from_int(2));
  const auto f = matrix_coefficient_element(rho, 0, 1, 4);
  const std::vector<int> a = {1, 2}, b = {2};
  const Matrix m = comultiply_component(f, a, b);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 2);
  CHECK(m(3, 1) == f(RawWord{{1, 1}, {2, 1}, {2, 1}}));
  const auto split = evaluation_matrix(f, 2);
  const auto fac = rank_factorization(split.matrix);
  CHECK(fac.left * fac.right == split.matrix);
  CHECK(fac.left.cols() == split.rank);
}

TEST_CASE("evaluation on group elements ignores the chosen word") {
  const Field q = Field::rationals();
  const AmalgamRep rho = va_rep(q.from_int(5));
  const auto f = matrix_coefficient_element(rho, 1, 0, 3);
  const auto p = rho.presentation();
  for (const auto& w : enumerate_reduced_words(*p, 3)) CHECK(evaluation_on_group(f, w) == evaluate_word(rho, w)(1, 0));
  TruncatedElement broken = f;
  broken.mutable_values()[2] += q.one();
  CHECK_THROWS_AS(evaluation_on_group(broken, enumerate_reduced_words(*p, 1).back()), DomainError);
}

TEST_CASE("size caps come from the environment") {
  setenv("AMG_MAX_TRUNCATION", "2", 1);
  CHECK_THROWS_AS(coherent_basis(presets::c2_star_c2(), 3, Field::rationals()), SizeError);
  unsetenv("AMG_MAX_TRUNCATION");
  setenv("AMG_MAX_UNKNOWNS", "50", 1);
  CHECK_THROWS_AS(coherent_basis(presets::z4_star_z6(), 3, Field::rationals()), SizeError);
  unsetenv("AMG_MAX_UNKNOWNS");
  CHECK_NOTHROW(coherent_basis(presets::c2_star_c2(), 3, Field::rationals()));
  CHECK_THROWS_AS(coherent_basis(presets::c2_star_c2(), 5, Field::rationals()), SizeError);
}
