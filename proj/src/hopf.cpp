#include "amalgam/hopf.hpp"

namespace amg {

FunctionHopfAlgebra::FunctionHopfAlgebra(GroupPtr group, Field field)
    : group_(std::move(group)),
      field_(std::move(field)),
      comult_(field_, dim() * dim(), dim()),
      counit_(field_, 1, dim()),
      antipode_(field_, dim(), dim()) {
  const FiniteGroup& g = *group_;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) comult_(std::size_t(a * n + b), std::size_t(g.mul(a, b))) = field_.one();
  counit_(0, std::size_t(g.identity())) = field_.one();
  // S(delta_g)(x) = delta_g(x^{-1}), i.e. S(delta_g) = delta_{g^{-1}}
  for (int x = 0; x < n; ++x) antipode_(std::size_t(g.inverse(x)), std::size_t(x)) = field_.one();
}

Vector FunctionHopfAlgebra::delta(int g) const {
  Vector v(dim(), field_.zero());
  v[std::size_t(g)] = field_.one();
  return v;
}

Vector FunctionHopfAlgebra::unit() const { return Vector(dim(), field_.one()); }

Vector FunctionHopfAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector out(dim(), field_.zero());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = a[k] * b[k];
  return out;
}

Vector FunctionHopfAlgebra::comultiply(const Vector& f) const { return comult_ * f; }

Scalar FunctionHopfAlgebra::counit(const Vector& f) const { return (counit_ * f)[0]; }

Vector FunctionHopfAlgebra::antipode(const Vector& f) const { return antipode_ * f; }

FunctionHopfAlgebra FunctionHopfAlgebra::with_swapped_coproducts(int g, int h) const {
  FunctionHopfAlgebra copy = *this;
  for (std::size_t r = 0; r < comult_.rows(); ++r) std::swap(copy.comult_(r, std::size_t(g)), copy.comult_(r, std::size_t(h)));
  return copy;
}

bool HopfAxiomReport::passes() const {
  for (const auto& a : axioms)
    if (!a.passes) return false;
  return true;
}

namespace {

// (id ⊗ M) and (M ⊗ id) on k^{n} ⊗ k^{n}, for M: k^n -> k^m.
Matrix left_id_tensor(const Matrix& m, std::size_t n) { return kronecker(Matrix::identity(m.field(), n), m); }
Matrix right_id_tensor(const Matrix& m, std::size_t n) { return kronecker(m, Matrix::identity(m.field(), n)); }

// Pointwise multiplication k^n ⊗ k^n -> k^n.
Matrix multiplication_map(const Field& k, std::size_t n) {
  Matrix m(k, n, n * n);
  for (std::size_t a = 0; a < n; ++a) m(a, a * n + a) = k.one();
  return m;
}

AxiomResult compare(std::string name, const Matrix& lhs, const Matrix& rhs) {
  AxiomResult r{std::move(name), true, std::nullopt};
  for (std::size_t j = 0; j < lhs.cols() && r.passes; ++j)
    for (std::size_t i = 0; i < lhs.rows(); ++i)
      if (!(lhs(i, j) == rhs(i, j))) {
        r.passes = false;
        r.witness = int(j);
        break;
      }
  return r;
}

}  // namespace

HopfAxiomReport verify_hopf_axioms(const FunctionHopfAlgebra& a) {
  const Field& k = a.field();
  const std::size_t n = a.dim();
  const Matrix& delta = a.comultiplication();
  const Matrix& eps = a.counit_map();
  const Matrix& s = a.antipode_map();
  const Matrix mult = multiplication_map(k, n);
  const Matrix unit = Matrix::column(k, a.unit());  // eta: k -> k^n
  const Matrix id = Matrix::identity(k, n);

  HopfAxiomReport report;
  report.axioms.push_back(
      compare("coassociativity", right_id_tensor(delta, n) * delta, left_id_tensor(delta, n) * delta));
  report.axioms.push_back(compare("left counit", right_id_tensor(eps, n) * delta, id));
  report.axioms.push_back(compare("right counit", left_id_tensor(eps, n) * delta, id));
  report.axioms.push_back(compare("left antipode", mult * right_id_tensor(s, n) * delta, unit * eps));
  report.axioms.push_back(compare("right antipode", mult * left_id_tensor(s, n) * delta, unit * eps));
  report.axioms.push_back(compare("antipode involution", s * s, id));

  // Comultiplication and counit are algebra maps: checked on pairs of deltas.
  AxiomResult multiplicative{"comultiplication multiplicative", true, std::nullopt};
  AxiomResult counit_mult{"counit multiplicative", true, std::nullopt};
  for (int g = 0; g < int(n) && multiplicative.passes; ++g)
    for (int h = 0; h < int(n); ++h) {
      const Vector prod = a.multiply(a.delta(g), a.delta(h));
      const Vector lhs = delta * prod;
      const Vector dg = delta * a.delta(g), dh = delta * a.delta(h);
      Vector rhs(n * n, k.zero());
      for (std::size_t t = 0; t < n * n; ++t) rhs[t] = dg[t] * dh[t];
      if (lhs != rhs) {
        multiplicative.passes = false;
        multiplicative.witness = g;
        break;
      }
      if (!((eps * prod)[0] == (eps * a.delta(g))[0] * (eps * a.delta(h))[0])) {
        counit_mult.passes = false;
        counit_mult.witness = g;
      }
    }
  if (!(delta * a.unit() == Vector(n * n, k.one()))) {
    multiplicative.passes = false;
    multiplicative.witness = -1;
  }
  report.axioms.push_back(multiplicative);
  report.axioms.push_back(counit_mult);
  return report;
}

Matrix dualize_hom(const GroupHom& phi, const Field& field) {
  const std::size_t nh = std::size_t(phi.source->order());
  const std::size_t ng = std::size_t(phi.target->order());
  Matrix m(field, nh, ng);
  // alpha(delta_g) = sum over h with phi(h) = g of delta_h
  for (std::size_t h = 0; h < nh; ++h) m(h, std::size_t(phi(int(h)))) = field.one();
  return m;
}

MorphismReport check_hopf_morphism(const HopfMorphism& hm) {
  const FunctionHopfAlgebra& src = *hm.source;
  const FunctionHopfAlgebra& dst = *hm.target;
  const Matrix& m = hm.map;
  MorphismReport r;
  r.unital = m * src.unit() == dst.unit();
  for (int g = 0; g < int(src.dim()); ++g)
    for (int h = 0; h < int(src.dim()); ++h) {
      const Vector lhs = m * src.multiply(src.delta(g), src.delta(h));
      const Vector rhs = dst.multiply(m * src.delta(g), m * src.delta(h));
      if (lhs != rhs) r.multiplicative = false;
    }
  r.counital = dst.counit_map() * m == src.counit_map();
  r.comultiplicative = dst.comultiplication() * m == kronecker(m, m) * src.comultiplication();
  return r;
}

}  // namespace amg
