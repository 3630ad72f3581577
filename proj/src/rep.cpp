#include "amalgam/rep.hpp"

#include <queue>
#include <random>

#include "amalgam/presets.hpp"

namespace amg {

// ---------------------------------------------------------------- Representation

Representation::Representation(GroupPtr group, Field field, std::vector<Matrix> matrices)
    : group_(std::move(group)), field_(std::move(field)), matrices_(std::move(matrices)) {
  const FiniteGroup& g = *group_;
  if (static_cast<int>(matrices_.size()) != g.order())
    throw DomainError("representation needs one matrix per group element (" + std::to_string(g.order()) + "), got " +
                      std::to_string(matrices_.size()));
  dim_ = matrices_.front().rows();
  for (const auto& m : matrices_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw DomainError("representation matrices must be square of equal size");
    if (!(m.field() == field_)) throw FieldMismatch("representation matrix over " + m.field().name() + ", expected " + field_.name());
  }
  if (!matrices_[std::size_t(g.identity())].is_identity()) throw DomainError("rho(e) is not the identity");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (!((*this)(a) * (*this)(b) == (*this)(g.mul(a, b))))
        throw DomainError("rho(" + std::to_string(a) + ")rho(" + std::to_string(b) + ") != rho(" +
                          std::to_string(g.mul(a, b)) + ")");
}

Representation Representation::trivial(GroupPtr group, const Field& field, std::size_t dim) {
  std::vector<Matrix> mats(std::size_t(group->order()), Matrix::identity(field, dim));
  return Representation(std::move(group), field, std::move(mats));
}

Representation Representation::from_generators(GroupPtr group, const Field& field, std::size_t dim,
                                               const std::vector<std::pair<int, Matrix>>& generators) {
  const FiniteGroup& g = *group;
  std::vector<std::optional<Matrix>> mats(std::size_t(g.order()));
  mats[std::size_t(g.identity())] = Matrix::identity(field, dim);
  std::queue<int> todo;
  todo.push(g.identity());
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop();
    for (const auto& [gen, m] : generators) {
      if (gen < 0 || gen >= g.order()) throw DomainError("generator index out of range");
      if (m.rows() != dim || m.cols() != dim) throw DomainError("generator matrix has wrong size");
      const int y = g.mul(x, gen);
      if (mats[std::size_t(y)]) continue;
      mats[std::size_t(y)] = *mats[std::size_t(x)] * m;
      todo.push(y);
    }
  }
  std::vector<Matrix> out;
  for (int x = 0; x < g.order(); ++x) {
    if (!mats[std::size_t(x)]) throw DomainError("generators do not generate the group");
    out.push_back(*mats[std::size_t(x)]);
  }
  return Representation(std::move(group), field, std::move(out));
}

Representation Representation::restrict_along(const GroupHom& phi) const {
  std::vector<Matrix> mats;
  for (int h = 0; h < phi.source->order(); ++h) mats.push_back((*this)(phi(h)));
  return Representation(phi.source, field_, std::move(mats));
}

Representation Representation::conjugated(const Matrix& b) const {
  const auto inv = b.inverse();
  if (!inv) throw DomainError("change of basis is not invertible");
  std::vector<Matrix> mats;
  for (const auto& m : matrices_) mats.push_back(*inv * m * b);
  return Representation(group_, field_, std::move(mats));
}

Representation Representation::twisted() const {
  std::vector<Matrix> mats;
  for (const auto& m : matrices_) mats.push_back(frobenius(m));
  return Representation(group_, field_, std::move(mats));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.group() != b.group() && a.group()->table() != b.group()->table())
    throw DomainError("direct sum of representations of different groups");
  std::vector<Matrix> mats;
  for (int g = 0; g < a.group()->order(); ++g) mats.push_back(direct_sum(a(g), b(g)));
  return Representation(a.group(), a.field(), std::move(mats));
}

Representation tensor(const Representation& a, const Representation& b) {
  if (a.group() != b.group() && a.group()->table() != b.group()->table())
    throw DomainError("tensor product of representations of different groups");
  std::vector<Matrix> mats;
  for (int g = 0; g < a.group()->order(); ++g) mats.push_back(kronecker(a(g), b(g)));
  return Representation(a.group(), a.field(), std::move(mats));
}

std::vector<Matrix> intertwiners(const Field& field, std::size_t src_dim, std::size_t dst_dim,
                                 const std::vector<Matrix>& src, const std::vector<Matrix>& dst) {
  if (src.size() != dst.size()) throw DomainError("intertwiner problem needs paired matrices");
  const std::size_t unknowns = dst_dim * src_dim;
  SparseEchelon system(field, unknowns);
  auto var = [&](std::size_t i, std::size_t j) { return i * src_dim + j; };
  for (std::size_t k = 0; k < src.size(); ++k) {
    const Matrix& a = src[k];
    const Matrix& b = dst[k];
    // (X A - B X)_{ij} = sum_l X_{il} A_{lj} - sum_l B_{il} X_{lj}
    for (std::size_t i = 0; i < dst_dim; ++i)
      for (std::size_t j = 0; j < src_dim; ++j) {
        SparseEchelon::SparseRow row;
        for (std::size_t l = 0; l < src_dim; ++l)
          if (!a(l, j).is_zero()) row.emplace_back(var(i, l), a(l, j));
        for (std::size_t l = 0; l < dst_dim; ++l)
          if (!b(i, l).is_zero()) row.emplace_back(var(l, j), -b(i, l));
        system.add_row(std::move(row));
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : system.kernel_basis()) {
    Matrix x(field, dst_dim, src_dim);
    for (std::size_t i = 0; i < dst_dim; ++i)
      for (std::size_t j = 0; j < src_dim; ++j) x(i, j) = v[var(i, j)];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Matrix> hom_space(const Representation& v, const Representation& w) {
  if (v.group() != w.group() && v.group()->table() != w.group()->table())
    throw DomainError("Hom between representations of different groups");
  if (!(v.field() == w.field())) throw FieldMismatch("Hom between representations over different fields");
  return intertwiners(v.field(), v.dim(), w.dim(), v.matrices(), w.matrices());
}

bool is_intertwiner(const Matrix& f, const Representation& v, const Representation& w) {
  if (f.rows() != w.dim() || f.cols() != v.dim()) return false;
  for (int g = 0; g < v.group()->order(); ++g)
    if (!(f * v(g) == w(g) * f)) return false;
  return true;
}

std::optional<Matrix> find_isomorphism(const Representation& v, const Representation& w) {
  if (v.dim() != w.dim()) return std::nullopt;
  const auto basis = hom_space(v, w);
  if (basis.empty()) return std::nullopt;
  for (const auto& f : basis)
    if (f.inverse()) return f;
  std::mt19937 rng(12345);
  const Field& k = v.field();
  for (int trial = 0; trial < 64; ++trial) {
    Matrix f(k, w.dim(), v.dim());
    for (const auto& b : basis) {
      Scalar c = k.is_rational() ? k.from_int(long(rng() % 7) - 3) : k.elements()[rng() % k.size()];
      f = f + b.scaled(c);
    }
    if (f.inverse()) return f;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- triples

void validate_triple(const GluedTriple& t) {
  const AmalgamPresentation& p = *t.presentation;
  if (t.v1.group()->table() != p.g1()->table()) throw DomainError("V1 is not a representation of G1");
  if (t.v2.group()->table() != p.g2()->table()) throw DomainError("V2 is not a representation of G2");
  if (!(t.v1.field() == t.v2.field()) || !(t.c.field() == t.v1.field())) throw FieldMismatch("triple mixes fields");
  if (t.c.rows() != t.v2.dim() || t.c.cols() != t.v1.dim()) throw DomainError("c has the wrong shape");
  if (!t.c.is_square() || !t.c.inverse()) throw DomainError("c is not invertible");
  for (int h = 0; h < p.h()->order(); ++h)
    if (!(t.c * t.v1(p.phi1()(h)) == t.v2(p.phi2()(h)) * t.c))
      throw DomainError("c is not an H-morphism at h = " + std::to_string(h));
}

AmalgamRep::AmalgamRep(PresentationPtr presentation, Representation rho1, Representation rho2)
    : presentation_(std::move(presentation)), rho1_(std::move(rho1)), rho2_(std::move(rho2)) {
  const AmalgamPresentation& p = *presentation_;
  if (rho1_.group()->table() != p.g1()->table() || rho2_.group()->table() != p.g2()->table())
    throw DomainError("factor representations do not match the presentation");
  if (rho1_.dim() != rho2_.dim()) throw DomainError("factor representations have different dimensions");
  if (!(rho1_.field() == rho2_.field())) throw FieldMismatch("factor representations over different fields");
  for (int h = 0; h < p.h()->order(); ++h)
    if (!(rho1_(p.phi1()(h)) == rho2_(p.phi2()(h))))
      throw DomainError("restrictions to H disagree at h = " + std::to_string(h));
}

const Matrix& AmalgamRep::letter(const Letter& l) const {
  presentation_->validate_letter(l);
  return factor(l.factor)(l.element);
}

AmalgamRep glue(const GluedTriple& t) {
  validate_triple(t);
  const Matrix c_inv = *t.c.inverse();
  std::vector<Matrix> mats;
  for (const auto& m : t.v2.matrices()) mats.push_back(c_inv * m * t.c);
  Representation moved(t.v2.group(), t.v2.field(), std::move(mats));
  return AmalgamRep(t.presentation, t.v1, std::move(moved));
}

GluedTriple split(const AmalgamRep& rho) {
  return GluedTriple{rho.presentation(), rho.factor(1), rho.factor(2), Matrix::identity(rho.field(), rho.dim())};
}

bool is_triple_morphism(const GluedTriple& s, const GluedTriple& t, const Matrix& a, const Matrix& b) {
  return is_intertwiner(a, s.v1, t.v1) && is_intertwiner(b, s.v2, t.v2) && b * s.c == t.c * a;
}

std::vector<std::pair<Matrix, Matrix>> fibre_product_homs(const GluedTriple& s, const GluedTriple& t) {
  validate_triple(s);
  validate_triple(t);
  const Field& k = s.v1.field();
  const std::size_t n1 = s.v1.dim(), m1 = t.v1.dim();
  const std::size_t n2 = s.v2.dim(), m2 = t.v2.dim();
  const std::size_t b_offset = m1 * n1;
  SparseEchelon system(k, b_offset + m2 * n2);
  auto a_var = [&](std::size_t i, std::size_t j) { return i * n1 + j; };
  auto b_var = [&](std::size_t i, std::size_t j) { return b_offset + i * n2 + j; };
  auto add_intertwining = [&](const Representation& src, const Representation& dst, std::size_t rows,
                              std::size_t cols, auto var) {
    for (int g = 0; g < src.group()->order(); ++g)
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          SparseEchelon::SparseRow row;
          for (std::size_t l = 0; l < cols; ++l)
            if (!src(g)(l, j).is_zero()) row.emplace_back(var(i, l), src(g)(l, j));
          for (std::size_t l = 0; l < rows; ++l)
            if (!dst(g)(i, l).is_zero()) row.emplace_back(var(l, j), -dst(g)(i, l));
          system.add_row(std::move(row));
        }
  };
  add_intertwining(s.v1, t.v1, m1, n1, a_var);
  add_intertwining(s.v2, t.v2, m2, n2, b_var);
  // b c - c' a = 0, an m2 x n1 condition
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      SparseEchelon::SparseRow row;
      for (std::size_t l = 0; l < n2; ++l)
        if (!s.c(l, j).is_zero()) row.emplace_back(b_var(i, l), s.c(l, j));
      for (std::size_t l = 0; l < m1; ++l)
        if (!t.c(i, l).is_zero()) row.emplace_back(a_var(l, j), -t.c(i, l));
      system.add_row(std::move(row));
    }
  std::vector<std::pair<Matrix, Matrix>> out;
  for (const auto& v : system.kernel_basis()) {
    Matrix a(k, m1, n1), b(k, m2, n2);
    for (std::size_t i = 0; i < m1; ++i)
      for (std::size_t j = 0; j < n1; ++j) a(i, j) = v[a_var(i, j)];
    for (std::size_t i = 0; i < m2; ++i)
      for (std::size_t j = 0; j < n2; ++j) b(i, j) = v[b_var(i, j)];
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

std::vector<Matrix> hom_space(const AmalgamRep& rho, const AmalgamRep& sigma) {
  if (rho.presentation() != sigma.presentation() &&
      (rho.presentation()->g1()->table() != sigma.presentation()->g1()->table() ||
       rho.presentation()->g2()->table() != sigma.presentation()->g2()->table()))
    throw DomainError("Hom between representations of different amalgams");
  std::vector<Matrix> src, dst;
  for (int f = 1; f <= 2; ++f)
    for (int g = 0; g < rho.presentation()->group(f).order(); ++g) {
      src.push_back(rho.factor(f)(g));
      dst.push_back(sigma.factor(f)(g));
    }
  return intertwiners(rho.field(), rho.dim(), sigma.dim(), src, dst);
}

Matrix evaluate_word(const AmalgamRep& rho, const RawWord& w) {
  Matrix acc = Matrix::identity(rho.field(), rho.dim());
  for (const auto& l : w) acc = acc * rho.letter(l);
  return acc;
}

Matrix evaluate_word(const AmalgamRep& rho, const ReducedWord& w) {
  return evaluate_word(rho, rho.presentation()->to_letters(w));
}

// --------------------------------------------------------------- worked examples

GluedTriple va_triple(const Scalar& a) {
  const Field k = a.field();
  if (k.characteristic() == 2) throw DomainError("the V_a family needs characteristic != 2");
  if (a.is_zero() || a.is_one()) throw DomainError("the V_a family needs a not in {0, 1}");
  const auto p = presets::c2_star_c2();
  const Matrix d = Matrix::from_ints(k, {{1, 0}, {0, -1}});
  Matrix basis = Matrix::from_ints(k, {{1, 1}, {1, 0}});
  basis(1, 1) = a;  // columns (1,1) and (1,a)
  const Matrix s2 = basis * d * *basis.inverse();
  auto v1 = Representation::from_generators(p->g1(), k, 2, {{1, d}});
  auto v2 = Representation::from_generators(p->g2(), k, 2, {{1, s2}});
  return GluedTriple{p, std::move(v1), std::move(v2), Matrix::identity(k, 2)};
}

AmalgamRep va_rep(const Scalar& a) { return glue(va_triple(a)); }

AmalgamRep sl2_rep() {
  const Field q = Field::rationals();
  const auto p = presets::z4_star_z6();
  auto r4 = Representation::from_generators(p->g1(), q, 2, {{1, Matrix::from_ints(q, {{0, -1}, {1, 0}})}});
  auto r6 = Representation::from_generators(p->g2(), q, 2, {{1, Matrix::from_ints(q, {{1, -1}, {1, 0}})}});
  return AmalgamRep(p, std::move(r4), std::move(r6));
}

Sl2Certificate sl2_infinite_order_certificate(unsigned max_power) {
  const AmalgamRep rho = sl2_rep();
  const Field q = rho.field();
  const Matrix g4 = rho.letter({1, 1});
  const Matrix g6 = rho.letter({2, 1});
  Sl2Certificate cert;
  cert.product = evaluate_word(rho, RawWord{{1, 1}, {2, 1}});
  cert.trace = cert.product.trace();
  const Matrix id = Matrix::identity(q, 2);
  cert.is_plus_minus_identity = cert.product == id || cert.product == id.scaled(q.from_int(-1));
  // det M = 1 and tr M = 2s with s = +-1 give (M - sI)^2 = 0, so
  // M^k = s^k (I + k s^{-1} N) with N != 0, never I for k >= 1 over Q.
  const bool trace_pm2 = cert.trace == q.from_int(2) || cert.trace == q.from_int(-2);
  if (trace_pm2) {
    const Scalar s = cert.trace / q.from_int(2);
    const Matrix n = cert.product - id.scaled(s);
    cert.unipotent_part_nilpotent = (n * n).is_zero() && !n.is_zero();
  }
  Scalar det = cert.product(0, 0) * cert.product(1, 1) - cert.product(0, 1) * cert.product(1, 0);
  cert.infinite_order = trace_pm2 && det.is_one() && !cert.is_plus_minus_identity && cert.unipotent_part_nilpotent;
  Matrix power = id;
  for (unsigned k = 1; k <= max_power; ++k) {
    power = power * cert.product;
    cert.power_is_identity.push_back(power.is_identity());
  }
  cert.g4_order_4 = g4.pow(4).is_identity() && !g4.pow(2).is_identity();
  cert.g6_order_6 = g6.pow(6).is_identity() && !g6.pow(2).is_identity() && !g6.pow(3).is_identity();
  return cert;
}

}  // namespace amg
