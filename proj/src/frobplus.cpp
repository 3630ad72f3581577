#include "amalgam/frobplus.hpp"

#include <random>

#include "amalgam/config.hpp"

namespace amg {

std::string to_string(SymmetryChoice s) { return s == SymmetryChoice::Cyclic ? "cyclic" : "symmetric"; }

namespace {

std::size_t checked_power(std::size_t d, unsigned p) {
  const std::size_t cap = Limits::current().max_tensor_dim;
  std::size_t out = 1;
  for (unsigned k = 0; k < p; ++k) {
    if (d != 0 && out > cap / d)
      throw SizeError("tensor power of dimension " + std::to_string(d) + " to the " + std::to_string(p) +
                      " exceeds the cap " + std::to_string(cap));
    out *= d;
  }
  if (out > cap) throw SizeError("tensor power exceeds the cap " + std::to_string(cap));
  return out;
}

std::vector<std::size_t> digits(std::size_t index, std::size_t d, unsigned p) {
  std::vector<std::size_t> out(p);
  for (unsigned k = p; k-- > 0;) {
    out[k] = index % d;
    index /= d;
  }
  return out;
}

std::size_t undigits(const std::vector<std::size_t>& ds, std::size_t d) {
  std::size_t out = 0;
  for (std::size_t x : ds) out = out * d + x;
  return out;
}

// Matrix of e_{i_0} ⊗ ... ⊗ e_{i_{p-1}} -> the tensor with i_k in position perm[k].
Matrix position_permutation(const Field& field, std::size_t d, unsigned p, const std::vector<unsigned>& perm) {
  const std::size_t n = checked_power(d, p);
  Matrix m(field, n, n);
  for (std::size_t src = 0; src < n; ++src) {
    const auto in = digits(src, d, p);
    std::vector<std::size_t> out(p);
    for (unsigned k = 0; k < p; ++k) out[perm[k]] = in[k];
    m(undigits(out, d), src) = field.one();
  }
  return m;
}

// (phi ⊗ ... ⊗ phi) x, one tensor mode at a time.
Vector apply_tensor_power(const Matrix& phi, const Vector& x, unsigned p) {
  const std::size_t rows = phi.rows(), cols = phi.cols();
  Vector cur = x;
  std::size_t outer = 1;
  std::size_t inner = 1;
  for (unsigned k = 1; k < p; ++k) inner *= cols;
  for (unsigned k = 0; k < p; ++k) {
    Vector next(outer * rows * inner, phi.field().zero());
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t r = 0; r < inner; ++r) {
          const Scalar& v = cur[(o * cols + j) * inner + r];
          if (v.is_zero()) continue;
          for (std::size_t i = 0; i < rows; ++i)
            if (!phi(i, j).is_zero()) next[(o * rows + i) * inner + r] += phi(i, j) * v;
        }
    cur = std::move(next);
    outer *= rows;
    if (k + 1 < p) inner /= cols;
  }
  return cur;
}

Vector basis_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v(n, field.zero());
  v[i] = field.one();
  return v;
}

Vector random_vector(const Field& field, std::size_t n, std::mt19937& rng) {
  const auto elems = field.elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(elems[pick(rng)]);
  return v;
}

// Kernel of the vertically stacked matrices; they are sparse permutation
// differences, so the sparse solver is much faster than dense elimination.
std::vector<Vector> stacked_kernel(const Field& field, const std::vector<Matrix>& blocks) {
  SparseEchelon sys(field, blocks.front().cols());
  for (const Matrix& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i) {
      SparseEchelon::SparseRow row;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(i, j).is_zero()) row.emplace_back(j, b(i, j));
      if (!row.empty()) sys.add_row(std::move(row));
    }
  return sys.kernel_basis();
}

Vector flatten(const Matrix& m) {
  Vector out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

}  // namespace

Matrix cyclic_shift(const Field& field, std::size_t d, unsigned p) {
  std::vector<unsigned> perm(p);
  for (unsigned k = 0; k < p; ++k) perm[k] = (k + 1) % p;
  return position_permutation(field, d, p, perm);
}

TensorPowerAction tensor_power_action(const Field& field, std::size_t d, SymmetryChoice choice) {
  if (field.characteristic() == 0) throw DomainError("Fr+ needs a field of positive characteristic");
  if (d == 0) throw InputError("Fr+ needs a nonzero representation");
  const unsigned p = field.characteristic();
  TensorPowerAction a{field, d, p, choice, {}};
  if (choice == SymmetryChoice::Cyclic) {
    a.generators.push_back(cyclic_shift(field, d, p));
  } else {
    for (unsigned k = 0; k + 1 < p; ++k) {
      std::vector<unsigned> perm(p);
      for (unsigned t = 0; t < p; ++t) perm[t] = t;
      std::swap(perm[k], perm[k + 1]);
      a.generators.push_back(position_permutation(field, d, p, perm));
    }
  }
  return a;
}

Vector FrPlusSpace::image_coordinates(const Vector& tensor) const {
  const Vector y = projection * tensor;
  Vector m = coordinates * tensor;
  if (image_basis * m != y) throw DomainError("class is not in the image of H^0 -> H_0");
  return m;
}

FrPlusSpace fr_plus_space(const Field& field, std::size_t d, SymmetryChoice choice) {
  FrPlusSpace s;
  s.action = tensor_power_action(field, d, choice);
  const std::size_t n = s.action.tensor_dim();
  const Matrix id = Matrix::identity(field, n);

  std::vector<Matrix> diffs, diffs_t;
  for (const Matrix& g : s.action.generators) {
    diffs.push_back(g - id);
    diffs_t.push_back(diffs.back().transpose());
  }
  s.invariants = stacked_kernel(field, diffs);
  // Rows annihilating every im(g - 1): coordinates on H_0.
  s.projection = Matrix::from_rows(field, stacked_kernel(field, diffs_t));
  if (s.projection.rows() == 0) s.projection = Matrix(field, 0, n);

  const Matrix lifted = Matrix::from_columns(field, n, s.invariants);
  const Matrix classes = s.projection * lifted;
  const auto ech = classes.rref();
  std::vector<Vector> cols;
  for (std::size_t j : ech.pivots) {
    s.image_lifts.push_back(s.invariants[j]);
    cols.push_back(classes.col(j));
  }
  s.image_basis = Matrix::from_columns(field, s.projection.rows(), cols);

  // Independent rows of the image basis give a square invertible block.
  const auto row_pivots = s.image_basis.transpose().rref().pivots;
  Matrix select(field, row_pivots.size(), s.projection.rows());
  for (std::size_t i = 0; i < row_pivots.size(); ++i) select(i, row_pivots[i]) = field.one();
  const auto block_inv = (select * s.image_basis).inverse();
  if (!block_inv) throw Error("image basis has no invertible row block");
  s.coordinates = *block_inv * select * s.projection;
  return s;
}

Vector tensor_power(const Vector& v, unsigned p) {
  if (v.empty()) throw InputError("empty vector");
  const Field f = v.front().field();
  return apply_tensor_power(Matrix::column(f, v), Vector{f.one()}, p);
}

FrPlusResult fr_plus(const Representation& v, SymmetryChoice choice) {
  FrPlusSpace space = fr_plus_space(v.field(), v.dim(), choice);
  const unsigned p = space.action.p;
  std::vector<Matrix> mats;
  mats.reserve(v.matrices().size());
  for (const Matrix& g : v.matrices()) {
    std::vector<Vector> cols;
    for (const Vector& h : space.image_lifts) cols.push_back(space.image_coordinates(apply_tensor_power(g, h, p)));
    mats.push_back(Matrix::from_columns(v.field(), space.dim(), cols));
  }
  Representation action(v.group(), v.field(), std::move(mats));
  return FrPlusResult{std::move(space), std::move(action)};
}

Vector TwistedSpace::from_untwisted(const Vector& v) const {
  if (v.size() != dim) throw InputError("vector has the wrong length");
  Vector out;
  out.reserve(v.size());
  for (const Scalar& c : v) out.push_back(frobenius(c));
  return out;
}

bool TwistedSpace::semilinear_on_basis(const std::vector<Scalar>& scalars) const {
  for (std::size_t i = 0; i < dim; ++i)
    for (const Scalar& lambda : scalars) {
      Vector scaled = basis_vector(field, dim, i);
      scaled[i] = lambda;
      Vector rhs = from_untwisted(basis_vector(field, dim, i));
      for (Scalar& c : rhs) c = frobenius(lambda) * c;
      if (from_untwisted(scaled) != rhs) return false;
    }
  return true;
}

Vector t_map_apply(const FrPlusSpace& space, const Vector& v) {
  if (v.size() != space.action.base_dim) throw InputError("vector has the wrong length");
  return space.image_coordinates(tensor_power(v, space.action.p));
}

TMapReport t_map(const FrPlusSpace& space, unsigned random_samples, unsigned seed) {
  const Field& k = space.action.field;
  const std::size_t d = space.action.base_dim;
  TMapReport r;
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(t_map_apply(space, basis_vector(k, d, i)));
  r.matrix = Matrix::from_columns(k, space.dim(), cols);
  r.bijective = r.matrix.rows() == d && r.matrix.inverse().has_value();

  std::vector<Vector> samples;
  for (std::size_t i = 0; i < d; ++i) samples.push_back(basis_vector(k, d, i));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector v = basis_vector(k, d, i);
      v[j] = k.one();
      samples.push_back(v);
    }
  std::mt19937 rng(seed);
  for (unsigned s = 0; s < random_samples; ++s) samples.push_back(random_vector(k, d, rng));
  r.samples = samples.size();

  const Scalar lambda = k.generator() + k.one();
  Vector prev = samples.front();
  Vector t_prev = t_map_apply(space, prev);
  for (const Vector& v : samples) {
    const Vector tv = t_map_apply(space, v);
    Vector fv;
    for (const Scalar& c : v) fv.push_back(frobenius(c));
    if (r.matrix * fv != tv) r.matches_twisted_matrix = false;

    Vector sum(d, k.zero());
    for (std::size_t i = 0; i < d; ++i) sum[i] = v[i] + prev[i];
    Vector expect(tv.size(), k.zero());
    for (std::size_t i = 0; i < tv.size(); ++i) expect[i] = tv[i] + t_prev[i];
    if (t_map_apply(space, sum) != expect) r.additive = false;

    Vector sv = v;
    for (Scalar& c : sv) c = lambda * c;
    Vector st = tv;
    for (Scalar& c : st) c = frobenius(lambda) * c;
    if (t_map_apply(space, sv) != st) r.semilinear = false;

    prev = v;
    t_prev = tv;
  }
  return r;
}

Matrix fr_plus_morphism(const FrPlusSpace& source, const FrPlusSpace& target, const Matrix& phi) {
  if (phi.cols() != source.action.base_dim || phi.rows() != target.action.base_dim)
    throw InputError("map has the wrong shape for Fr+");
  if (!(phi.field() == source.action.field) || !(phi.field() == target.action.field))
    throw FieldMismatch("map and spaces are over different fields");
  std::vector<Vector> cols;
  for (const Vector& h : source.image_lifts)
    cols.push_back(target.image_coordinates(apply_tensor_power(phi, h, source.action.p)));
  return Matrix::from_columns(phi.field(), target.dim(), cols);
}

Matrix fr_plus_morphism(const FrPlusResult& source, const FrPlusResult& target, const Representation& v,
                        const Representation& w, const Matrix& phi) {
  if (!is_intertwiner(phi, v, w)) throw DomainError("map is not an intertwiner");
  return fr_plus_morphism(source.space, target.space, phi);
}

FaithfulnessReport faithfulness_probe(const Representation& v, const Representation& w, SymmetryChoice choice) {
  const FrPlusResult fv = fr_plus(v, choice);
  const FrPlusResult fw = fr_plus(w, choice);
  const auto homs = hom_space(v, w);
  FaithfulnessReport r;
  r.hom_dim = homs.size();
  r.fr_hom_dim = hom_space(fv.action, fw.action).size();
  std::vector<Vector> flat;
  for (const Matrix& phi : homs) {
    const Matrix img = fr_plus_morphism(fv.space, fw.space, phi);
    if (!is_intertwiner(img, fv.action, fw.action)) r.images_are_intertwiners = false;
    flat.push_back(flatten(img));
  }
  if (!flat.empty()) r.image_rank = Matrix::from_columns(v.field(), flat.front().size(), flat).rank();
  return r;
}

ExactnessReport exactness_probe(const ShortExactSequence& s, SymmetryChoice choice) {
  const std::size_t da = s.a.dim(), dv = s.v.dim(), db = s.b.dim();
  if (!is_intertwiner(s.inclusion, s.a, s.v)) throw DomainError("inclusion is not an intertwiner");
  if (!is_intertwiner(s.quotient, s.v, s.b)) throw DomainError("quotient is not an intertwiner");
  if (s.inclusion.rank() != da) throw DomainError("inclusion is not injective");
  if (s.quotient.rank() != db) throw DomainError("quotient is not surjective");
  if (!(s.quotient * s.inclusion).is_zero() || da + db != dv) throw DomainError("sequence is not exact in the middle");

  const FrPlusResult fa = fr_plus(s.a, choice);
  const FrPlusResult fv = fr_plus(s.v, choice);
  const FrPlusResult fb = fr_plus(s.b, choice);
  const Matrix fi = fr_plus_morphism(fa.space, fv.space, s.inclusion);
  const Matrix fq = fr_plus_morphism(fv.space, fb.space, s.quotient);
  ExactnessReport r;
  r.dim_a = fa.space.dim();
  r.dim_v = fv.space.dim();
  r.dim_b = fb.space.dim();
  const std::size_t ri = fi.rank(), rq = fq.rank();
  r.injective = ri == r.dim_a;
  r.surjective = rq == r.dim_b;
  r.composite_zero = (fq * fi).is_zero();
  r.image_equals_kernel = r.composite_zero && ri == r.dim_v - rq;
  return r;
}

SymmetryComparison compare_symmetry_choices(const Representation& v) {
  const FrPlusResult c = fr_plus(v, SymmetryChoice::Cyclic);
  const FrPlusResult s = fr_plus(v, SymmetryChoice::Symmetric);
  SymmetryComparison r;
  r.cyclic_dim = c.space.dim();
  r.symmetric_dim = s.space.dim();

  // H_0(Z/p) -> H_0(S_p) on the cyclic image.
  std::vector<Vector> cols;
  bool ok = true;
  for (const Vector& h : c.space.image_lifts) {
    const auto sol = s.space.image_basis.solve(s.space.projection * h);
    if (!sol) {
      ok = false;
      break;
    }
    cols.push_back(*sol);
  }
  r.images_coincide = ok && r.cyclic_dim == r.symmetric_dim &&
                      Matrix::from_columns(v.field(), r.symmetric_dim, cols).rank() == r.symmetric_dim;

  const TMapReport tc = t_map(c.space, 0);
  const TMapReport ts = t_map(s.space, 0);
  r.actions_agree = tc.bijective && ts.bijective;
  for (std::size_t g = 0; g < v.matrices().size() && r.actions_agree; ++g) {
    const Matrix tw = frobenius(v.matrices()[g]);
    if (!(c.action(int(g)) * tc.matrix == tc.matrix * tw)) r.actions_agree = false;
    if (!(s.action(int(g)) * ts.matrix == ts.matrix * tw)) r.actions_agree = false;
  }
  return r;
}

}  // namespace amg
