#include "amalgam/samples.hpp"

#include <array>

namespace amg::samples {

GroupPtr group(std::string_view name) {
  if (name == "trivial") return FiniteGroup::trivial();
  if (name == "s3") return FiniteGroup::symmetric3();
  if (name == "c2") return FiniteGroup::cyclic(2);
  if (name == "c3") return FiniteGroup::cyclic(3);
  if (name == "c4") return FiniteGroup::cyclic(4);
  if (name == "c6") return FiniteGroup::cyclic(6);
  throw InputError("unknown group '" + std::string(name) + "' (expected trivial, c2, c3, c4, c6 or s3)");
}

Scalar random_scalar(const Field& field, std::mt19937& rng) {
  if (field.is_rational()) return field.from_int(long(rng() % 7) - 3);
  return field.elements()[rng() % field.size()];
}

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, std::mt19937& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(field, rng);
  return m;
}

Matrix random_invertible(const Field& field, std::size_t n, std::mt19937& rng) {
  for (;;) {
    Matrix m = random_matrix(field, n, n, rng);
    if (m.inverse()) return m;
  }
}

namespace {

// S3 elements as images of (0, 1, 2), in the order used by FiniteGroup::symmetric3.
constexpr std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

bool odd(int g) { return g == 1 || g == 2 || g == 5; }

Representation from_blocks(const GroupPtr& g, const Field& k, const std::vector<Matrix>& mats) {
  return Representation(g, k, mats);
}

Representation cyclic_rep(const GroupPtr& g, const Field& k, const Matrix& generator) {
  return Representation::from_generators(g, k, generator.rows(), {{1, generator}});
}

std::vector<Scalar> roots_of_unity(const Field& k, int n) {
  std::vector<Scalar> out;
  if (k.is_rational()) {
    out.push_back(k.one());
    if (n % 2 == 0) out.push_back(k.from_int(-1));
    return out;
  }
  for (const Scalar& z : k.elements())
    if (!z.is_zero() && z.pow(unsigned(n)).is_one()) out.push_back(z);
  return out;
}

// Generator matrices of small representations of C_n.
std::vector<Matrix> cyclic_pieces(const Field& k, int n) {
  std::vector<Matrix> out;
  for (const Scalar& z : roots_of_unity(k, n)) out.push_back(Matrix::from_rows(k, {{z}}));
  if (n == 3) out.push_back(Matrix::from_ints(k, {{0, -1}, {1, -1}}));
  if (n == 4) out.push_back(Matrix::from_ints(k, {{0, -1}, {1, 0}}));
  if (n == 6) out.push_back(Matrix::from_ints(k, {{1, -1}, {1, 0}}));
  if (k.characteristic() != 0 && n % int(k.characteristic()) == 0)
    out.push_back(Matrix::from_ints(k, {{1, 1}, {0, 1}}));
  return out;
}

bool is_cyclic_group(const FiniteGroup& g) {
  if (g.order() == 1) return true;
  return g.element_order(1) == g.order();
}

Representation random_cyclic_rep(const GroupPtr& g, const Field& k, std::size_t dim, std::mt19937& rng) {
  if (g->order() == 1) return Representation::trivial(g, k, dim);
  const auto pieces = cyclic_pieces(k, g->order());
  for (;;) {
    Matrix gen(k, 0, 0);
    bool first = true;
    std::size_t have = 0;
    while (have < dim) {
      const Matrix& p = pieces[rng() % pieces.size()];
      if (have + p.rows() > dim) continue;
      gen = first ? p : direct_sum(gen, p);
      first = false;
      have += p.rows();
    }
    const Matrix b = random_invertible(k, dim, rng);
    const Matrix conj = *b.inverse() * gen * b;
    return cyclic_rep(g, k, conj);
  }
}

}  // namespace

Representation s3_permutation(const Field& field) {
  const GroupPtr g = FiniteGroup::symmetric3();
  std::vector<Matrix> mats;
  for (const auto& perm : kPerms) {
    Matrix m(field, 3, 3);
    for (int x = 0; x < 3; ++x) m(std::size_t(perm[std::size_t(x)]), std::size_t(x)) = field.one();
    mats.push_back(std::move(m));
  }
  return Representation(g, field, std::move(mats));
}

ShortExactSequence s3_permutation_filtration(const Field& field) {
  const Representation perm = s3_permutation(field);
  const Representation triv = Representation::trivial(perm.group(), field, 1);
  const Matrix inc = Matrix::from_ints(field, {{1}, {1}, {1}});
  const Matrix quo = Matrix::from_ints(field, {{1, 0, -1}, {0, 1, -1}});
  const Matrix section = Matrix::from_ints(field, {{1, 0}, {0, 1}, {0, 0}});
  std::vector<Matrix> qm;
  for (const Matrix& m : perm.matrices()) qm.push_back(quo * m * section);
  Representation quotient(perm.group(), field, std::move(qm));
  return ShortExactSequence{triv, perm, std::move(quotient), inc, quo};
}

std::vector<NamedRep> rep_corpus(std::string_view group_name, const Field& field) {
  std::vector<NamedRep> out;
  const Field& k = field;
  if (group_name == "trivial") {
    const GroupPtr g = FiniteGroup::trivial();
    for (std::size_t d = 1; d <= 3; ++d)
      out.push_back({"trivial-" + std::to_string(d), Representation::trivial(g, k, d)});
    return out;
  }
  if (group_name == "c3") {
    const GroupPtr g = FiniteGroup::cyclic(3);
    const Representation triv = Representation::trivial(g, k, 1);
    out.push_back({"trivial", triv});
    std::vector<NamedRep> chars;
    for (const Scalar& z : roots_of_unity(k, 3))
      if (!z.is_one()) chars.push_back({"chi-" + z.serialize(), cyclic_rep(g, k, Matrix::from_rows(k, {{z}}))});
    for (const auto& c : chars) out.push_back(c);
    const Representation rot = cyclic_rep(g, k, Matrix::from_ints(k, {{0, -1}, {1, -1}}));
    out.push_back({"rotation", rot});
    out.push_back({"regular", cyclic_rep(g, k, Matrix::from_ints(k, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}))});
    out.push_back({"trivial+trivial", direct_sum(triv, triv)});
    out.push_back({"trivial+rotation", direct_sum(triv, rot)});
    if (!chars.empty()) out.push_back({"trivial+" + chars.front().name, direct_sum(triv, chars.front().rep)});
    if (k.characteristic() == 3) {
      const Representation j2 = cyclic_rep(g, k, Matrix::from_ints(k, {{1, 1}, {0, 1}}));
      out.push_back({"jordan-2", j2});
      out.push_back({"trivial+jordan-2", direct_sum(triv, j2)});
    }
    return out;
  }
  if (group_name == "s3") {
    const GroupPtr g = FiniteGroup::symmetric3();
    const Representation triv = Representation::trivial(g, k, 1);
    std::vector<Matrix> sign_m;
    for (int e = 0; e < 6; ++e) sign_m.push_back(Matrix::from_ints(k, {{odd(e) ? -1 : 1}}));
    const Representation sign = from_blocks(g, k, sign_m);
    const Representation perm = s3_permutation(k);
    // sum-zero subspace, basis e0 - e2, e1 - e2; coordinates are the first two entries
    const Matrix basis = Matrix::from_ints(k, {{1, 0}, {0, 1}, {-1, -1}});
    const Matrix first_two = Matrix::from_ints(k, {{1, 0, 0}, {0, 1, 0}});
    std::vector<Matrix> std_m;
    for (const Matrix& m : perm.matrices()) std_m.push_back(first_two * m * basis);
    const Representation sum_zero = from_blocks(g, k, std_m);
    const Representation quotient = s3_permutation_filtration(k).b;
    out.push_back({"trivial", triv});
    if (k.characteristic() != 2) out.push_back({"sign", sign});
    out.push_back({"permutation", perm});
    out.push_back({"sum-zero", sum_zero});
    out.push_back({"quotient", quotient});
    out.push_back({"trivial+trivial", direct_sum(triv, triv)});
    if (k.characteristic() != 2) out.push_back({"trivial+sign", direct_sum(triv, sign)});
    out.push_back({"trivial+sum-zero", direct_sum(triv, sum_zero)});
    if (k.characteristic() != 2) out.push_back({"sign+sum-zero", direct_sum(sign, sum_zero)});
    return out;
  }
  throw InputError("no representation corpus for group '" + std::string(group_name) + "'");
}

std::vector<GluedTriple> sample_triples(const PresentationPtr& p, const Field& field, std::size_t dim,
                                        std::size_t count, unsigned seed) {
  if (!is_cyclic_group(*p->g1()) || !is_cyclic_group(*p->g2()))
    throw DomainError("triple sampling needs cyclic factors generated by element 1");
  std::mt19937 rng(seed);
  std::vector<GluedTriple> out;
  for (int attempt = 0; out.size() < count; ++attempt) {
    if (attempt > int(200 * count)) throw Error("could not sample enough gluing triples");
    Representation v1 = random_cyclic_rep(p->g1(), field, dim, rng);
    Representation v2 = random_cyclic_rep(p->g2(), field, dim, rng);
    const auto basis = hom_space(v1.restrict_along(p->phi(1)), v2.restrict_along(p->phi(2)));
    if (basis.empty()) continue;
    for (int trial = 0; trial < 20; ++trial) {
      Matrix c(field, dim, dim);
      for (const Matrix& b : basis) c = c + b.scaled(random_scalar(field, rng));
      if (!c.inverse()) continue;
      GluedTriple t{p, v1, v2, c};
      validate_triple(t);
      out.push_back(std::move(t));
      break;
    }
  }
  return out;
}

std::vector<GluingData> sample_gluings(const Cover& cover, int base, const Field& field, std::size_t rank,
                                       std::size_t count, unsigned seed) {
  if (!cover.u12) throw DomainError("gluing needs a nonempty intersection");
  const Pi1Presentation p1 = pi1_presentation(cover.u1.poset, cover.u1.local(base));
  const Pi1Presentation p2 = pi1_presentation(cover.u2.poset, cover.u2.local(base));
  std::vector<int> in1, in2;
  for (int x : cover.intersection) {
    in1.push_back(cover.u1.local(x));
    in2.push_back(cover.u2.local(x));
  }
  const OpenSet w1 = open_subset(cover.u1.poset, in1);
  const OpenSet w2 = open_subset(cover.u2.poset, in2);
  const int b12 = cover.u12->local(base);

  std::mt19937 rng(seed);
  std::vector<GluingData> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Matrix> loops1, loops2;
    for (std::size_t g = 0; g < p1.generators.size(); ++g) loops1.push_back(random_invertible(field, rank, rng));
    for (std::size_t g = 0; g < p2.generators.size(); ++g) loops2.push_back(random_invertible(field, rank, rng));
    LocalSystem l1 = local_system_from_monodromy(p1, field, rank, loops1);
    LocalSystem l2 = local_system_from_monodromy(p2, field, rank, loops2);
    const Matrix c0 = random_invertible(field, rank, rng);
    LocalMorphism c = extend_isomorphism(restrict(l1, w1), restrict(l2, w2), b12, c0);
    out.push_back(GluingData{std::move(l1), std::move(l2), std::move(c)});
  }
  return out;
}

std::vector<std::vector<Matrix>> sample_loop_tuples(const Field& field, std::size_t generators, std::size_t rank,
                                                    std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::vector<Matrix>> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Matrix> t;
    for (std::size_t g = 0; g < generators; ++g) t.push_back(random_invertible(field, rank, rng));
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace amg::samples
