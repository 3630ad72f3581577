#include "amalgam/topo.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "amalgam/rep.hpp"

namespace amg {

// ---------------------------------------------------------------- posets

FinitePoset::FinitePoset(int size, const std::vector<std::pair<int, int>>& less, std::vector<std::string> names)
    : n_(size), less_(static_cast<std::size_t>(size > 0 ? size * size : 0), 0), names_(std::move(names)) {
  if (size <= 0) throw InputError("poset needs at least one element");
  if (names_.empty())
    for (int x = 0; x < n_; ++x) names_.push_back(std::to_string(x));
  if (int(names_.size()) != n_) throw InputError("poset has " + std::to_string(n_) + " elements but " +
                                                 std::to_string(names_.size()) + " names");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size())
    throw InputError("poset element names are not unique");
  for (auto [x, y] : less) {
    if (x < 0 || y < 0 || x >= n_ || y >= n_)
      throw InputError("order pair (" + std::to_string(x) + ", " + std::to_string(y) + ") out of range");
    if (x == y) throw InputError("order pair (" + std::to_string(x) + ", " + std::to_string(x) + ") is reflexive");
    less_[std::size_t(x * n_ + y)] = 1;
  }
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if (less_[std::size_t(i * n_ + k)])
        for (int j = 0; j < n_; ++j)
          if (less_[std::size_t(k * n_ + j)]) less_[std::size_t(i * n_ + j)] = 1;
  for (int x = 0; x < n_; ++x)
    if (less_[std::size_t(x * n_ + x)]) throw InputError("order relation has a cycle through " + names_[std::size_t(x)]);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      if (!this->less(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n_ && cover; ++z)
        if (this->less(x, z) && this->less(z, y)) cover = false;
      if (cover) covers_.emplace_back(x, y);
    }
}

int FinitePoset::index(const std::string& name) const {
  for (int x = 0; x < n_; ++x)
    if (names_[std::size_t(x)] == name) return x;
  throw InputError("unknown poset element '" + name + "'");
}

bool FinitePoset::is_cover(int x, int y) const {
  return std::binary_search(covers_.begin(), covers_.end(), std::make_pair(x, y));
}

std::vector<std::pair<int, int>> FinitePoset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (less(x, y)) out.emplace_back(x, y);
  return out;
}

int FinitePoset::height() const {
  std::vector<int> h(std::size_t(n_), -1);
  std::function<int(int)> up = [&](int x) {
    if (h[std::size_t(x)] >= 0) return h[std::size_t(x)];
    int best = 0;
    for (int y = 0; y < n_; ++y)
      if (less(x, y)) best = std::max(best, 1 + up(y));
    return h[std::size_t(x)] = best;
  };
  int out = 0;
  for (int x = 0; x < n_; ++x) out = std::max(out, up(x));
  return out;
}

std::vector<int> FinitePoset::up_set(int x) const {
  std::vector<int> out;
  for (int y = 0; y < n_; ++y)
    if (leq(x, y)) out.push_back(y);
  return out;
}

bool FinitePoset::is_open(const std::vector<int>& subset) const {
  std::vector<char> in(std::size_t(n_), 0);
  for (int x : subset) in[std::size_t(x)] = 1;
  for (int x : subset)
    for (int y = 0; y < n_; ++y)
      if (less(x, y) && !in[std::size_t(y)]) return false;
  return true;
}

bool FinitePoset::is_connected(const std::vector<int>& subset) const {
  if (subset.empty()) return false;
  std::vector<char> in(std::size_t(n_), 0), seen(std::size_t(n_), 0);
  for (int x : subset) in[std::size_t(x)] = 1;
  std::deque<int> queue{subset.front()};
  seen[std::size_t(subset.front())] = 1;
  std::size_t count = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y = 0; y < n_; ++y)
      if (in[std::size_t(y)] && !seen[std::size_t(y)] && comparable(x, y)) {
        seen[std::size_t(y)] = 1;
        ++count;
        queue.push_back(y);
      }
  }
  return count == std::set<int>(subset.begin(), subset.end()).size();
}

bool FinitePoset::is_connected() const {
  std::vector<int> all(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) all[std::size_t(x)] = x;
  return is_connected(all);
}

FinitePoset FinitePoset::induced(const std::vector<int>& subset) const {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    names.push_back(names_[std::size_t(subset[i])]);
    for (std::size_t j = 0; j < subset.size(); ++j)
      if (less(subset[i], subset[j])) pairs.emplace_back(int(i), int(j));
  }
  return FinitePoset(int(subset.size()), pairs, names);
}

bool OpenSet::contains(int ambient_index) const {
  return std::binary_search(elements.begin(), elements.end(), ambient_index);
}

int OpenSet::local(int ambient_index) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), ambient_index);
  if (it == elements.end() || *it != ambient_index)
    throw DomainError("point " + ambient->name(ambient_index) + " is outside the open set");
  return int(it - elements.begin());
}

OpenSet open_subset(const PosetPtr& x, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw InputError("open set is empty");
  for (int e : elements)
    if (e < 0 || e >= x->size()) throw InputError("open set element " + std::to_string(e) + " out of range");
  if (!x->is_open(elements)) throw InputError("subset is not up-closed");
  auto induced = std::make_shared<const FinitePoset>(x->induced(elements));
  return OpenSet{x, std::move(elements), std::move(induced)};
}

// ---------------------------------------------------------------- local systems

namespace {

bool invertible(const Matrix& m) { return m.rows() == 0 || m.inverse().has_value(); }

Matrix inverse_of(const Matrix& m) {
  if (m.rows() == 0) return m;
  auto inv = m.inverse();
  if (!inv) throw DomainError("matrix is not invertible");
  return *inv;
}

// Fills table[x*n+y] = composite stalk(y) -> stalk(x) for x <= y; returns the
// first pair with two different composites.
std::optional<std::pair<int, int>> build_transports(const FinitePoset& p, const Field& field, std::size_t rank,
                                                    const std::map<LocalSystem::Key, Matrix>& r,
                                                    std::vector<Matrix>& table) {
  const int n = p.size();
  table.assign(std::size_t(n * n), Matrix());
  std::vector<char> done(std::size_t(n * n), 0);
  std::optional<std::pair<int, int>> violation;
  std::function<const Matrix&(int, int)> get = [&](int x, int y) -> const Matrix& {
    const std::size_t k = std::size_t(x * n + y);
    if (done[k]) return table[k];
    if (x == y) {
      table[k] = Matrix::identity(field, rank);
    } else {
      bool first = true;
      for (const auto& [lo, hi] : p.covers()) {
        if (lo != x || !p.leq(hi, y)) continue;
        Matrix cand = r.at({lo, hi}) * get(hi, y);
        if (first) {
          table[k] = std::move(cand);
          first = false;
        } else if (!(cand == table[k]) && !violation) {
          violation = std::make_pair(x, y);
        }
      }
    }
    done[k] = 1;
    return table[k];
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq(x, y)) get(x, y);
  return violation;
}

void validate_restrictions(const FinitePoset& p, const Field& field, std::size_t rank,
                           const std::map<LocalSystem::Key, Matrix>& r) {
  for (const auto& [key, m] : r) {
    if (!p.is_cover(key.first, key.second))
      throw InputError("restriction given on " + p.name(key.first) + " < " + p.name(key.second) +
                       ", which is not a covering pair");
    if (m.rows() != rank || m.cols() != rank)
      throw InputError("restriction on " + p.name(key.first) + " < " + p.name(key.second) + " is not " +
                       std::to_string(rank) + "x" + std::to_string(rank));
    if (!(m.field() == field)) throw FieldMismatch("restriction matrix over the wrong field");
    if (!invertible(m))
      throw DomainError("restriction on " + p.name(key.first) + " < " + p.name(key.second) + " is not invertible");
  }
  for (const auto& c : p.covers())
    if (!r.count(c))
      throw InputError("missing restriction on " + p.name(c.first) + " < " + p.name(c.second));
}

}  // namespace

LocalSystem::LocalSystem(PosetPtr poset, Field field, std::size_t rank, std::map<Key, Matrix> restrictions)
    : poset_(std::move(poset)), field_(std::move(field)), rank_(rank), restrictions_(std::move(restrictions)) {
  validate_restrictions(*poset_, field_, rank_, restrictions_);
  if (auto v = build_transports(*poset_, field_, rank_, restrictions_, transports_))
    throw DomainError("local system is not functorial: two covering chains from " + poset_->name(v->first) +
                      " to " + poset_->name(v->second) + " give different composites");
}

LocalSystem LocalSystem::constant(PosetPtr poset, const Field& field, std::size_t rank) {
  std::map<Key, Matrix> r;
  for (const auto& c : poset->covers()) r.emplace(c, Matrix::identity(field, rank));
  return LocalSystem(std::move(poset), field, rank, std::move(r));
}

const Matrix& LocalSystem::restriction(int x, int y) const {
  auto it = restrictions_.find({x, y});
  if (it == restrictions_.end()) throw DomainError("not a covering pair");
  return it->second;
}

Matrix LocalSystem::transport(int x, int y) const {
  if (!poset_->leq(x, y)) throw DomainError("transport needs x <= y");
  return transports_[std::size_t(x * poset_->size() + y)];
}

bool LocalSystem::operator==(const LocalSystem& o) const {
  return *poset_ == *o.poset_ && field_ == o.field_ && rank_ == o.rank_ && restrictions_ == o.restrictions_;
}

FunctorialityReport check_functoriality(const FinitePoset& p, std::size_t rank,
                                        const std::map<LocalSystem::Key, Matrix>& restrictions) {
  FunctorialityReport out;
  if (restrictions.empty() && !p.covers().empty()) throw InputError("no restriction matrices");
  const Field field = restrictions.empty() ? Field::rationals() : restrictions.begin()->second.field();
  validate_restrictions(p, field, rank, restrictions);
  std::vector<Matrix> table;
  out.violation = build_transports(p, field, rank, restrictions, table);
  out.passes = !out.violation;
  return out;
}

LocalSystem restrict(const LocalSystem& l, const OpenSet& u) {
  if (!(*u.ambient == *l.poset())) throw DomainError("open set belongs to a different space");
  std::map<LocalSystem::Key, Matrix> r;
  for (const auto& [x, y] : u.poset->covers())
    r.emplace(std::make_pair(x, y), l.restriction(u.elements[std::size_t(x)], u.elements[std::size_t(y)]));
  return LocalSystem(u.poset, l.field(), l.rank(), std::move(r));
}

bool is_morphism(const LocalSystem& l, const LocalSystem& m, const LocalMorphism& f) {
  if (!(*l.poset() == *m.poset()) || f.size() != std::size_t(l.poset()->size())) return false;
  for (const Matrix& fx : f)
    if (fx.rows() != m.rank() || fx.cols() != l.rank()) return false;
  for (const auto& [x, y] : l.poset()->covers())
    if (!(f[std::size_t(x)] * l.restriction(x, y) == m.restriction(x, y) * f[std::size_t(y)])) return false;
  return true;
}

namespace {

// Linear systems whose unknowns are blocks of matrices.
struct Block {
  std::size_t offset, rows, cols;
};

struct Term {
  Matrix left;   // eq_rows x block.rows
  Block block;
  Matrix right;  // block.cols x eq_cols
  bool negate = false;
};

void add_matrix_equation(SparseEchelon& sys, const std::vector<Term>& terms, std::size_t eq_rows,
                         std::size_t eq_cols) {
  for (std::size_t i = 0; i < eq_rows; ++i)
    for (std::size_t j = 0; j < eq_cols; ++j) {
      SparseEchelon::SparseRow row;
      for (const Term& t : terms)
        for (std::size_t k = 0; k < t.block.rows; ++k) {
          if (t.left(i, k).is_zero()) continue;
          for (std::size_t l = 0; l < t.block.cols; ++l) {
            if (t.right(l, j).is_zero()) continue;
            Scalar c = t.left(i, k) * t.right(l, j);
            row.emplace_back(t.block.offset + k * t.block.cols + l, t.negate ? -c : c);
          }
        }
      if (!row.empty()) sys.add_row(std::move(row));
    }
}

Matrix unpack(const Field& f, const Vector& v, const Block& b) {
  Matrix m(f, b.rows, b.cols);
  for (std::size_t k = 0; k < b.rows; ++k)
    for (std::size_t l = 0; l < b.cols; ++l) m(k, l) = v[b.offset + k * b.cols + l];
  return m;
}

std::vector<Block> point_blocks(std::size_t points, std::size_t rows, std::size_t cols, std::size_t start) {
  std::vector<Block> out;
  for (std::size_t x = 0; x < points; ++x) out.push_back({start + x * rows * cols, rows, cols});
  return out;
}

void add_morphism_equations(SparseEchelon& sys, const LocalSystem& l, const LocalSystem& m,
                            const std::vector<Block>& blocks) {
  const Matrix il = Matrix::identity(l.field(), l.rank());
  const Matrix im = Matrix::identity(l.field(), m.rank());
  for (const auto& [x, y] : l.poset()->covers()) {
    // f_x R_L - R_M f_y = 0
    add_matrix_equation(sys,
                        {Term{im, blocks[std::size_t(x)], l.restriction(x, y), false},
                         Term{m.restriction(x, y), blocks[std::size_t(y)], il, true}},
                        m.rank(), l.rank());
  }
}

}  // namespace

std::vector<LocalMorphism> hom_space(const LocalSystem& l, const LocalSystem& m) {
  if (!(*l.poset() == *m.poset())) throw DomainError("Hom between local systems on different spaces");
  if (!(l.field() == m.field())) throw FieldMismatch("Hom between local systems over different fields");
  const std::size_t n = std::size_t(l.poset()->size());
  const std::size_t cell = l.rank() * m.rank();
  if (cell == 0) return {};
  const auto blocks = point_blocks(n, m.rank(), l.rank(), 0);
  SparseEchelon sys(l.field(), n * cell);
  add_morphism_equations(sys, l, m, blocks);
  std::vector<LocalMorphism> out;
  for (const Vector& v : sys.kernel_basis()) {
    LocalMorphism f;
    for (const Block& b : blocks) f.push_back(unpack(l.field(), v, b));
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------- covers and gluing

Cover make_cover(const PosetPtr& x, std::vector<int> u1, std::vector<int> u2) {
  Cover c{x, open_subset(x, std::move(u1)), open_subset(x, std::move(u2)), {}, std::nullopt};
  std::set<int> all(c.u1.elements.begin(), c.u1.elements.end());
  all.insert(c.u2.elements.begin(), c.u2.elements.end());
  if (int(all.size()) != x->size()) throw InputError("open sets do not cover the space");
  std::set_intersection(c.u1.elements.begin(), c.u1.elements.end(), c.u2.elements.begin(), c.u2.elements.end(),
                        std::back_inserter(c.intersection));
  if (!c.intersection.empty()) c.u12 = open_subset(x, c.intersection);
  c.space_connected = x->is_connected();
  c.u1_connected = x->is_connected(c.u1.elements);
  c.u2_connected = x->is_connected(c.u2.elements);
  c.intersection_connected = !c.intersection.empty() && x->is_connected(c.intersection);
  return c;
}

void validate_gluing(const Cover& cover, const GluingData& g) {
  if (!(*g.l1.poset() == *cover.u1.poset)) throw DomainError("first system does not live on U1");
  if (!(*g.l2.poset() == *cover.u2.poset)) throw DomainError("second system does not live on U2");
  if (!(g.l1.field() == g.l2.field())) throw FieldMismatch("gluing systems over different fields");
  if (g.l1.rank() != g.l2.rank()) throw DomainError("gluing systems of different rank");
  if (g.c.size() != cover.intersection.size()) throw DomainError("gluing map needs one matrix per point of U1 ∩ U2");
  const std::size_t r = g.l1.rank();
  for (std::size_t k = 0; k < g.c.size(); ++k) {
    const Matrix& ck = g.c[k];
    if (ck.rows() != r || ck.cols() != r || !(ck.field() == g.l1.field()))
      throw DomainError("gluing matrix at " + cover.space->name(cover.intersection[k]) + " has the wrong shape");
    if (!invertible(ck))
      throw DomainError("gluing matrix at " + cover.space->name(cover.intersection[k]) + " is not invertible");
  }
  if (!cover.u12) return;
  for (const auto& [x, y] : cover.u12->poset->covers()) {
    const int ax = cover.intersection[std::size_t(x)], ay = cover.intersection[std::size_t(y)];
    const Matrix lhs = g.c[std::size_t(x)] * g.l1.restriction(cover.u1.local(ax), cover.u1.local(ay));
    const Matrix rhs = g.l2.restriction(cover.u2.local(ax), cover.u2.local(ay)) * g.c[std::size_t(y)];
    if (!(lhs == rhs))
      throw DomainError("gluing map does not commute with restriction on " + cover.space->name(ax) + " < " +
                        cover.space->name(ay));
  }
}

LocalSystem glue(const Cover& cover, const GluingData& g) {
  validate_gluing(cover, g);
  std::map<LocalSystem::Key, Matrix> r;
  for (const auto& [x, y] : cover.space->covers()) {
    Matrix m;
    if (cover.u1.contains(x)) {
      m = g.l1.restriction(cover.u1.local(x), cover.u1.local(y));
    } else {
      m = g.l2.restriction(cover.u2.local(x), cover.u2.local(y));
      if (cover.u1.contains(y)) m = m * g.c[std::size_t(cover.u12->local(y))];
    }
    r.emplace(std::make_pair(x, y), std::move(m));
  }
  return LocalSystem(cover.space, g.l1.field(), g.l1.rank(), std::move(r));
}

GluingData split(const Cover& cover, const LocalSystem& l) {
  std::vector<Matrix> c(cover.intersection.size(), Matrix::identity(l.field(), l.rank()));
  return GluingData{restrict(l, cover.u1), restrict(l, cover.u2), std::move(c)};
}

bool is_gluing_morphism(const Cover& cover, const GluingData& s, const GluingData& t, const LocalMorphism& a,
                        const LocalMorphism& b) {
  if (!is_morphism(s.l1, t.l1, a) || !is_morphism(s.l2, t.l2, b)) return false;
  for (std::size_t k = 0; k < cover.intersection.size(); ++k) {
    const int z = cover.intersection[k];
    if (!(t.c[k] * a[std::size_t(cover.u1.local(z))] == b[std::size_t(cover.u2.local(z))] * s.c[k])) return false;
  }
  return true;
}

std::pair<LocalMorphism, LocalMorphism> gluing_witness(const Cover& cover, const GluingData& g) {
  const Matrix id = Matrix::identity(g.l1.field(), g.l1.rank());
  LocalMorphism a(cover.u1.elements.size(), id);
  LocalMorphism b;
  for (int x : cover.u2.elements)
    b.push_back(cover.u1.contains(x) ? g.c[std::size_t(cover.u12->local(x))] : id);
  return {std::move(a), std::move(b)};
}

std::vector<std::pair<LocalMorphism, LocalMorphism>> fibre_product_homs(const Cover& cover, const GluingData& s,
                                                                        const GluingData& t) {
  validate_gluing(cover, s);
  validate_gluing(cover, t);
  if (!(s.l1.field() == t.l1.field())) throw FieldMismatch("Hom between gluing data over different fields");
  const Field& k = s.l1.field();
  const std::size_t rs = s.l1.rank(), rt = t.l1.rank();
  const std::size_t n1 = cover.u1.elements.size(), n2 = cover.u2.elements.size();
  if (rs * rt == 0) return {};
  const auto a_blocks = point_blocks(n1, rt, rs, 0);
  const auto b_blocks = point_blocks(n2, rt, rs, n1 * rt * rs);
  SparseEchelon sys(k, (n1 + n2) * rt * rs);
  add_morphism_equations(sys, s.l1, t.l1, a_blocks);
  add_morphism_equations(sys, s.l2, t.l2, b_blocks);
  const Matrix is = Matrix::identity(k, rs), it = Matrix::identity(k, rt);
  for (std::size_t z = 0; z < cover.intersection.size(); ++z) {
    const int x = cover.intersection[z];
    // c_t a_x - b_x c_s = 0
    add_matrix_equation(sys,
                        {Term{t.c[z], a_blocks[std::size_t(cover.u1.local(x))], is, false},
                         Term{it, b_blocks[std::size_t(cover.u2.local(x))], s.c[z], true}},
                        rt, rs);
  }
  std::vector<std::pair<LocalMorphism, LocalMorphism>> out;
  for (const Vector& v : sys.kernel_basis()) {
    LocalMorphism a, b;
    for (const Block& blk : a_blocks) a.push_back(unpack(k, v, blk));
    for (const Block& blk : b_blocks) b.push_back(unpack(k, v, blk));
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

// ---------------------------------------------------------------- pi_1 and monodromy

std::vector<int> Pi1Presentation::tree_path(int v) const {
  std::vector<int> path{v};
  while (path.back() != base) {
    const int p = parent[std::size_t(path.back())];
    if (p < 0) throw DomainError("point is not reachable from the base point");
    path.push_back(p);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> Pi1Presentation::generator_loop(std::size_t g) const {
  const auto [lo, hi] = generators.at(g);
  std::vector<int> path = tree_path(lo);
  std::vector<int> back = tree_path(hi);
  std::reverse(back.begin(), back.end());
  path.insert(path.end(), back.begin(), back.end());
  return path;
}

GroupWord Pi1Presentation::path_word(const std::vector<int>& path) const {
  GroupWord w;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int u = path[i], v = path[i + 1];
    if (u == v) continue;
    if (!poset->comparable(u, v))
      throw DomainError("path steps between incomparable points " + poset->name(u) + " and " + poset->name(v));
    const auto edge = poset->less(u, v) ? std::make_pair(u, v) : std::make_pair(v, u);
    auto it = std::find(generators.begin(), generators.end(), edge);
    if (it == generators.end()) continue;
    w.emplace_back(int(it - generators.begin()), poset->less(u, v) ? 1 : -1);
  }
  return w;
}

Pi1Presentation pi1_presentation(const PosetPtr& p, int base, TreeChoice tree) {
  if (base < 0 || base >= p->size()) throw InputError("base point out of range");
  if (!p->is_connected()) throw DomainError("pi_1 presentation needs a connected space");
  const int n = p->size();
  Pi1Presentation out;
  out.poset = p;
  out.base = base;
  out.parent.assign(std::size_t(n), -1);

  auto neighbours = [&](int x) {
    std::vector<int> nb;
    for (int y = 0; y < n; ++y)
      if (p->comparable(x, y)) nb.push_back(y);
    if (tree.reverse_neighbours) std::reverse(nb.begin(), nb.end());
    return nb;
  };
  std::vector<char> seen(std::size_t(n), 0);
  seen[std::size_t(base)] = 1;
  if (tree.strategy == TreeChoice::Strategy::BreadthFirst) {
    std::deque<int> queue{base};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : neighbours(x))
        if (!seen[std::size_t(y)]) {
          seen[std::size_t(y)] = 1;
          out.parent[std::size_t(y)] = x;
          queue.push_back(y);
        }
    }
  } else {
    std::function<void(int)> visit = [&](int x) {
      for (int y : neighbours(x))
        if (!seen[std::size_t(y)]) {
          seen[std::size_t(y)] = 1;
          out.parent[std::size_t(y)] = x;
          visit(y);
        }
    };
    visit(base);
  }

  std::set<std::pair<int, int>> tree_set;
  for (int y = 0; y < n; ++y) {
    const int x = out.parent[std::size_t(y)];
    if (x < 0) continue;
    tree_set.insert(p->less(x, y) ? std::make_pair(x, y) : std::make_pair(y, x));
  }
  out.tree_edges.assign(tree_set.begin(), tree_set.end());
  for (const auto& e : p->strict_pairs())
    if (!tree_set.count(e)) out.generators.push_back(e);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!p->less(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (p->less(y, z)) {
          out.chains.push_back({x, y, z});
          out.relators.push_back(out.path_word({x, y, z, x}));
        }
    }
  return out;
}

Matrix transport_along(const LocalSystem& l, const std::vector<int>& path) {
  Matrix m = Matrix::identity(l.field(), l.rank());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int u = path[i], v = path[i + 1];
    if (u == v) continue;
    if (l.poset()->less(u, v))
      m = inverse_of(l.transport(u, v)) * m;
    else if (l.poset()->less(v, u))
      m = l.transport(v, u) * m;
    else
      throw DomainError("path steps between incomparable points");
  }
  return m;
}

Matrix evaluate_word(const Field& field, std::size_t rank, const std::vector<Matrix>& loops, const GroupWord& w) {
  Matrix m = Matrix::identity(field, rank);
  for (const auto& [g, e] : w) {
    const Matrix& step = loops.at(std::size_t(g));
    m = (e > 0 ? step : inverse_of(step)) * m;
  }
  return m;
}

MonodromyReport monodromy(const LocalSystem& l, int base, TreeChoice tree) {
  MonodromyReport r{pi1_presentation(l.poset(), base, tree), {}, true, std::nullopt};
  for (std::size_t g = 0; g < r.presentation.generators.size(); ++g)
    r.loops.push_back(transport_along(l, r.presentation.generator_loop(g)));
  for (std::size_t k = 0; k < r.presentation.relators.size(); ++k)
    if (!evaluate_word(l.field(), l.rank(), r.loops, r.presentation.relators[k]).is_identity() && l.rank() > 0) {
      r.relators_hold = false;
      r.failing_relator = k;
      break;
    }
  return r;
}

LocalSystem local_system_from_monodromy(const Pi1Presentation& pres, const Field& field, std::size_t rank,
                                        const std::vector<Matrix>& loops) {
  if (pres.poset->height() > 1) throw DomainError("monodromy realization needs a poset of height at most 1");
  if (!pres.is_free()) throw DomainError("monodromy realization needs a free presentation");
  if (loops.size() != pres.generators.size())
    throw InputError("expected " + std::to_string(pres.generators.size()) + " loop matrices, got " +
                     std::to_string(loops.size()));
  std::map<LocalSystem::Key, Matrix> r;
  for (const auto& e : pres.tree_edges) r.emplace(e, Matrix::identity(field, rank));
  for (std::size_t g = 0; g < loops.size(); ++g) {
    if (loops[g].rows() != rank || loops[g].cols() != rank) throw InputError("loop matrix has the wrong size");
    r.emplace(pres.generators[g], inverse_of(loops[g]));
  }
  return LocalSystem(pres.poset, field, rank, std::move(r));
}

LocalMorphism extend_isomorphism(const LocalSystem& l, const LocalSystem& m, int base, const Matrix& c0) {
  const Pi1Presentation pres = pi1_presentation(l.poset(), base);
  LocalMorphism c;
  for (int x = 0; x < l.poset()->size(); ++x) {
    const auto path = pres.tree_path(x);
    c.push_back(transport_along(m, path) * c0 * inverse_of(transport_along(l, path)));
  }
  if (!is_morphism(l, m, c)) throw DomainError("base isomorphism does not extend to a morphism of local systems");
  return c;
}

TreeChangeReport tree_change_check(const LocalSystem& l, const LocalSystem& m, int base_a, TreeChoice tree_a,
                                   int base_b, TreeChoice tree_b) {
  const MonodromyReport la = monodromy(l, base_a, tree_a), lb = monodromy(l, base_b, tree_b);
  const MonodromyReport ma = monodromy(m, base_a, tree_a), mb = monodromy(m, base_b, tree_b);
  TreeChangeReport r;
  const std::vector<int> q = la.presentation.tree_path(base_b);
  std::vector<int> back(q.rbegin(), q.rend());
  r.conjugator = transport_along(l, q);
  const Matrix cinv = inverse_of(r.conjugator);
  for (std::size_t g = 0; g < lb.loops.size(); ++g) {
    std::vector<int> path = q;
    const auto loop = lb.presentation.generator_loop(g);
    path.insert(path.end(), loop.begin() + 1, loop.end());
    path.insert(path.end(), back.begin() + 1, back.end());
    const Matrix wa = evaluate_word(l.field(), l.rank(), la.loops, la.presentation.path_word(path));
    if (!(lb.loops[g] == r.conjugator * wa * cinv)) r.loops_conjugate = false;
  }
  r.hom_dim_a = intertwiners(l.field(), l.rank(), m.rank(), la.loops, ma.loops).size();
  r.hom_dim_b = intertwiners(l.field(), l.rank(), m.rank(), lb.loops, mb.loops).size();
  r.hom_dim_local = hom_space(l, m).size();
  return r;
}

// ---------------------------------------------------------------- Seifert-van Kampen

bool SvkReport::passes() const {
  for (const auto& s : samples)
    if (!s.passes()) return false;
  for (const auto& h : homs)
    if (h.global_dim != h.fibre_dim) return false;
  return true;
}

namespace {

std::vector<int> to_ambient(const OpenSet& u, const std::vector<int>& local_path) {
  std::vector<int> out;
  for (int v : local_path) out.push_back(u.elements[std::size_t(v)]);
  return out;
}

std::vector<int> to_local(const OpenSet& u, const std::vector<int>& ambient_path) {
  std::vector<int> out;
  for (int v : ambient_path) out.push_back(u.local(v));
  return out;
}

// Splits a closed ambient path at `base` into loops at `base`, each inside U1
// or U2, joined through U1 ∩ U2 by tree paths. Returns (piece, local path).
std::vector<std::pair<int, std::vector<int>>> factor_loop(const Cover& cover, const Pi1Presentation& inter,
                                                          const std::vector<int>& path) {
  std::vector<std::pair<int, std::vector<int>>> out;
  // an edge lies in U1 when its lower end does
  auto piece_of = [&](int u, int v) { return cover.u1.contains(cover.space->less(u, v) ? u : v) ? 1 : 2; };
  std::size_t i = 0;
  while (i + 1 < path.size()) {
    const int piece = piece_of(path[i], path[i + 1]);
    std::size_t j = i + 1;
    while (j + 1 < path.size() && piece_of(path[j], path[j + 1]) == piece) ++j;
    // run path[i..j] lies in `piece`, endpoints in U1 ∩ U2
    std::vector<int> loop = to_ambient(*cover.u12, inter.tree_path(cover.u12->local(path[i])));
    loop.insert(loop.end(), path.begin() + std::ptrdiff_t(i) + 1, path.begin() + std::ptrdiff_t(j) + 1);
    auto back = to_ambient(*cover.u12, inter.tree_path(cover.u12->local(path[j])));
    loop.insert(loop.end(), back.rbegin() + 1, back.rend());
    out.emplace_back(piece, to_local(piece == 1 ? cover.u1 : cover.u2, loop));
    i = j;
  }
  return out;
}

}  // namespace

SvkReport svk_check(const Cover& cover, int base, const std::vector<GluingData>& samples) {
  if (!cover.space_connected) throw DomainError("SvK hypothesis violated: X is not connected");
  if (!cover.u1_connected) throw DomainError("SvK hypothesis violated: U1 is not connected");
  if (!cover.u2_connected) throw DomainError("SvK hypothesis violated: U2 is not connected");
  if (!cover.intersection_connected)
    throw DomainError("SvK hypothesis violated: U1 ∩ U2 is empty or not connected");
  if (!std::binary_search(cover.intersection.begin(), cover.intersection.end(), base))
    throw DomainError("base point must lie in U1 ∩ U2");

  const int b1 = cover.u1.local(base), b2 = cover.u2.local(base), b12 = cover.u12->local(base);
  const Pi1Presentation inter = pi1_presentation(cover.u12->poset, b12);

  SvkReport report;
  std::vector<std::optional<LocalSystem>> glued;
  for (const GluingData& g : samples) {
    SvkSampleResult s;
    std::optional<LocalSystem> l;
    try {
      l = glue(cover, g);
      s.glue_valid = true;
    } catch (const DomainError&) {
      report.samples.push_back(s);
      glued.emplace_back();
      continue;
    }
    const auto [a, b] = gluing_witness(cover, g);
    s.round_trip = is_gluing_morphism(cover, split(cover, *l), g, a, b) && glue(cover, split(cover, *l)) == *l;

    const MonodromyReport mx = monodromy(*l, base);
    const MonodromyReport m1 = monodromy(restrict(*l, cover.u1), b1);
    const MonodromyReport m2 = monodromy(restrict(*l, cover.u2), b2);
    const Field& k = l->field();
    const std::size_t r = l->rank();
    s.loops_factor = mx.relators_hold;
    for (std::size_t gi = 0; gi < mx.loops.size() && s.loops_factor; ++gi) {
      Matrix prod = Matrix::identity(k, r);
      for (const auto& [piece, local_path] : factor_loop(cover, inter, mx.presentation.generator_loop(gi))) {
        const MonodromyReport& m = piece == 1 ? m1 : m2;
        prod = evaluate_word(k, r, m.loops, m.presentation.path_word(local_path)) * prod;
      }
      if (!(prod == mx.loops[gi])) s.loops_factor = false;
    }
    s.intersection_compatible = true;
    for (std::size_t gi = 0; gi < inter.generators.size(); ++gi) {
      const auto path = to_ambient(*cover.u12, inter.generator_loop(gi));
      const Matrix w1 = evaluate_word(k, r, m1.loops, m1.presentation.path_word(to_local(cover.u1, path)));
      const Matrix w2 = evaluate_word(k, r, m2.loops, m2.presentation.path_word(to_local(cover.u2, path)));
      if (!(w1 == w2)) s.intersection_compatible = false;
    }
    report.samples.push_back(s);
    glued.push_back(std::move(l));
  }

  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (!glued[i] || !glued[j] || !(glued[i]->field() == glued[j]->field())) continue;
      SvkHomResult h{i, j, hom_space(*glued[i], *glued[j]).size(),
                     fibre_product_homs(cover, samples[i], samples[j]).size()};
      report.homs.push_back(h);
    }
  return report;
}

// ---------------------------------------------------------------- model equivalence

bool ModelEquivalenceReport::passes() const {
  for (const auto& s : samples)
    if (!s.realized_on_first || !s.realized_on_second || s.end_dim_first != s.end_dim_oracle ||
        s.end_dim_second != s.end_dim_oracle)
      return false;
  return hom_dims_agree;
}

ModelEquivalenceReport model_equivalence_check(const PosetPtr& p1, int base1, const PosetPtr& p2, int base2,
                                               const Field& field,
                                               const std::vector<std::vector<Matrix>>& sample_monodromies) {
  const Pi1Presentation pres1 = pi1_presentation(p1, base1);
  const Pi1Presentation pres2 = pi1_presentation(p2, base2);
  if (!pres1.is_free() || !pres2.is_free() || p1->height() > 1 || p2->height() > 1)
    throw DomainError("model comparison needs height-1 models with free pi_1");
  if (pres1.generators.size() != pres2.generators.size())
    throw DomainError("pi_1 rank mismatch: " + std::to_string(pres1.generators.size()) + " vs " +
                      std::to_string(pres2.generators.size()));
  ModelEquivalenceReport r;
  r.pi1_rank = pres1.generators.size();

  std::vector<LocalSystem> on1, on2;
  std::vector<std::size_t> ranks;
  for (const auto& loops : sample_monodromies) {
    if (loops.size() != r.pi1_rank) throw InputError("sample has the wrong number of loop matrices");
    const std::size_t rank = loops.empty() ? 0 : loops.front().rows();
    ModelSampleResult s;
    LocalSystem l1 = local_system_from_monodromy(pres1, field, rank, loops);
    LocalSystem l2 = local_system_from_monodromy(pres2, field, rank, loops);
    s.realized_on_first = monodromy(l1, base1).loops == loops;
    s.realized_on_second = monodromy(l2, base2).loops == loops;
    s.end_dim_first = hom_space(l1, l1).size();
    s.end_dim_second = hom_space(l2, l2).size();
    s.end_dim_oracle = intertwiners(field, rank, rank, loops, loops).size();
    r.samples.push_back(s);
    on1.push_back(std::move(l1));
    on2.push_back(std::move(l2));
    ranks.push_back(rank);
  }
  for (std::size_t i = 0; i < on1.size(); ++i)
    for (std::size_t j = 0; j < on1.size(); ++j) {
      const std::size_t d1 = hom_space(on1[i], on1[j]).size();
      const std::size_t d2 = hom_space(on2[i], on2[j]).size();
      const std::size_t oracle =
          intertwiners(field, ranks[i], ranks[j], sample_monodromies[i], sample_monodromies[j]).size();
      ++r.hom_pairs_checked;
      if (d1 != d2 || d1 != oracle) r.hom_dims_agree = false;
    }
  return r;
}

// ---------------------------------------------------------------- models

namespace models {

PosetPtr pseudo_circle() {
  return std::make_shared<const FinitePoset>(4, std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}},
                                             std::vector<std::string>{"a", "b", "c", "d"});
}

PosetPtr hexagon_circle() {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < 3; ++i) {
    rel.emplace_back(i, 3 + i);
    rel.emplace_back(i, 3 + (i + 1) % 3);
  }
  return std::make_shared<const FinitePoset>(6, rel, std::vector<std::string>{"x0", "x1", "x2", "y0", "y1", "y2"});
}

PosetPtr wedge() {
  return std::make_shared<const FinitePoset>(
      7, std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 5}, {0, 6}, {4, 5}, {4, 6}},
      std::vector<std::string>{"a", "b", "c", "d", "b'", "c'", "d'"});
}

PosetPtr cone(int leaves) {
  if (leaves < 0) throw InputError("cone needs a nonnegative number of leaves");
  std::vector<std::pair<int, int>> rel;
  std::vector<std::string> names{"o"};
  for (int i = 1; i <= leaves; ++i) {
    rel.emplace_back(0, i);
    names.push_back("l" + std::to_string(i));
  }
  return std::make_shared<const FinitePoset>(leaves + 1, rel, names);
}

Cover standard_wedge_cover() {
  const PosetPtr x = wedge();
  return make_cover(x, {0, 1, 2, 3, 5, 6}, {0, 2, 3, 4, 5, 6});
}

}  // namespace models

}  // namespace amg
