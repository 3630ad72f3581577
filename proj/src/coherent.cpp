#include "amalgam/coherent.hpp"

#include <algorithm>

namespace amg {

// ---------------------------------------------------------------- CellLayout

CellLayout::CellLayout(PresentationPtr presentation, int degree)
    : presentation_(std::move(presentation)), degree_(degree) {
  const Limits limits = Limits::current();
  if (degree < 0 || degree > limits.max_truncation)
    throw SizeError("truncation degree " + std::to_string(degree) + " outside 0.." +
                    std::to_string(limits.max_truncation));
  const AmalgamPresentation& p = *presentation_;
  offsets_.push_back(0);
  for (int n = 0; n <= degree; ++n)
    for (std::size_t code = 0; code < (std::size_t(1) << n); ++code) {
      std::vector<int> seq(static_cast<std::size_t>(n));
      std::size_t grid = 1;
      for (int k = 0; k < n; ++k) {
        seq[std::size_t(k)] = 1 + int((code >> (n - 1 - k)) & 1);
        grid *= std::size_t(p.group(seq[std::size_t(k)]).order());
      }
      sequences_.push_back(std::move(seq));
      offsets_.push_back(offsets_.back() + grid);
      if (offsets_.back() > limits.max_unknowns)
        throw SizeError("truncated element needs more than " + std::to_string(limits.max_unknowns) +
                        " cells (AMG_MAX_UNKNOWNS)");
    }
  total_ = offsets_.back();
}

std::size_t CellLayout::sequence_index(std::span<const int> sequence) const {
  const std::size_t n = sequence.size();
  if (n > std::size_t(degree_)) throw DomainError("index sequence longer than the truncation degree");
  std::size_t code = 0;
  for (int f : sequence) {
    if (f != 1 && f != 2) throw DomainError("index sequence entries must be 1 or 2");
    code = code * 2 + std::size_t(f - 1);
  }
  return ((std::size_t(1) << n) - 1) + code;
}

std::size_t CellLayout::cell(const RawWord& w) const {
  if (w.size() > std::size_t(degree_))
    throw DomainError("word of length " + std::to_string(w.size()) + " exceeds truncation degree " +
                      std::to_string(degree_));
  std::size_t code = 0, local = 0;
  for (const auto& l : w) {
    presentation_->validate_letter(l);
    code = code * 2 + std::size_t(l.factor - 1);
    local = local * std::size_t(presentation_->group(l.factor).order()) + std::size_t(l.element);
  }
  return offsets_[((std::size_t(1) << w.size()) - 1) + code] + local;
}

std::size_t CellLayout::sequence_of(std::size_t cell) const {
  if (cell >= total_) throw DomainError("cell index out of range");
  return std::size_t(std::upper_bound(offsets_.begin(), offsets_.end(), cell) - offsets_.begin()) - 1;
}

RawWord CellLayout::word(std::size_t cell) const {
  const std::size_t s = sequence_of(cell);
  const auto& seq = sequences_[s];
  std::size_t local = cell - offsets_[s];
  RawWord w(seq.size());
  for (std::size_t k = seq.size(); k-- > 0;) {
    const std::size_t n = std::size_t(presentation_->group(seq[k]).order());
    w[k] = Letter{seq[k], int(local % n)};
    local /= n;
  }
  return w;
}

// ---------------------------------------------------------------- TruncatedElement

TruncatedElement::TruncatedElement(LayoutPtr layout, Field field, std::vector<Scalar> values)
    : layout_(std::move(layout)), field_(std::move(field)), values_(std::move(values)) {
  if (values_.size() != layout_->size())
    throw DomainError("truncated element needs " + std::to_string(layout_->size()) + " values, got " +
                      std::to_string(values_.size()));
  require_field(field_, values_);
}

TruncatedElement TruncatedElement::unit(LayoutPtr layout, const Field& field) {
  const std::size_t n = layout->size();
  return TruncatedElement(std::move(layout), field, std::vector<Scalar>(n, field.one()));
}

std::span<const Scalar> TruncatedElement::component(std::span<const int> sequence) const {
  const std::size_t s = layout_->sequence_index(sequence);
  return std::span<const Scalar>(values_).subspan(layout_->offset(s), layout_->grid_size(s));
}

bool TruncatedElement::operator==(const TruncatedElement& o) const {
  return layout_->size() == o.layout_->size() && field_ == o.field_ && values_ == o.values_;
}

// ---------------------------------------------------------------- conditions

std::string to_string(CoherenceKind kind) {
  switch (kind) {
    case CoherenceKind::Multiplicative:
      return "multiplicative";
    case CoherenceKind::Unital:
      return "unital";
    case CoherenceKind::HCoherent:
      return "H-coherent";
  }
  return "?";
}

std::vector<CoherenceCondition> coherence_conditions(const CellLayout& layout) {
  const AmalgamPresentation& p = *layout.presentation();
  std::vector<CoherenceCondition> mult, unital, hcoh;
  for (std::size_t c = 0; c < layout.size(); ++c) {
    const RawWord w = layout.word(c);
    for (std::size_t l = 0; l < w.size(); ++l) {
      const Letter& x = w[l];
      const FiniteGroup& g = p.group(x.factor);
      if (l + 1 < w.size() && w[l + 1].factor == x.factor) {
        RawWord merged = w;
        merged[l].element = g.mul(x.element, w[l + 1].element);
        merged.erase(merged.begin() + std::ptrdiff_t(l) + 1);
        mult.push_back({CoherenceKind::Multiplicative, c, layout.cell(merged), int(l)});
      }
      if (x.element == g.identity()) {
        RawWord shorter = w;
        shorter.erase(shorter.begin() + std::ptrdiff_t(l));
        unital.push_back({CoherenceKind::Unital, c, layout.cell(shorter), int(l)});
      }
      if (x.factor == 1)
        for (int h = 0; h < p.h()->order(); ++h) {
          if (p.phi1()(h) != x.element) continue;
          RawWord swapped = w;
          swapped[l] = Letter{2, p.phi2()(h)};
          hcoh.push_back({CoherenceKind::HCoherent, c, layout.cell(swapped), int(l)});
        }
    }
  }
  mult.insert(mult.end(), unital.begin(), unital.end());
  mult.insert(mult.end(), hcoh.begin(), hcoh.end());
  return mult;
}

CoherenceReport check_coherence(const TruncatedElement& f, const CellLayout& conditions) {
  if (conditions.size() != f.layout()->size() || conditions.degree() != f.degree())
    throw DomainError("condition layout does not match the element");
  CoherenceReport report;
  for (auto kind : {CoherenceKind::Multiplicative, CoherenceKind::Unital, CoherenceKind::HCoherent})
    report.families.push_back({kind, true, 0});
  const auto& v = f.values();
  for (const auto& cond : coherence_conditions(conditions)) {
    auto& family = report.families[std::size_t(cond.kind)];
    ++family.checked;
    if (v[cond.lhs] == v[cond.rhs]) continue;
    family.passes = false;
    if (!report.first_violation)
      report.first_violation = CoherenceWitness{cond.kind, cond.slot, conditions.word(cond.lhs),
                                                conditions.word(cond.rhs), v[cond.lhs], v[cond.rhs]};
  }
  return report;
}

CoherenceReport check_coherence(const TruncatedElement& f) { return check_coherence(f, *f.layout()); }

CoherentBasis coherent_basis(const PresentationPtr& p, int degree, const Field& field) {
  auto layout = std::make_shared<const CellLayout>(p, degree);
  SparseEchelon system(field, layout->size());
  for (const auto& cond : coherence_conditions(*layout)) {
    if (cond.lhs == cond.rhs) continue;
    system.add_row({{cond.lhs, field.one()}, {cond.rhs, -field.one()}});
  }
  CoherentBasis out{layout, {}};
  for (auto& v : system.kernel_basis()) out.basis.emplace_back(layout, field, std::move(v));
  return out;
}

// ---------------------------------------------------------------- elements

TruncatedElement matrix_coefficient_element(const AmalgamRep& rho, std::size_t i, std::size_t j, int degree) {
  if (i >= rho.dim() || j >= rho.dim())
    throw DomainError("matrix coefficient index out of range for dimension " + std::to_string(rho.dim()));
  auto layout = std::make_shared<const CellLayout>(rho.presentation(), degree);
  const Field& k = rho.field();
  // Products are built from the cell of the word without its last letter,
  // which always precedes it in layout order.
  std::vector<Matrix> products;
  products.reserve(layout->size());
  std::vector<Scalar> values;
  values.reserve(layout->size());
  for (std::size_t c = 0; c < layout->size(); ++c) {
    RawWord w = layout->word(c);
    if (w.empty()) {
      products.push_back(Matrix::identity(k, rho.dim()));
    } else {
      const Letter last = w.back();
      w.pop_back();
      products.push_back(products[layout->cell(w)] * rho.letter(last));
    }
    values.push_back(products.back()(i, j));
  }
  return TruncatedElement(layout, k, std::move(values));
}

namespace {
void require_compatible(const TruncatedElement& f, const TruncatedElement& g) {
  if (f.layout()->size() != g.layout()->size() || f.degree() != g.degree() ||
      f.presentation()->g1()->table() != g.presentation()->g1()->table() ||
      f.presentation()->g2()->table() != g.presentation()->g2()->table())
    throw DomainError("truncated elements over different presentations or degrees");
  if (!(f.field() == g.field())) throw FieldMismatch("truncated elements over different fields");
}

RawWord inverse_word(const AmalgamPresentation& p, const RawWord& w) {
  RawWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.element = p.group(l.factor).inverse(l.element);
  return out;
}
}  // namespace

TruncatedElement multiply(const TruncatedElement& f, const TruncatedElement& g) {
  require_compatible(f, g);
  std::vector<Scalar> v(f.values().size());
  for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.values()[c] * g.values()[c];
  return TruncatedElement(f.layout(), f.field(), std::move(v));
}

TruncatedElement add(const TruncatedElement& f, const TruncatedElement& g) {
  require_compatible(f, g);
  std::vector<Scalar> v(f.values().size());
  for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.values()[c] + g.values()[c];
  return TruncatedElement(f.layout(), f.field(), std::move(v));
}

TruncatedElement scale(const TruncatedElement& f, const Scalar& s) {
  std::vector<Scalar> v(f.values().size());
  for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.values()[c] * s;
  return TruncatedElement(f.layout(), f.field(), std::move(v));
}

TruncatedElement antipode(const TruncatedElement& f) {
  const CellLayout& layout = *f.layout();
  const AmalgamPresentation& p = *f.presentation();
  std::vector<Scalar> v(layout.size());
  for (std::size_t c = 0; c < layout.size(); ++c) v[c] = f(inverse_word(p, layout.word(c)));
  return TruncatedElement(f.layout(), f.field(), std::move(v));
}

HopfIdentityReport hopf_identity_check(const TruncatedElement& f) {
  const CellLayout& layout = *f.layout();
  const AmalgamPresentation& p = *f.presentation();
  HopfIdentityReport report;
  report.max_half_length = f.degree() / 2;
  for (std::size_t c = 0; c < layout.size(); ++c) {
    const RawWord w = layout.word(c);
    if (2 * w.size() > std::size_t(f.degree())) break;  // layout is ordered by length
    RawWord pal = inverse_word(p, w);
    pal.insert(pal.end(), w.begin(), w.end());
    ++report.checked;
    if (!(f(pal) == f.counit()) && report.passes) {
      report.passes = false;
      report.violation = pal;
    }
  }
  return report;
}

Matrix comultiply_component(const TruncatedElement& f, std::span<const int> left, std::span<const int> right) {
  if (left.size() + right.size() > std::size_t(f.degree()))
    throw DomainError("bidegree exceeds the truncation degree");
  const CellLayout& layout = *f.layout();
  const std::size_t ls = layout.sequence_index(left), rs = layout.sequence_index(right);
  Matrix m(f.field(), layout.grid_size(ls), layout.grid_size(rs));
  for (std::size_t a = 0; a < m.rows(); ++a) {
    const RawWord u = layout.word(layout.offset(ls) + a);
    for (std::size_t b = 0; b < m.cols(); ++b) {
      RawWord uv = u;
      const RawWord v = layout.word(layout.offset(rs) + b);
      uv.insert(uv.end(), v.begin(), v.end());
      m(a, b) = f(uv);
    }
  }
  return m;
}

EvaluationSplit evaluation_matrix(const TruncatedElement& f, int split) {
  const int n = f.degree();
  if (split < 0 || split > n) throw DomainError("split outside 0..degree");
  const CellLayout& layout = *f.layout();
  auto cells_up_to = [&](int len) { return layout.offset((std::size_t(1) << (len + 1)) - 1); };
  const std::size_t rows = cells_up_to(split), cols = cells_up_to(n - split);
  EvaluationSplit out{Matrix(f.field(), rows, cols), 0, split};
  for (std::size_t a = 0; a < rows; ++a) {
    const RawWord u = layout.word(a);
    for (std::size_t b = 0; b < cols; ++b) {
      RawWord uv = u;
      const RawWord v = layout.word(b);
      uv.insert(uv.end(), v.begin(), v.end());
      out.matrix(a, b) = f(uv);
    }
  }
  out.rank = out.matrix.rank();
  return out;
}

RankFactorization rank_factorization(const Matrix& m) {
  const Echelon e = m.rref();
  const std::size_t r = e.pivots.size();
  Matrix left(m.field(), m.rows(), r), right(m.field(), r, m.cols());
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < m.rows(); ++i) left(i, k) = m(i, e.pivots[k]);
    for (std::size_t j = 0; j < m.cols(); ++j) right(k, j) = e.reduced(k, j);
  }
  return RankFactorization{std::move(left), std::move(right)};
}

RepresentativityReport representativity_rank(const TruncatedElement& f) {
  if (f.degree() < 2) throw DomainError("representativity rank needs truncation degree >= 2");
  RepresentativityReport report;
  for (int split = 0; split <= f.degree(); ++split) {
    const std::size_t r = evaluation_matrix(f, split).rank;
    report.rank_by_split.push_back(r);
    if (r > report.rank) {
      report.rank = r;
      report.best_split = split;
    }
  }
  return report;
}

std::vector<Scalar> evaluation_on_group(const TruncatedElement& f, const std::vector<ReducedWord>& words) {
  const CoherenceReport coherence = check_coherence(f);
  if (!coherence.passes()) throw DomainError("evaluation on group elements needs a coherent element");
  const AmalgamPresentation& p = *f.presentation();
  std::vector<Scalar> out;
  for (const auto& w : words) {
    const RawWord letters = p.to_letters(w);
    if (letters.size() > std::size_t(f.degree()))
      throw DomainError("group element of length " + std::to_string(letters.size()) + " exceeds truncation degree");
    out.push_back(f(letters));
  }
  return out;
}

Scalar evaluation_on_group(const TruncatedElement& f, const ReducedWord& w) {
  return evaluation_on_group(f, std::vector<ReducedWord>{w}).front();
}

QuotientEmbeddingReport quotient_embedding_check(const PresentationPtr& p, int degree, const Field& field) {
  const CoherentBasis amalgamated = coherent_basis(p, degree, field);
  const auto free = std::make_shared<const AmalgamPresentation>(p->free_product());
  const CoherentBasis free_basis = coherent_basis(free, degree, field);
  const CellLayout free_layout(free, degree);
  QuotientEmbeddingReport report;
  report.amalgamated_dimension = amalgamated.dimension();
  report.free_dimension = free_basis.dimension();
  for (std::size_t k = 0; k < amalgamated.basis.size(); ++k)
    if (!check_coherence(amalgamated.basis[k], free_layout).passes()) {
      report.inclusion_holds = false;
      report.failing_basis_element = k;
      break;
    }
  return report;
}

}  // namespace amg
