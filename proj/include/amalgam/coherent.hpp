#pragma once

// Truncated coherent elements: finite shadows of the Hopf algebra of the
// amalgamated product G1 *_H G2, realized inside the completed tensor
// algebra on k^{G1} ⊕ k^{G2}.
//
// An element is a family of components f_{i1..in} in k^{G_{i1} x ... x G_{in}}
// for every index sequence of length n <= N. Viewing f as a function on
// words in G1 ⊎ G2, the coherence conditions say:
//   multiplicative  f(.., a, b, ..) = f(.., ab, ..)      (a, b in one factor)
//   unital          f(.., e, ..)    = f(.. ..)           (letter removed)
//   H-coherent      f(.., phi1(h), ..) = f(.., phi2(h), ..)
// Conditions that would reach degree N + 1 are skipped.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amalgam/exactalg.hpp"
#include "amalgam/rep.hpp"

namespace amg {

/// Addressing of the component grids: index sequences ordered by length,
/// then lexicographically; grids row-major over element indices.
class CellLayout {
 public:
  /// Throws SizeError when the truncation degree or cell count exceed the
  /// configured caps.
  CellLayout(PresentationPtr presentation, int degree);

  const PresentationPtr& presentation() const { return presentation_; }
  int degree() const { return degree_; }
  std::size_t size() const { return total_; }

  const std::vector<std::vector<int>>& sequences() const { return sequences_; }
  std::size_t sequence_index(std::span<const int> sequence) const;
  std::size_t offset(std::size_t sequence) const { return offsets_[sequence]; }
  std::size_t grid_size(std::size_t sequence) const { return offsets_[sequence + 1] - offsets_[sequence]; }

  /// Cell of a word of length <= degree.
  std::size_t cell(const RawWord& w) const;
  /// Word stored at a cell.
  RawWord word(std::size_t cell) const;
  /// Sequence index owning a cell.
  std::size_t sequence_of(std::size_t cell) const;

 private:
  PresentationPtr presentation_;
  int degree_;
  std::vector<std::vector<int>> sequences_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

using LayoutPtr = std::shared_ptr<const CellLayout>;

class TruncatedElement {
 public:
  TruncatedElement(LayoutPtr layout, Field field, std::vector<Scalar> values);

  /// The unit: every component constant 1.
  static TruncatedElement unit(LayoutPtr layout, const Field& field);

  const LayoutPtr& layout() const { return layout_; }
  const PresentationPtr& presentation() const { return layout_->presentation(); }
  int degree() const { return layout_->degree(); }
  const Field& field() const { return field_; }
  const std::vector<Scalar>& values() const { return values_; }
  std::vector<Scalar>& mutable_values() { return values_; }

  /// Value on a word of length <= degree (no coherence assumed).
  const Scalar& operator()(const RawWord& w) const { return values_[layout_->cell(w)]; }
  /// f_∅, the counit.
  const Scalar& counit() const { return values_[0]; }
  /// Grid of one component.
  std::span<const Scalar> component(std::span<const int> sequence) const;

  bool operator==(const TruncatedElement& o) const;

 private:
  LayoutPtr layout_;
  Field field_;
  std::vector<Scalar> values_;
};

/// Families of coherence conditions, in scan order.
enum class CoherenceKind { Multiplicative, Unital, HCoherent };
std::string to_string(CoherenceKind kind);

/// A single condition value[lhs] == value[rhs].
struct CoherenceCondition {
  CoherenceKind kind;
  std::size_t lhs;
  std::size_t rhs;
  int slot;  // 0-based position in the longer word
};

/// Every condition within degree <= N, in deterministic order.
std::vector<CoherenceCondition> coherence_conditions(const CellLayout& layout);

struct CoherenceWitness {
  CoherenceKind kind;
  int slot = 0;
  RawWord lhs_word;
  RawWord rhs_word;
  Scalar lhs_value;
  Scalar rhs_value;
};

struct CoherenceReport {
  struct Family {
    CoherenceKind kind;
    bool passes = true;
    std::size_t checked = 0;
  };
  std::vector<Family> families;
  std::optional<CoherenceWitness> first_violation;
  bool passes() const { return !first_violation.has_value(); }
};

CoherenceReport check_coherence(const TruncatedElement& f);
/// Checks f against the conditions of another layout with the same cells
/// (used to test H-coherent elements against the free-product system).
CoherenceReport check_coherence(const TruncatedElement& f, const CellLayout& conditions);

struct CoherentBasis {
  LayoutPtr layout;
  std::vector<TruncatedElement> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Kernel of the coherence system, assembled as one exact linear system
/// over all cells.
CoherentBasis coherent_basis(const PresentationPtr& p, int degree, const Field& field);

/// f_∅ = [i == j], f(g1..gn) = (rho(g1)...rho(gn))_{ij}; i, j are 0-based.
TruncatedElement matrix_coefficient_element(const AmalgamRep& rho, std::size_t i, std::size_t j, int degree);

TruncatedElement multiply(const TruncatedElement& f, const TruncatedElement& g);
TruncatedElement add(const TruncatedElement& f, const TruncatedElement& g);
TruncatedElement scale(const TruncatedElement& f, const Scalar& s);
/// S(f)(g1..gn) = f(gn^{-1} .. g1^{-1}).
TruncatedElement antipode(const TruncatedElement& f);

struct HopfIdentityReport {
  bool passes = true;
  std::size_t checked = 0;
  int max_half_length = 0;
  std::optional<RawWord> violation;  // the palindromic word w^{-1} w
};

/// f(w^{-1} w) = f_∅ for every word w of length n with 2n <= degree.
HopfIdentityReport hopf_identity_check(const TruncatedElement& f);

/// Degree-(|u|, |v|) part of the comultiplication: entry (u, v) = f(u·v),
/// rows over the grid of `left`, columns over the grid of `right`.
Matrix comultiply_component(const TruncatedElement& f, std::span<const int> left, std::span<const int> right);

struct EvaluationSplit {
  Matrix matrix;  // rows: words of length <= split, cols: length <= N - split
  std::size_t rank = 0;
  int split = 0;
};

/// Evaluation matrix M[u][v] = f(u·v) for |u| <= split, |v| <= N - split.
EvaluationSplit evaluation_matrix(const TruncatedElement& f, int split);

struct RankFactorization {
  Matrix left;   // rows x r: functions of u
  Matrix right;  // r x cols: functions of v
};

/// M = left * right with r = rank(M), from the pivot columns of M.
RankFactorization rank_factorization(const Matrix& m);

struct RepresentativityReport {
  std::size_t rank = 0;   // max over splits
  int best_split = 0;
  std::vector<std::size_t> rank_by_split;
};

/// Lower bound for dim Rf: the largest rank of the fully-defined
/// evaluation blocks. Requires degree >= 2.
RepresentativityReport representativity_rank(const TruncatedElement& f);

/// Value of a coherent element on a group element (its shortest word);
/// throws DomainError when f is not coherent or the word is too long.
Scalar evaluation_on_group(const TruncatedElement& f, const ReducedWord& w);
std::vector<Scalar> evaluation_on_group(const TruncatedElement& f, const std::vector<ReducedWord>& words);

struct QuotientEmbeddingReport {
  std::size_t amalgamated_dimension = 0;
  std::size_t free_dimension = 0;
  bool inclusion_holds = true;
  std::optional<std::size_t> failing_basis_element;
};

/// Every coherent element for H also satisfies the H = 1 system.
QuotientEmbeddingReport quotient_embedding_check(const PresentationPtr& p, int degree, const Field& field);

}  // namespace amg
