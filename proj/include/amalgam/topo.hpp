#pragma once

// Finite topological models: posets with the Alexandrov topology (opens are
// up-sets), local systems on them, gluing along open covers, edge-path
// presentations of pi_1 and monodromy.
//
// Orientation: a local system stores, for each covering pair x ⋖ y, the
// restriction isomorphism stalk(y) -> stalk(x). Transport from x up to y
// therefore uses the inverse matrix.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/exactalg.hpp"

namespace amg {

class FinitePoset {
 public:
  /// `less` lists strict relations x < y; the transitive closure is taken.
  /// Throws InputError on out-of-range elements, reflexive pairs or cycles.
  FinitePoset(int size, const std::vector<std::pair<int, int>>& less, std::vector<std::string> names = {});

  int size() const { return n_; }
  const std::string& name(int x) const { return names_[std::size_t(x)]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Throws InputError for unknown names.
  int index(const std::string& name) const;

  bool less(int x, int y) const { return less_[std::size_t(x * n_ + y)] != 0; }
  bool leq(int x, int y) const { return x == y || less(x, y); }
  bool comparable(int x, int y) const { return less(x, y) || less(y, x); }
  /// Covering pairs x ⋖ y in lexicographic order.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  bool is_cover(int x, int y) const;
  /// Every strict pair x < y in lexicographic order.
  std::vector<std::pair<int, int>> strict_pairs() const;
  /// Length of the longest chain, counted in edges.
  int height() const;

  /// ↑x, the minimal open neighbourhood.
  std::vector<int> up_set(int x) const;
  bool is_open(const std::vector<int>& subset) const;
  /// Connectivity of the comparability graph restricted to `subset`.
  bool is_connected(const std::vector<int>& subset) const;
  bool is_connected() const;

  /// Induced subposet on sorted `subset`, elements renumbered in order.
  FinitePoset induced(const std::vector<int>& subset) const;

  bool operator==(const FinitePoset& o) const { return n_ == o.n_ && less_ == o.less_; }

 private:
  int n_ = 0;
  std::vector<char> less_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::string> names_;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

/// An up-set U of X together with its induced poset.
struct OpenSet {
  PosetPtr ambient;
  std::vector<int> elements;  // sorted ambient indices
  PosetPtr poset;             // induced, local index k <-> elements[k]

  bool contains(int ambient_index) const;
  /// Throws DomainError when the point is outside U.
  int local(int ambient_index) const;
};

/// Throws InputError when `elements` is empty or not up-closed.
OpenSet open_subset(const PosetPtr& x, std::vector<int> elements);

class LocalSystem {
 public:
  using Key = std::pair<int, int>;

  /// One matrix per covering pair. Validates shapes, field, invertibility
  /// and functoriality (every diamond of covering chains commutes).
  LocalSystem(PosetPtr poset, Field field, std::size_t rank, std::map<Key, Matrix> restrictions);

  static LocalSystem constant(PosetPtr poset, const Field& field, std::size_t rank);

  const PosetPtr& poset() const { return poset_; }
  const Field& field() const { return field_; }
  std::size_t rank() const { return rank_; }
  const std::map<Key, Matrix>& restrictions() const { return restrictions_; }
  const Matrix& restriction(int x, int y) const;
  /// The composite stalk(y) -> stalk(x) for x <= y.
  Matrix transport(int x, int y) const;

  bool operator==(const LocalSystem& o) const;

 private:
  PosetPtr poset_;
  Field field_;
  std::size_t rank_ = 0;
  std::map<Key, Matrix> restrictions_;
  std::vector<Matrix> transports_;  // n*n table, filled for x <= y
};

struct FunctorialityReport {
  bool passes = true;
  std::optional<std::pair<int, int>> violation;  // (x, y) with two different composites
};

/// Checks the functoriality invariant without constructing a LocalSystem.
FunctorialityReport check_functoriality(const FinitePoset& p, std::size_t rank,
                                        const std::map<LocalSystem::Key, Matrix>& restrictions);

LocalSystem restrict(const LocalSystem& l, const OpenSet& u);

/// A morphism of local systems: one matrix per point (stalk maps).
using LocalMorphism = std::vector<Matrix>;

bool is_morphism(const LocalSystem& l, const LocalSystem& m, const LocalMorphism& f);
/// Basis of Hom(L, M).
std::vector<LocalMorphism> hom_space(const LocalSystem& l, const LocalSystem& m);

struct Cover {
  PosetPtr space;
  OpenSet u1;
  OpenSet u2;
  std::vector<int> intersection;  // ambient indices
  std::optional<OpenSet> u12;     // empty when the intersection is empty
  bool space_connected = false;
  bool u1_connected = false;
  bool u2_connected = false;
  bool intersection_connected = false;  // false when empty

  bool satisfies_hypotheses() const {
    return space_connected && u1_connected && u2_connected && intersection_connected;
  }
};

/// Throws InputError when U1 or U2 is not open or they do not cover X.
Cover make_cover(const PosetPtr& x, std::vector<int> u1, std::vector<int> u2);

/// (L1 on U1, L2 on U2, c: L1|U12 -> L2|U12), c indexed like cover.u12.
struct GluingData {
  LocalSystem l1;
  LocalSystem l2;
  std::vector<Matrix> c;
};

/// Throws DomainError when c is not an isomorphism of the restricted systems.
void validate_gluing(const Cover& cover, const GluingData& g);
/// Keeps L1 coordinates on U1; a covering pair x ⋖ y with x in U2 \ U1 and
/// y in U1 gets R2(x, y) c(y).
LocalSystem glue(const Cover& cover, const GluingData& g);
/// (L|U1, L|U2, identity).
GluingData split(const Cover& cover, const LocalSystem& l);

/// (a, b) is a morphism of gluing data s -> t when a, b are morphisms and
/// c_t a = b c_s on the intersection.
bool is_gluing_morphism(const Cover& cover, const GluingData& s, const GluingData& t, const LocalMorphism& a,
                        const LocalMorphism& b);
/// The witness split(glue(g)) -> g: identity on U1; c on U12, identity on U2 \ U1.
std::pair<LocalMorphism, LocalMorphism> gluing_witness(const Cover& cover, const GluingData& g);
/// Basis of pairs (a, b) forming morphisms of gluing data s -> t.
std::vector<std::pair<LocalMorphism, LocalMorphism>> fibre_product_homs(const Cover& cover, const GluingData& s,
                                                                        const GluingData& t);

/// Spanning-tree construction for edge-path presentations.
struct TreeChoice {
  enum class Strategy { BreadthFirst, DepthFirst };
  Strategy strategy = Strategy::BreadthFirst;
  bool reverse_neighbours = false;
};

/// Generator index and exponent +1/-1; letters read left to right as paths.
using GroupWord = std::vector<std::pair<int, int>>;

struct Pi1Presentation {
  PosetPtr poset;
  int base = 0;
  std::vector<std::pair<int, int>> tree_edges;  // (lower, upper)
  std::vector<std::pair<int, int>> generators;  // non-tree edges (lower, upper)
  std::vector<std::array<int, 3>> chains;       // x < y < z, one relator each
  std::vector<GroupWord> relators;

  /// Vertex path from the base point to v inside the tree.
  std::vector<int> tree_path(int v) const;
  /// The closed vertex path of a generator: base -> lower -> upper -> base.
  std::vector<int> generator_loop(std::size_t g) const;
  /// Word of a closed edge path at the base point; consecutive vertices must
  /// be comparable.
  GroupWord path_word(const std::vector<int>& path) const;
  bool is_free() const { return relators.empty(); }

  std::vector<int> parent;  // tree parent, -1 at the base and off the tree
};

/// Throws DomainError when the poset is disconnected.
Pi1Presentation pi1_presentation(const PosetPtr& p, int base, TreeChoice tree = {});

/// Matrix of a closed or open vertex path: stalk(start) -> stalk(end).
Matrix transport_along(const LocalSystem& l, const std::vector<int>& path);
/// Product along a word: the letter read first acts first.
Matrix evaluate_word(const Field& field, std::size_t rank, const std::vector<Matrix>& loops, const GroupWord& w);

struct MonodromyReport {
  Pi1Presentation presentation;
  std::vector<Matrix> loops;
  bool relators_hold = true;
  std::optional<std::size_t> failing_relator;
};

MonodromyReport monodromy(const LocalSystem& l, int base, TreeChoice tree = {});

/// Local system with the given loop matrices: identity on tree edges, the
/// inverse loop matrix on each generator edge. Needs height <= 1 and a free
/// presentation.
LocalSystem local_system_from_monodromy(const Pi1Presentation& pres, const Field& field, std::size_t rank,
                                        const std::vector<Matrix>& loops);

/// Iso between two local systems on a connected space determined by its
/// value at `base` (stalk(base) of L -> stalk(base) of M): c_x = T_M(x <- base) c0 T_L(base <- x),
/// along tree paths. Throws DomainError if the result is not a morphism.
LocalMorphism extend_isomorphism(const LocalSystem& l, const LocalSystem& m, int base, const Matrix& c0);

struct TreeChangeReport {
  /// Each loop of choice B equals C w_A C^{-1}, where w_A is its word under
  /// choice A and C the transport from base A to base B.
  bool loops_conjugate = true;
  Matrix conjugator;
  std::size_t hom_dim_a = 0;      // intertwiners of the monodromies, choice A
  std::size_t hom_dim_b = 0;      // same, choice B
  std::size_t hom_dim_local = 0;  // Hom(L, M) computed stalkwise
};

/// Compares monodromy of L (and Hom(L, M)) for two spanning trees and base
/// points.
TreeChangeReport tree_change_check(const LocalSystem& l, const LocalSystem& m, int base_a, TreeChoice tree_a,
                                   int base_b, TreeChoice tree_b);

struct SvkSampleResult {
  bool glue_valid = false;
  bool round_trip = false;
  bool loops_factor = false;           // global loops are products of U1/U2 loops
  bool intersection_compatible = false;  // U12 loops agree in U1 and U2
  bool passes() const { return glue_valid && round_trip && loops_factor && intersection_compatible; }
};

struct SvkHomResult {
  std::size_t left = 0, right = 0;
  std::size_t global_dim = 0;
  std::size_t fibre_dim = 0;
};

struct SvkReport {
  std::vector<SvkSampleResult> samples;
  std::vector<SvkHomResult> homs;  // every ordered pair over one field
  bool passes() const;
};

/// Throws DomainError when the cover violates the connectivity hypotheses
/// or the base point is outside U1 ∩ U2.
SvkReport svk_check(const Cover& cover, int base, const std::vector<GluingData>& samples);

struct ModelSampleResult {
  bool realized_on_first = false;
  bool realized_on_second = false;
  std::size_t end_dim_first = 0;
  std::size_t end_dim_second = 0;
  std::size_t end_dim_oracle = 0;
};

struct ModelEquivalenceReport {
  std::size_t pi1_rank = 0;
  std::vector<ModelSampleResult> samples;
  std::size_t hom_pairs_checked = 0;
  bool hom_dims_agree = true;
  bool passes() const;
};

/// Throws DomainError when either model lacks a free presentation or the
/// ranks differ.
ModelEquivalenceReport model_equivalence_check(const PosetPtr& p1, int base1, const PosetPtr& p2, int base2,
                                               const Field& field,
                                               const std::vector<std::vector<Matrix>>& sample_monodromies);

namespace models {
/// a, b minimal; c, d maximal; a < c, a < d, b < c, b < d.
PosetPtr pseudo_circle();
/// x0, x1, x2 minimal; y0, y1, y2 maximal; xi < yi, xi < y(i+1).
PosetPtr hexagon_circle();
/// Two pseudo-circles sharing the minimal point a: a, b, c, d, b', c', d'.
PosetPtr wedge();
/// A minimum below `leaves` maximal points; contractible.
PosetPtr cone(int leaves = 2);
/// U1 = X \ {b'}, U2 = X \ {b}; U1 ∩ U2 = ↑a.
Cover standard_wedge_cover();
}  // namespace models

}  // namespace amg
