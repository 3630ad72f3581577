#pragma once

// Finite groups given by multiplication tables, homomorphisms, and normal
// forms in amalgamated free products G1 *_H G2 of finite groups.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/config.hpp"

namespace amg {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A group on {0, ..., n-1} with an explicit multiplication table.
class FiniteGroup {
 public:
  /// Validates the group axioms exhaustively; throws InputError otherwise.
  FiniteGroup(std::vector<std::vector<int>> table, std::string name = {});

  static GroupPtr trivial();
  /// Z/n with element k = k-th power of the generator 1.
  static GroupPtr cyclic(int n);
  /// S_3 as permutations of {0,1,2}; element 0 is the identity, 1 = (0 1),
  /// 2 = (1 2), 3 = (0 1 2), 4 = (0 2 1), 5 = (0 2).
  static GroupPtr symmetric3();

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[std::size_t(a) * std::size_t(order_) + std::size_t(b)]; }
  int inverse(int a) const { return inverse_[std::size_t(a)]; }
  int power(int a, int e) const;
  int element_order(int a) const;
  const std::string& name() const { return name_; }
  std::vector<std::vector<int>> table() const;

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::string name_;
};

/// A map of sets between finite groups; check_hom decides whether it is a
/// homomorphism.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> images;

  int operator()(int g) const { return images[std::size_t(g)]; }
  bool injective() const;
  bool operator==(const GroupHom&) const = default;

  static GroupHom identity(GroupPtr g);
  /// The map from the trivial group.
  static GroupHom from_trivial(GroupPtr target);
  /// Composite this ∘ inner.
  GroupHom after(const GroupHom& inner) const;
};

struct HomReport {
  bool passes = true;
  /// First failing pair (g, h) in row-major scan; or identity failure (-1,-1).
  std::optional<std::pair<int, int>> witness;
  std::string message;
};

/// Exhaustive check of phi(gh) = phi(g)phi(h) and phi(e) = e.
HomReport check_hom(const GroupHom& phi);

/// One letter of a word in G1 ⊎ G2; factor is 1 or 2.
struct Letter {
  int factor = 1;
  int element = 0;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using RawWord = std::vector<Letter>;

/// Normal form h · r1 · r2 ⋯ rk: alternating nontrivial right-coset
/// representatives of phi_i(H) in G_i, preceded by an H-part.
struct ReducedWord {
  std::vector<Letter> letters;  // coset representatives
  int h = 0;                    // element of H

  bool operator==(const ReducedWord&) const = default;
  auto operator<=>(const ReducedWord&) const = default;
};

/// Pushout data H -> G1, H -> G2.
class AmalgamPresentation {
 public:
  AmalgamPresentation(GroupHom phi1, GroupHom phi2, std::string name = {});

  const GroupPtr& g1() const { return phi1_.target; }
  const GroupPtr& g2() const { return phi2_.target; }
  const GroupPtr& h() const { return phi1_.source; }
  const GroupHom& phi1() const { return phi1_; }
  const GroupHom& phi2() const { return phi2_; }
  const GroupHom& phi(int factor) const { return factor == 1 ? phi1_ : phi2_; }
  const FiniteGroup& group(int factor) const { return factor == 1 ? *g1() : *g2(); }
  const std::string& name() const { return name_; }

  /// True when both maps are injective, so normal forms exist.
  bool has_normal_forms() const { return normal_forms_; }
  /// Sorted coset representatives of phi_i(H) in G_i (smallest element
  /// index of each coset; the trivial coset is represented by e).
  const std::vector<int>& coset_representatives(int factor) const;

  /// The presentation with the same G1, G2 and H replaced by the trivial
  /// group (the free product G1 * G2).
  AmalgamPresentation free_product() const;

  /// Normal form of a raw word; throws DomainError when normal forms are
  /// unavailable or a letter is invalid.
  ReducedWord normal_form(const RawWord& w) const;
  ReducedWord normal_form(const ReducedWord& w) const { return normal_form(to_letters(w)); }
  /// A shortest raw word for the element: the H-part is absorbed into the
  /// first letter (or becomes a single factor-1 letter).
  RawWord to_letters(const ReducedWord& w) const;
  /// Minimal number of letters of a word representing the element.
  std::size_t length(const ReducedWord& w) const;
  ReducedWord multiply(const ReducedWord& a, const ReducedWord& b) const;
  ReducedWord inverse(const ReducedWord& a) const;

  void validate_letter(const Letter& l) const;

 private:
  void require_normal_forms() const;

  GroupHom phi1_;
  GroupHom phi2_;
  std::string name_;
  bool normal_forms_ = false;
  // Per factor (index 0 -> G1): coset representative and H-part of each
  // element g = phi(h_part[g]) * rep[g].
  std::vector<int> reps_[2];
  std::vector<int> rep_of_[2];
  std::vector<int> h_part_[2];
};

/// All elements of G1 *_H G2 of length <= degree, sorted by (length, normal
/// form), each once. Requires normal forms and degree <= config cap.
std::vector<ReducedWord> enumerate_reduced_words(const AmalgamPresentation& p, int degree);

}  // namespace amg
