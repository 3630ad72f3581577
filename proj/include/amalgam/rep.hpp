#pragma once

// Representations of finite groups over exact fields, and representations of
// amalgamated products obtained by gluing (V1, V2, c) triples.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/exactalg.hpp"
#include "amalgam/groups.hpp"

namespace amg {

using PresentationPtr = std::shared_ptr<const AmalgamPresentation>;

/// A representation storing one invertible matrix per group element.
class Representation {
 public:
  /// Validates rho(e) = I and rho(g)rho(h) = rho(gh) exhaustively.
  Representation(GroupPtr group, Field field, std::vector<Matrix> matrices);

  static Representation trivial(GroupPtr group, const Field& field, std::size_t dim = 1);
  /// Extends generator images to the whole group along the Cayley graph and
  /// validates the result; throws DomainError when they do not define a
  /// homomorphism.
  static Representation from_generators(GroupPtr group, const Field& field, std::size_t dim,
                                        const std::vector<std::pair<int, Matrix>>& generators);

  const GroupPtr& group() const { return group_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Matrix& operator()(int g) const { return matrices_[std::size_t(g)]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

  /// Pullback along a homomorphism into this representation's group.
  Representation restrict_along(const GroupHom& phi) const;
  /// Change of basis: g -> b^{-1} rho(g) b.
  Representation conjugated(const Matrix& b) const;
  /// Frobenius twist: entries raised to the p-th power.
  Representation twisted() const;

 private:
  GroupPtr group_;
  Field field_;
  std::size_t dim_ = 0;
  std::vector<Matrix> matrices_;
};

Representation direct_sum(const Representation& a, const Representation& b);
Representation tensor(const Representation& a, const Representation& b);

/// Basis of {X : X src[k] = dst[k] X for all k}, X of shape dst_dim x src_dim.
std::vector<Matrix> intertwiners(const Field& field, std::size_t src_dim, std::size_t dst_dim,
                                 const std::vector<Matrix>& src, const std::vector<Matrix>& dst);
/// Basis of Hom_G(V, W).
std::vector<Matrix> hom_space(const Representation& v, const Representation& w);
bool is_intertwiner(const Matrix& f, const Representation& v, const Representation& w);
/// An invertible intertwiner V -> W if one is found: basis elements first,
/// then pseudo-random combinations. Exact when dim Hom(V, W) <= 1.
std::optional<Matrix> find_isomorphism(const Representation& v, const Representation& w);

/// An object (V1, V2, c) of Rep(G1) x_{Rep(H)} Rep(G2).
struct GluedTriple {
  PresentationPtr presentation;
  Representation v1;
  Representation v2;
  Matrix c;  // V1 -> V2, an H-isomorphism
};

/// Throws DomainError if c is not invertible or not an H-morphism.
void validate_triple(const GluedTriple& t);

/// A representation of G1 *_H G2 on one space, given by the two factor
/// actions, which agree on H.
class AmalgamRep {
 public:
  AmalgamRep(PresentationPtr presentation, Representation rho1, Representation rho2);

  const PresentationPtr& presentation() const { return presentation_; }
  const Field& field() const { return rho1_.field(); }
  std::size_t dim() const { return rho1_.dim(); }
  const Representation& factor(int f) const { return f == 1 ? rho1_ : rho2_; }
  const Matrix& letter(const Letter& l) const;

 private:
  PresentationPtr presentation_;
  Representation rho1_;
  Representation rho2_;
};

/// G1 acts as rho1 and G2 acts by c^{-1} rho2(g) c on the space of V1.
AmalgamRep glue(const GluedTriple& t);
/// (rho restricted to G1, rho restricted to G2, identity).
GluedTriple split(const AmalgamRep& rho);

/// Whether (a, b) is a morphism of triples: a, b intertwine and b c = c' a.
bool is_triple_morphism(const GluedTriple& s, const GluedTriple& t, const Matrix& a, const Matrix& b);
/// Basis of morphisms (a, b) of triples s -> t, as a kernel problem.
std::vector<std::pair<Matrix, Matrix>> fibre_product_homs(const GluedTriple& s, const GluedTriple& t);

/// Basis of f with f rho_i(g) = rho'_i(g) f for every letter of both factors.
std::vector<Matrix> hom_space(const AmalgamRep& rho, const AmalgamRep& sigma);

/// Ordered product of letter matrices; the empty word gives I.
Matrix evaluate_word(const AmalgamRep& rho, const RawWord& w);
Matrix evaluate_word(const AmalgamRep& rho, const ReducedWord& w);

/// The two-dimensional V_a of C2 * C2: the first C2 acts by diag(1, -1) in
/// the standard basis, the second by +1 on (1,1) and -1 on (1,a); c = I.
/// Requires a not in {0, 1} and characteristic != 2.
GluedTriple va_triple(const Scalar& a);
AmalgamRep va_rep(const Scalar& a);

/// Z/4 * Z/6 over Q with generators acting by (0 -1; 1 0) and (1 -1; 1 0).
AmalgamRep sl2_rep();

struct Sl2Certificate {
  Matrix product;        // rho(g4) rho(g6)
  Scalar trace;
  bool is_plus_minus_identity = false;
  bool unipotent_part_nilpotent = false;  // (M - sI)^2 = 0, s = trace/2
  bool infinite_order = false;
  std::vector<bool> power_is_identity;    // k = 1..12
  bool g4_order_4 = false;
  bool g6_order_6 = false;
};

Sl2Certificate sl2_infinite_order_certificate(unsigned max_power = 12);

}  // namespace amg
