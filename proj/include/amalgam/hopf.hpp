#pragma once

// The commutative Hopf algebra k^G of functions on a finite group, with its
// structure maps stored as explicit matrices over the delta basis.

#include <optional>
#include <string>
#include <vector>

#include "amalgam/exactalg.hpp"
#include "amalgam/groups.hpp"

namespace amg {

class FunctionHopfAlgebra {
 public:
  FunctionHopfAlgebra(GroupPtr group, Field field);

  const GroupPtr& group() const { return group_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return std::size_t(group_->order()); }

  /// Coefficient vector of delta_g.
  Vector delta(int g) const;
  Vector unit() const;
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Vector in k^{n*n}, index a*n + b for delta_a ⊗ delta_b.
  Vector comultiply(const Vector& f) const;
  Scalar counit(const Vector& f) const;
  Vector antipode(const Vector& f) const;

  /// Structure maps as matrices: (n*n) x n, 1 x n, n x n.
  const Matrix& comultiplication() const { return comult_; }
  const Matrix& counit_map() const { return counit_; }
  const Matrix& antipode_map() const { return antipode_; }

  /// Swaps the comultiplication columns of two basis elements; produces a
  /// deliberately broken structure for negative tests.
  FunctionHopfAlgebra with_swapped_coproducts(int g, int h) const;

 private:
  GroupPtr group_;
  Field field_;
  Matrix comult_;
  Matrix counit_;
  Matrix antipode_;
};

struct AxiomResult {
  std::string axiom;
  bool passes = true;
  std::optional<int> witness;  // basis element delta_g where it fails
};

struct HopfAxiomReport {
  std::vector<AxiomResult> axioms;
  bool passes() const;
};

/// Exhaustive check on the delta basis of: coassociativity, left and right
/// counit laws, both antipode laws, multiplicativity of comultiplication and
/// counit, and S^2 = id.
HopfAxiomReport verify_hopf_axioms(const FunctionHopfAlgebra& a);

/// A linear map between function algebras.
struct HopfMorphism {
  const FunctionHopfAlgebra* source = nullptr;
  const FunctionHopfAlgebra* target = nullptr;
  Matrix map;  // target.dim() x source.dim()
};

/// alpha(f) = f ∘ phi for phi : H -> G, as a map k^G -> k^H.
Matrix dualize_hom(const GroupHom& phi, const Field& field);

struct MorphismReport {
  bool unital = true;
  bool multiplicative = true;
  bool counital = true;
  bool comultiplicative = true;
  bool passes() const { return unital && multiplicative && counital && comultiplicative; }
};

MorphismReport check_hopf_morphism(const HopfMorphism& m);

}  // namespace amg
