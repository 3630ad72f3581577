#pragma once

// The functor Fr+ on representations over GF(p^m): the image of the
// invariants-to-coinvariants map H^0(S, V^{⊗p}) -> V^{⊗p} -> H_0(S, V^{⊗p})
// for S = Z/p (cyclic rotation of the factors) or S = S_p.
//
// Tensor basis: e_{i1} ⊗ ... ⊗ e_{ip} has index i1 d^{p-1} + ... + ip, which
// matches kronecker().

#include <optional>
#include <string>
#include <vector>

#include "amalgam/exactalg.hpp"
#include "amalgam/rep.hpp"

namespace amg {

enum class SymmetryChoice { Cyclic, Symmetric };
std::string to_string(SymmetryChoice s);

/// The permutation action on V^{⊗p}: the rotation sigma for Cyclic, the
/// adjacent transpositions for Symmetric. sigma^p = I.
struct TensorPowerAction {
  Field field;
  std::size_t base_dim = 0;
  unsigned p = 0;
  SymmetryChoice choice = SymmetryChoice::Cyclic;
  std::vector<Matrix> generators;

  std::size_t tensor_dim() const { return generators.empty() ? 0 : generators.front().rows(); }
};

/// sigma: e_{i1} ⊗ ... ⊗ e_{ip} -> e_{ip} ⊗ e_{i1} ⊗ ... ⊗ e_{i(p-1)}.
Matrix cyclic_shift(const Field& field, std::size_t d, unsigned p);
TensorPowerAction tensor_power_action(const Field& field, std::size_t d, SymmetryChoice choice);

/// The group-independent linear algebra of Fr+ on a d-dimensional space.
struct FrPlusSpace {
  TensorPowerAction action;
  std::vector<Vector> invariants;   // basis of H^0
  Matrix projection;                // V^{⊗p} -> H_0 coordinates
  std::vector<Vector> image_lifts;  // vectors of H^0 whose classes span the image
  Matrix image_basis;               // their classes, as columns in H_0 coordinates
  Matrix coordinates;               // dim x tensor_dim: left inverse of image_basis after projection

  std::size_t dim() const { return image_lifts.size(); }
  std::size_t coinvariant_dim() const { return projection.rows(); }
  /// Coordinates in the image basis of the class of a tensor; throws if the
  /// class is not in the image.
  Vector image_coordinates(const Vector& tensor) const;
};

/// Throws DomainError in characteristic 0 and SizeError if d^p exceeds the
/// tensor cap.
FrPlusSpace fr_plus_space(const Field& field, std::size_t d, SymmetryChoice choice = SymmetryChoice::Cyclic);

struct FrPlusResult {
  FrPlusSpace space;
  Representation action;  // induced group action on the image
};

FrPlusResult fr_plus(const Representation& v, SymmetryChoice choice = SymmetryChoice::Cyclic);

/// v^{⊗p} as a tensor vector.
Vector tensor_power(const Vector& v, unsigned p);

/// V^{(p)}: the same vectors with scalars acting through Frobenius. In the
/// basis e_i ⊗ 1, the set-level map v -> v ⊗ 1 sends coordinates c to c^p.
struct TwistedSpace {
  Field field;
  std::size_t dim = 0;

  Vector from_untwisted(const Vector& v) const;
  /// Checks (lambda v) ⊗ 1 = lambda^p (v ⊗ 1) on basis scalings by every
  /// listed scalar.
  bool semilinear_on_basis(const std::vector<Scalar>& scalars) const;
};

struct TMapReport {
  Matrix matrix;                 // columns t(e_i) in image coordinates
  bool bijective = false;
  bool additive = true;          // t(v + w) = t(v) + t(w) on samples
  bool semilinear = true;        // t(lambda v) = lambda^p t(v) on samples
  bool matches_twisted_matrix = true;  // t(v) = matrix * frob(v) on samples
  std::size_t samples = 0;
};

/// Evaluates v -> [v ⊗ ... ⊗ v] on the basis, pairwise sums of basis
/// vectors, and `random_samples` pseudo-random vectors.
TMapReport t_map(const FrPlusSpace& space, unsigned random_samples = 20, unsigned seed = 1);
Vector t_map_apply(const FrPlusSpace& space, const Vector& v);

/// Fr+(phi) for a linear map phi: V -> W between the underlying spaces.
Matrix fr_plus_morphism(const FrPlusSpace& source, const FrPlusSpace& target, const Matrix& phi);
/// Fr+(phi) for an intertwiner; throws DomainError otherwise.
Matrix fr_plus_morphism(const FrPlusResult& source, const FrPlusResult& target, const Representation& v,
                        const Representation& w, const Matrix& phi);

struct FaithfulnessReport {
  std::size_t hom_dim = 0;          // dim Hom(V, W) = dim Hom(V, W)^{(p)}
  std::size_t fr_hom_dim = 0;       // dim Hom(Fr+ V, Fr+ W)
  std::size_t image_rank = 0;       // rank of phi -> Fr+(phi) on a basis
  bool images_are_intertwiners = true;
  bool injective() const { return image_rank == hom_dim; }
  bool bijective() const { return injective() && image_rank == fr_hom_dim && images_are_intertwiners; }
};

FaithfulnessReport faithfulness_probe(const Representation& v, const Representation& w,
                                      SymmetryChoice choice = SymmetryChoice::Cyclic);

struct ShortExactSequence {
  Representation a;
  Representation v;
  Representation b;
  Matrix inclusion;   // A -> V
  Matrix quotient;    // V -> B
};

struct ExactnessReport {
  std::size_t dim_a = 0, dim_v = 0, dim_b = 0;
  bool injective = false;
  bool surjective = false;
  bool composite_zero = false;
  bool image_equals_kernel = false;
  bool exact() const { return injective && surjective && composite_zero && image_equals_kernel; }
};

/// Throws DomainError when the input sequence is not an exact sequence of
/// representations.
ExactnessReport exactness_probe(const ShortExactSequence& s, SymmetryChoice choice = SymmetryChoice::Cyclic);

struct SymmetryComparison {
  std::size_t cyclic_dim = 0;
  std::size_t symmetric_dim = 0;
  /// The cyclic image maps isomorphically onto the symmetric image under
  /// H_0(Z/p) -> H_0(S_p).
  bool images_coincide = false;
  /// In t-coordinates both induced actions equal the Frobenius twist.
  bool actions_agree = false;
};

SymmetryComparison compare_symmetry_choices(const Representation& v);

}  // namespace amg
