#pragma once

// Exact scalars over Q and GF(p^m) (m <= 3), and dense exact matrices.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace amg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unreadable input (files, presets, flags).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different fields.
class FieldMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configured size cap would be exceeded.
class SizeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class Scalar;

/// Element of GF(p^m) in the polynomial basis 1, t, t^2 modulo a fixed monic
/// irreducible of degree m. Carries its own modulus so it is self-describing.
struct FiniteElement {
  std::uint16_t p = 2;
  std::uint8_t m = 1;
  std::array<std::uint16_t, 3> modulus{};  // lower coefficients of t^m + ...
  std::array<std::uint16_t, 3> coeffs{};

  bool operator==(const FiniteElement&) const = default;
};

/// Description of a base field; cheap value type.
class Field {
 public:
  enum class Kind { Rational, Finite };

  static Field rationals();
  /// GF(p^m). Moduli: t^2+t+1 over GF(2), t^2+1 over GF(3), t^3+t+1 over
  /// GF(2); for other (p, m) the first monic irreducible in
  /// lexicographic order of (c_{m-1}, ..., c_0) is used.
  static Field finite(unsigned p, unsigned m = 1);
  /// Accepts "q", "Q", "p" or "p^m".
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  unsigned characteristic() const { return kind_ == Kind::Rational ? 0 : p_; }
  unsigned degree() const { return kind_ == Kind::Rational ? 1 : m_; }
  /// Number of elements; throws for Q.
  std::size_t size() const;
  const std::array<std::uint16_t, 3>& modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_rational(const mpq_class& value) const;
  /// Polynomial-basis element c0 + c1 t + ...; finite fields only.
  Scalar from_coeffs(std::span<const long> coeffs) const;
  /// The class of t (the prime-field generator 1 when m == 1).
  Scalar generator() const;
  /// All elements in index order; finite fields only.
  std::vector<Scalar> elements() const;

  /// "q" or "p^m".
  std::string name() const;

  bool operator==(const Field& other) const;

 private:
  Kind kind_ = Kind::Rational;
  std::uint16_t p_ = 0;
  std::uint8_t m_ = 1;
  std::array<std::uint16_t, 3> modulus_{};
};

/// An exact field element. Rationals are kept canonical by GMP.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<0>(value_).canonicalize(); }
  explicit Scalar(FiniteElement e) : value_(e) {}

  Field field() const;
  bool is_rational() const { return value_.index() == 0; }
  const mpq_class& rational() const { return std::get<0>(value_); }
  const FiniteElement& finite() const { return std::get<1>(value_); }

  bool is_zero() const;
  bool is_one() const;
  bool same_field(const Scalar& other) const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(unsigned long e) const;

  bool operator==(const Scalar& o) const;

  /// "a" or "a/b" for rationals, "p^m:[c0,c1,...]" for finite-field elements.
  std::string serialize() const;
  /// Short human form: "a", "a/b", or "c0+c1t+...".
  std::string pretty() const;
  /// Inverse of serialize(); also accepts plain integers for rationals.
  static Scalar parse(std::string_view text);

 private:
  std::variant<mpq_class, FiniteElement> value_;
};

/// x -> x^p, the absolute Frobenius of a finite field.
Scalar frobenius(const Scalar& x);

using Vector = std::vector<Scalar>;

/// Reduced row echelon data of a matrix.
struct Echelon;

/// Dense row-major exact matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, const std::vector<Vector>& rows);
  static Matrix from_ints(const Field& field,
                          std::initializer_list<std::initializer_list<long>> rows);
  static Matrix column(const Field& field, const Vector& v);
  /// Matrix whose columns are the given vectors (each of length rows).
  static Matrix from_columns(const Field& field, std::size_t rows,
                             const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Scalar> data() const { return data_; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  Matrix pow(unsigned e) const;
  bool operator==(const Matrix& o) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }
  Scalar trace() const;

  Echelon rref() const;
  std::size_t rank() const;
  /// Basis of {v : Mv = 0}; one vector per free column, with a 1 in that
  /// column and zeros in the other free columns.
  std::vector<Vector> kernel_basis() const;
  /// Pivot columns of the original matrix (a basis of the column space).
  std::vector<Vector> column_space_basis() const;
  std::optional<Matrix> inverse() const;
  /// Some v with Mv = b, or nullopt when the system is inconsistent.
  std::optional<Vector> solve(const Vector& b) const;
  /// Some X with MX = B, or nullopt.
  std::optional<Matrix> solve(const Matrix& b) const;

  std::string pretty() const;

 private:
  Field field_ = Field::rationals();
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Kronecker product: block (i, j) is A(i, j) * B.
Matrix kronecker(const Matrix& a, const Matrix& b);
/// Block-diagonal matrix diag(A, B).
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Entrywise Frobenius.
Matrix frobenius(const Matrix& m);

/// Checks that every scalar belongs to `field`; throws FieldMismatch.
void require_field(const Field& field, std::span<const Scalar> values);

/// Incremental echelon form over sparse rows, for large systems with few
/// nonzeros per row (e.g. equalities between unknowns).
class SparseEchelon {
 public:
  using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

  SparseEchelon(Field field, std::size_t cols);

  /// Adds a constraint row (sorted or not, duplicate columns are summed).
  /// Returns true when the row increased the rank.
  bool add_row(SparseRow row);
  std::size_t rank() const { return pivot_count_; }
  std::size_t cols() const { return cols_; }
  /// Kernel basis in the same normal form as Matrix::kernel_basis().
  std::vector<Vector> kernel_basis() const;

 private:
  SparseRow reduce(SparseRow row) const;

  Field field_;
  std::size_t cols_;
  std::size_t pivot_count_ = 0;
  std::vector<SparseRow> by_pivot_;  // indexed by pivot column, empty if none
};

}  // namespace amg
