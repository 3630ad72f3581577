#include "amalgam/exactalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace amg {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Monic t^m + c_{m-1} t^{m-1} + ... + c_0 has no root in GF(p).
bool has_no_root(unsigned p, unsigned m, const std::array<std::uint16_t, 3>& c) {
  for (unsigned x = 0; x < p; ++x) {
    std::uint64_t value = 1;  // leading t^m
    for (unsigned k = 0; k < m; ++k) value = value * x % p;
    std::uint64_t xp = 1;
    for (unsigned k = 0; k < m; ++k) {
      value = (value + c[k] * xp) % p;
      xp = xp * x % p;
    }
    if (value == 0) return false;
  }
  return true;
}

// For m <= 3 a polynomial without roots is irreducible.
std::array<std::uint16_t, 3> find_modulus(unsigned p, unsigned m) {
  if (m == 1) return {0, 0, 0};
  std::uint64_t total = 1;
  for (unsigned k = 0; k < m; ++k) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::array<std::uint16_t, 3> c{};
    std::uint64_t rest = code;
    // lexicographic in (c_{m-1}, ..., c_0): c_0 varies fastest
    for (unsigned k = 0; k < m; ++k) {
      c[k] = static_cast<std::uint16_t>(rest % p);
      rest /= p;
    }
    if (has_no_root(p, m, c)) return c;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable
}

const std::array<std::uint16_t, 3>& cached_modulus(unsigned p, unsigned m) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::array<std::uint16_t, 3>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({p, m});
  if (it == cache.end()) it = cache.emplace(std::pair{p, m}, find_modulus(p, m)).first;
  return it->second;
}

FiniteElement make_element(unsigned p, unsigned m, const std::array<std::uint16_t, 3>& mod) {
  FiniteElement e;
  e.p = static_cast<std::uint16_t>(p);
  e.m = static_cast<std::uint8_t>(m);
  e.modulus = mod;
  return e;
}

bool same_finite_field(const FiniteElement& a, const FiniteElement& b) {
  return a.p == b.p && a.m == b.m && a.modulus == b.modulus;
}

FiniteElement fe_add(const FiniteElement& a, const FiniteElement& b) {
  FiniteElement r = a;
  for (unsigned k = 0; k < a.m; ++k) r.coeffs[k] = static_cast<std::uint16_t>((a.coeffs[k] + b.coeffs[k]) % a.p);
  return r;
}

FiniteElement fe_neg(const FiniteElement& a) {
  FiniteElement r = a;
  for (unsigned k = 0; k < a.m; ++k) r.coeffs[k] = static_cast<std::uint16_t>((a.p - a.coeffs[k]) % a.p);
  return r;
}

FiniteElement fe_mul(const FiniteElement& a, const FiniteElement& b) {
  const std::uint64_t p = a.p;
  const unsigned m = a.m;
  std::array<std::uint64_t, 5> prod{};
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a.coeffs[i]) * b.coeffs[j]) % p;
  // t^m = -(c_0 + c_1 t + ... + c_{m-1} t^{m-1})
  for (int d = 2 * int(m) - 2; d >= int(m); --d) {
    const std::uint64_t top = prod[d];
    if (top == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < m; ++i) {
      const std::uint64_t sub = top * a.modulus[i] % p;
      prod[d - m + i] = (prod[d - m + i] + p - sub) % p;
    }
  }
  FiniteElement r = a;
  for (unsigned k = 0; k < m; ++k) r.coeffs[k] = static_cast<std::uint16_t>(prod[k]);
  return r;
}

bool fe_is_zero(const FiniteElement& a) {
  for (unsigned k = 0; k < a.m; ++k)
    if (a.coeffs[k] != 0) return false;
  return true;
}

FiniteElement fe_one(const FiniteElement& like) {
  FiniteElement r = like;
  r.coeffs = {1, 0, 0};
  return r;
}

FiniteElement fe_pow(FiniteElement base, unsigned long e) {
  FiniteElement acc = fe_one(base);
  while (e > 0) {
    if (e & 1) acc = fe_mul(acc, base);
    base = fe_mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t fe_order(const FiniteElement& a) {
  std::uint64_t q = 1;
  for (unsigned k = 0; k < a.m; ++k) q *= a.p;
  return q;
}

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
  throw FieldMismatch("field mismatch: " + a.serialize() + " vs " + b.serialize());
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::rationals() { return Field{}; }

Field Field::finite(unsigned p, unsigned m) {
  if (!is_prime(p) || p > 65521) throw DomainError("characteristic must be a prime below 2^16, got " + std::to_string(p));
  if (m < 1 || m > 3) throw DomainError("finite field degree must be 1..3, got " + std::to_string(m));
  Field f;
  f.kind_ = Kind::Finite;
  f.p_ = static_cast<std::uint16_t>(p);
  f.m_ = static_cast<std::uint8_t>(m);
  f.modulus_ = cached_modulus(p, m);
  return f;
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  const auto caret = text.find('^');
  try {
    const std::string ps(text.substr(0, caret));
    std::size_t used = 0;
    const unsigned long p = std::stoul(ps, &used);
    if (used != ps.size()) throw InputError("");
    unsigned long m = 1;
    if (caret != std::string_view::npos) {
      const std::string ms(text.substr(caret + 1));
      m = std::stoul(ms, &used);
      if (used != ms.size()) throw InputError("");
    }
    return finite(static_cast<unsigned>(p), static_cast<unsigned>(m));
  } catch (const DomainError& e) {
    throw InputError(std::string("bad field '") + std::string(text) + "': " + e.what());
  } catch (const std::exception&) {
    throw InputError(std::string("bad field '") + std::string(text) + "' (expected q, p or p^m)");
  }
}

std::size_t Field::size() const {
  if (is_rational()) throw DomainError("Q is infinite");
  std::size_t q = 1;
  for (unsigned k = 0; k < m_; ++k) q *= p_;
  return q;
}

Scalar Field::zero() const {
  if (is_rational()) return Scalar(mpq_class(0));
  return Scalar(make_element(p_, m_, modulus_));
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  if (is_rational()) return Scalar(mpq_class(value));
  FiniteElement e = make_element(p_, m_, modulus_);
  long r = value % long(p_);
  if (r < 0) r += p_;
  e.coeffs[0] = static_cast<std::uint16_t>(r);
  return Scalar(e);
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (is_rational()) return Scalar(value);
  const Scalar num = from_int(mpz_class(value.get_num() % p_).get_si());
  const Scalar den = from_int(mpz_class(value.get_den() % p_).get_si());
  if (den.is_zero()) throw DomainError("denominator vanishes in characteristic " + std::to_string(p_));
  return num / den;
}

Scalar Field::from_coeffs(std::span<const long> coeffs) const {
  if (is_rational()) throw DomainError("polynomial coefficients need a finite field");
  if (coeffs.size() > m_) throw DomainError("too many coefficients for " + name());
  FiniteElement e = make_element(p_, m_, modulus_);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    long r = coeffs[k] % long(p_);
    if (r < 0) r += p_;
    e.coeffs[k] = static_cast<std::uint16_t>(r);
  }
  return Scalar(e);
}

Scalar Field::generator() const {
  if (is_rational()) throw DomainError("Q has no finite generator");
  if (m_ == 1) return one();
  const std::array<long, 2> c{0, 1};
  return from_coeffs(c);
}

std::vector<Scalar> Field::elements() const {
  const std::size_t q = size();
  std::vector<Scalar> out;
  out.reserve(q);
  for (std::size_t code = 0; code < q; ++code) {
    FiniteElement e = make_element(p_, m_, modulus_);
    std::size_t rest = code;
    for (unsigned k = 0; k < m_; ++k) {
      e.coeffs[k] = static_cast<std::uint16_t>(rest % p_);
      rest /= p_;
    }
    out.emplace_back(e);
  }
  return out;
}

std::string Field::name() const {
  if (is_rational()) return "q";
  return std::to_string(p_) + "^" + std::to_string(m_);
}

bool Field::operator==(const Field& other) const {
  if (kind_ != other.kind_) return false;
  if (is_rational()) return true;
  return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

// ---------------------------------------------------------------- Scalar

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field::finite(finite().p, finite().m);
}

bool Scalar::is_zero() const {
  if (is_rational()) return rational() == 0;
  return fe_is_zero(finite());
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == 1;
  const auto& e = finite();
  if (e.coeffs[0] != 1) return false;
  for (unsigned k = 1; k < e.m; ++k)
    if (e.coeffs[k] != 0) return false;
  return true;
}

bool Scalar::same_field(const Scalar& o) const {
  if (value_.index() != o.value_.index()) return false;
  return is_rational() || same_finite_field(finite(), o.finite());
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (!same_field(o)) mismatch(*this, o);
  if (is_rational()) return Scalar(mpq_class(rational() + o.rational()));
  return Scalar(fe_add(finite(), o.finite()));
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (!same_field(o)) mismatch(*this, o);
  if (is_rational()) return Scalar(mpq_class(rational() - o.rational()));
  return Scalar(fe_add(finite(), fe_neg(o.finite())));
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (!same_field(o)) mismatch(*this, o);
  if (is_rational()) return Scalar(mpq_class(rational() * o.rational()));
  return Scalar(fe_mul(finite(), o.finite()));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rational()));
  return Scalar(fe_neg(finite()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (is_rational()) return Scalar(mpq_class(1 / rational()));
  return Scalar(fe_pow(finite(), fe_order(finite()) - 2));
}

Scalar Scalar::pow(unsigned long e) const {
  if (is_rational()) {
    mpq_class acc = 1;
    mpq_class base = rational();
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return Scalar(acc);
  }
  return Scalar(fe_pow(finite(), e));
}

bool Scalar::operator==(const Scalar& o) const {
  if (!same_field(o)) return false;
  if (is_rational()) return rational() == o.rational();
  return finite().coeffs == o.finite().coeffs;
}

std::string Scalar::serialize() const {
  if (is_rational()) return rational().get_str();
  const auto& e = finite();
  std::string out = std::to_string(e.p) + "^" + std::to_string(e.m) + ":[";
  for (unsigned k = 0; k < e.m; ++k) {
    if (k) out += ",";
    out += std::to_string(e.coeffs[k]);
  }
  return out + "]";
}

std::string Scalar::pretty() const {
  if (is_rational()) return rational().get_str();
  const auto& e = finite();
  std::string out;
  for (unsigned k = 0; k < e.m; ++k) {
    if (e.coeffs[k] == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0 || e.coeffs[k] != 1) out += std::to_string(e.coeffs[k]);
    if (k == 1) out += "t";
    if (k == 2) out += "t^2";
  }
  return out.empty() ? "0" : out;
}

Scalar Scalar::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0 || text.empty())
      throw InputError("bad rational scalar '" + std::string(text) + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Scalar(q);
  }
  const Field field = Field::parse(text.substr(0, colon));
  if (field.is_rational()) throw InputError("bad finite-field scalar '" + std::string(text) + "'");
  std::string_view body = text.substr(colon + 1);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw InputError("bad finite-field scalar '" + std::string(text) + "'");
  body = body.substr(1, body.size() - 2);
  std::vector<long> coeffs;
  std::stringstream ss{std::string(body)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0 || v >= long(field.characteristic())) throw InputError("");
      coeffs.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad coefficient '" + item + "' in '" + std::string(text) + "'");
    }
  }
  if (coeffs.size() != field.degree())
    throw InputError("expected " + std::to_string(field.degree()) + " coefficients in '" + std::string(text) + "'");
  return field.from_coeffs(coeffs);
}

Scalar frobenius(const Scalar& x) {
  if (x.is_rational()) throw DomainError("frobenius needs positive characteristic");
  return x.pow(x.finite().p);
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    require_field(field, rows[i]);
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    Vector v;
    for (long x : r) v.push_back(field.from_int(x));
    out.push_back(std::move(v));
  }
  return from_rows(field, out);
}

Matrix Matrix::column(const Field& field, const Vector& v) {
  require_field(field, v);
  Matrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DomainError("column length mismatch");
    require_field(field, cols[j]);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + std::ptrdiff_t(i * cols_), data_.begin() + std::ptrdiff_t((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

namespace {
void require_same(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("matrix fields differ: " + a.field().name() + " vs " + b.field().name());
}
}  // namespace

Matrix Matrix::operator+(const Matrix& o) const {
  require_same(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("shape mismatch in +");
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("shape mismatch in -");
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same(*this, o);
  if (cols_ != o.rows_) throw DomainError("shape mismatch in *");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw DomainError("shape mismatch in matrix-vector product");
  Vector r(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::pow(unsigned e) const {
  if (!is_square()) throw DomainError("pow of non-square matrix");
  Matrix acc = identity(field_, rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const { return is_square() && *this == identity(field_, rows_); }

Scalar Matrix::trace() const {
  if (!is_square()) throw DomainError("trace of non-square matrix");
  Scalar t = field_.zero();
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

// Fraction-free forward elimination (pivot: first nonzero entry in the
// column, scanning rows top-down), then normalization and back-substitution.
Echelon Matrix::rref() const {
  Matrix a = *this;
  std::vector<std::size_t> pivots;
  Scalar previous = field_.one();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t found = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (!a(i, c).is_zero()) {
        found = i;
        break;
      }
    if (found == rows_) continue;
    if (found != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(found, j), a(r, j));
    const Scalar pivot = a(r, c);
    if (!field_.is_rational()) {
      // No coefficient growth over GF(q): plain elimination, skipping zero rows.
      const Scalar inv = pivot.inverse();
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (a(i, c).is_zero()) continue;
        const Scalar factor = a(i, c) * inv;
        for (std::size_t j = c + 1; j < cols_; ++j)
          if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
        a(i, c) = field_.zero();
      }
      pivots.push_back(c);
      ++r;
      continue;
    }
    for (std::size_t i = r + 1; i < rows_; ++i) {
      const Scalar factor = a(i, c);
      for (std::size_t j = c + 1; j < cols_; ++j) a(i, j) = (pivot * a(i, j) - factor * a(r, j)) / previous;
      a(i, c) = field_.zero();
    }
    previous = pivot;
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const Scalar inv = a(k, pivots[k]).inverse();
    for (std::size_t j = pivots[k]; j < cols_; ++j)
      if (!a(k, j).is_zero()) a(k, j) *= inv;
  }
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Scalar factor = a(i, pc);
      if (factor.is_zero()) continue;
      for (std::size_t j = pc; j < cols_; ++j)
        if (!a(k, j).is_zero()) a(i, j) -= factor * a(k, j);
    }
  }
  return Echelon{std::move(a), std::move(pivots)};
}

std::size_t Matrix::rank() const { return rref().pivots.size(); }

std::vector<Vector> Matrix::kernel_basis() const {
  const Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols_, field_.zero());
    v[f] = field_.one();
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> Matrix::column_space_basis() const {
  const Echelon e = rref();
  std::vector<Vector> out;
  for (auto c : e.pivots) out.push_back(col(c));
  return out;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) throw DomainError("inverse of non-square matrix");
  const Echelon e = hstack(*this, identity(field_, rows_)).rref();
  if (e.pivots.size() < rows_ || (rows_ > 0 && e.pivots[rows_ - 1] >= cols_)) return std::nullopt;
  Matrix inv(field_, rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) inv(i, j) = e.reduced(i, cols_ + j);
  return inv;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  require_same(*this, b);
  if (b.rows() != rows_) throw DomainError("shape mismatch in solve");
  const Echelon e = hstack(*this, b).rref();
  Matrix x(field_, cols_, b.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] >= cols_) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.reduced(k, cols_ + j);
  }
  return x;
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
  auto x = solve(column(field_, b));
  if (!x) return std::nullopt;
  return x->col(0);
}

std::string Matrix::pretty() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += " ";
      out += (*this)(i, j).pretty();
    }
  }
  return out + "]";
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  Matrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  if (a.rows() != b.rows()) throw DomainError("hstack row mismatch");
  Matrix r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  if (a.cols() != b.cols()) throw DomainError("vstack column mismatch");
  Matrix r(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

Matrix frobenius(const Matrix& m) {
  Matrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = frobenius(m(i, j));
  return r;
}

void require_field(const Field& field, std::span<const Scalar> values) {
  const Scalar probe = field.zero();
  for (const auto& v : values)
    if (!v.same_field(probe)) throw FieldMismatch("entry " + v.serialize() + " is not in field " + field.name());
}

// ---------------------------------------------------------------- SparseEchelon

namespace {

using SparseRow = SparseEchelon::SparseRow;

void normalize_row(SparseRow& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow merged;
  for (auto& [c, v] : row) {
    if (!merged.empty() && merged.back().first == c)
      merged.back().second += v;
    else
      merged.emplace_back(c, std::move(v));
  }
  std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
  row = std::move(merged);
}

// row - factor * other, both sorted.
SparseRow axpy(const SparseRow& row, const Scalar& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.emplace_back(other[j].first, -(factor * other[j].second));
      ++j;
    } else {
      Scalar v = row[i].second - factor * other[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseEchelon::SparseEchelon(Field field, std::size_t cols) : field_(std::move(field)), cols_(cols), by_pivot_(cols) {}

SparseRow SparseEchelon::reduce(SparseRow row) const {
  while (!row.empty()) {
    const auto& [lead, coeff] = row.front();
    const SparseRow& pivot_row = by_pivot_[lead];
    if (pivot_row.empty()) break;
    row = axpy(row, coeff, pivot_row);
  }
  return row;
}

bool SparseEchelon::add_row(SparseRow row) {
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw DomainError("sparse row column out of range");
    if (!v.same_field(field_.zero())) throw FieldMismatch("sparse row entry not in " + field_.name());
  }
  normalize_row(row);
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Scalar inv = row.front().second.inverse();
  for (auto& e : row) e.second *= inv;
  by_pivot_[row.front().first] = std::move(row);
  ++pivot_count_;
  return true;
}

std::vector<Vector> SparseEchelon::kernel_basis() const {
  // Back-substitute into reduced row echelon form, highest pivot first.
  std::vector<SparseRow> reduced(cols_);
  for (std::size_t c = cols_; c-- > 0;) {
    if (by_pivot_[c].empty()) continue;
    SparseRow row = by_pivot_[c];
    for (;;) {
      auto it = std::find_if(row.begin() + 1, row.end(), [&](const auto& e) { return !reduced[e.first].empty(); });
      if (it == row.end()) break;
      const Scalar factor = it->second;
      row = axpy(row, factor, reduced[it->first]);
    }
    reduced[c] = std::move(row);
  }
  // Column f appears in the reduced rows that depend on it.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> users(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t k = 1; k < reduced[c].size(); ++k) users[reduced[c][k].first].emplace_back(c, reduced[c][k].second);
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (!by_pivot_[f].empty()) continue;
    Vector v(cols_, field_.zero());
    v[f] = field_.one();
    for (const auto& [c, a] : users[f]) v[c] = -a;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace amg
