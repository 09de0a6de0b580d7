#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace persrep {

enum class RingKind { Rational, Integer, PrimeField };

// Scalars are stored as GMP rationals and interpreted through a Ring:
// integers have denominator 1, residues live in [0, p).
using Scalar = mpq_class;

// Coefficient ring: ℚ, ℤ, or 𝔽ₚ.
class Ring {
 public:
  static Ring rational() { return Ring(RingKind::Rational, 0); }
  static Ring integer() { return Ring(RingKind::Integer, 0); }
  // Throws ValidationError unless p is prime.
  static Ring prime_field(std::uint64_t p);

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integer; }
  std::string describe() const;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(long v) const { return normalize(Scalar(v)); }
  // Parses "7", "-3", "a/b". Fractions are rejected over ℤ and inverted over 𝔽ₚ.
  Scalar parse(const std::string& text) const;
  std::string format(const Scalar& s) const;

  Scalar normalize(const Scalar& s) const;
  bool is_zero(const Scalar& s) const { return sgn(s) == 0; }
  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  // Field inverse; throws on zero or over ℤ.
  Scalar inv(const Scalar& a) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(RingKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  RingKind kind_;
  std::uint64_t p_;
};

// Dense matrix over a Ring, row-major.
class Matrix {
 public:
  Matrix() : ring_(Ring::rational()) {}
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  static Matrix identity(Ring ring, std::size_t n);
  static Matrix from_rows(Ring ring, const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Scalar> column(std::size_t j) const;

  void append_row(std::span<const Scalar> r);
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Vertical concatenation; column counts must agree.
Matrix stack(const Matrix& top, const Matrix& bottom);

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Exact Gauss-Jordan elimination over a field. Pivot rule: leftmost
// column first, smallest row index among nonzero candidates.
RowEchelon row_echelon(const Matrix& m);
std::size_t rank(const Matrix& m);
// Rows form a basis of { x : m·xᵀ = 0 }.
Matrix kernel_basis(const Matrix& m);
// Exact determinant over any shipped ring.
Scalar determinant(const Matrix& m);

struct SmithForm {
  std::vector<mpz_class> factors;  // d₁ | d₂ | … , all > 0
  Matrix left;                     // unimodular, rows × rows
  Matrix right;                    // unimodular, cols × cols
};

// left · m · right = diag(factors). Integer ring only.
SmithForm smith_normal_form(const Matrix& m);

// Finitely presented module R^n / rowspace(relations).
struct FpPresentation {
  Ring ring = Ring::rational();
  std::size_t generators = 0;
  Matrix relations;  // m × generators

  FpPresentation() = default;
  FpPresentation(Ring r, std::size_t n) : ring(r), generators(n), relations(r, 0, n) {}
  FpPresentation(Ring r, std::size_t n, Matrix rel);
};

// Isomorphism type of a finitely generated abelian group.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Field ring only: n − rank(relations).
std::size_t dimension(const FpPresentation& p);
AbelianInvariants abelian_invariants(const FpPresentation& p);
bool presentation_iso(const FpPresentation& a, const FpPresentation& b);
// Dimension over a field, free rank + torsion count over ℤ; zero iff the module is zero.
bool is_zero_module(const FpPresentation& p);

// Whether v lies in the R-span of the rows of `rows`.
bool in_row_span(const Matrix& rows, std::span<const Scalar> v);

// Maps between presented modules are matrices with target-generator rows
// and source-generator columns: column j is the image of source generator j.

// Every relation of src is sent into the relation span of dst.
bool map_is_well_defined(const FpPresentation& src, const FpPresentation& dst, const Matrix& map);
// Columns of a − b lie in the relation span of dst.
bool maps_equal_modulo(const Matrix& a, const Matrix& b, const FpPresentation& dst);
// Field ring only: rank of the induced map src → dst.
std::size_t induced_rank(const FpPresentation& src, const FpPresentation& dst, const Matrix& map);
// Cokernel of the induced map, presented on dst's generators.
FpPresentation induced_cokernel(const FpPresentation& dst, const Matrix& map);
// Whether the induced map src → dst is an isomorphism (fields and ℤ).
bool induced_is_iso(const FpPresentation& src, const FpPresentation& dst, const Matrix& map);

}  // namespace persrep
