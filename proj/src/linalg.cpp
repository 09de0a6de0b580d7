#include "persrep/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "persrep/error.hpp"

namespace persrep {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_field(const Ring& ring, const char* what) {
  if (!ring.is_field()) throw Unsupported(std::string(what) + " requires a field; use smith_normal_form over the integers");
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw InstanceMismatch("ring mismatch: " + a.describe() + " vs " + b.describe());
}

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix to_integers(const Matrix& m) {
  IntMatrix a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw ValidationError("non-integral entry in integer matrix");
      a[i][j] = m(i, j).get_num();
    }
  return a;
}

Matrix from_integers(const IntMatrix& a, std::size_t cols) {
  Matrix m(Ring::integer(), a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a[i][j];
  return m;
}

IntMatrix int_identity(std::size_t n) {
  IntMatrix a(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

}  // namespace

// ---------------------------------------------------------------- Ring

Ring Ring::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError("prime_field modulus " + std::to_string(p) + " is not prime");
  return Ring(RingKind::PrimeField, p);
}

std::string Ring::describe() const {
  switch (kind_) {
    case RingKind::Rational: return "rational";
    case RingKind::Integer: return "integer";
    case RingKind::PrimeField: return "prime_field(" + std::to_string(p_) + ")";
  }
  return "?";
}

Scalar Ring::normalize(const Scalar& s) const {
  switch (kind_) {
    case RingKind::Rational: {
      Scalar c(s);
      c.canonicalize();
      return c;
    }
    case RingKind::Integer:
      if (s.get_den() != 1) throw ValidationError("non-integral scalar " + s.get_str() + " over the integers");
      return s;
    case RingKind::PrimeField: {
      mpz_class p(static_cast<unsigned long>(p_));
      mpz_class num = s.get_num() % p;
      if (num < 0) num += p;
      if (s.get_den() == 1) return Scalar(num);
      mpz_class den = s.get_den() % p;
      mpz_class den_inv;
      if (den == 0 || mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw ValidationError("denominator not invertible mod " + std::to_string(p_));
      mpz_class r = (num * den_inv) % p;
      return Scalar(r);
    }
  }
  return s;
}

Scalar Ring::parse(const std::string& text) const {
  Scalar q;
  if (text.empty() || q.set_str(text, 10) != 0) throw ValidationError("cannot parse scalar '" + text + "'");
  if (sgn(q.get_den()) == 0) throw ValidationError("zero denominator in scalar '" + text + "'");
  q.canonicalize();
  return normalize(q);
}

std::string Ring::format(const Scalar& s) const { return s.get_str(); }

Scalar Ring::inv(const Scalar& a) const {
  if (!is_field()) throw Unsupported("inverse over the integers");
  if (is_zero(a)) throw Error("inverse of zero");
  if (kind_ == RingKind::Rational) return 1 / a;
  return normalize(Scalar(mpz_class(1), a.get_num()));
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Ring ring, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  Matrix m(ring, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void Matrix::append_row(std::span<const Scalar> r) {
  if (r.size() != cols_)
    throw ValidationError("row of length " + std::to_string(r.size()) + " appended to matrix with " +
                          std::to_string(cols_) + " columns");
  for (const auto& x : r) data_.push_back(ring_.normalize(x));
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.cols_ != b.rows_) throw ValidationError("matrix product dimension mismatch");
  Matrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  for (auto& x : c.data_) x = c.ring_.normalize(x);
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix sum dimension mismatch");
  Matrix c(a.ring_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.ring_.add(a.data_[i], b.data_[i]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix difference dimension mismatch");
  Matrix c(a.ring_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.ring_.sub(a.data_[i], b.data_[i]);
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  require_same_ring(top.ring(), bottom.ring());
  if (top.cols() != bottom.cols()) throw ValidationError("stack: column count mismatch");
  Matrix out = top;
  for (std::size_t i = 0; i < bottom.rows(); ++i) out.append_row(bottom.row(i));
  return out;
}

// ---------------------------------------------------------------- elimination

RowEchelon row_echelon(const Matrix& m) {
  require_field(m.ring(), "row_echelon");
  const Ring& ring = m.ring();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && ring.is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = ring.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = ring.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || ring.is_zero(a(i, c))) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = ring.sub(a(i, j), ring.mul(f, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(ring, 0, a.cols());
  for (std::size_t i = 0; i < r; ++i) reduced.append_row(a.row(i));
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  require_field(m.ring(), "kernel_basis");
  const Ring& ring = m.ring();
  auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  Matrix basis(ring, 0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = ring.neg(ech.reduced(r, f));
    basis.append_row(v);
  }
  return basis;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
  // Integers embed in ℚ; eliminate there and map back.
  const Ring work = m.ring().kind() == RingKind::Integer ? Ring::rational() : m.ring();
  std::vector<Scalar> a(m.rows() * m.cols());
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && work.is_zero(a[p * n + c])) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
      det = work.neg(det);
    }
    det = work.mul(det, a[c * n + c]);
    Scalar inv = work.inv(a[c * n + c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (work.is_zero(a[i * n + c])) continue;
      Scalar f = work.mul(a[i * n + c], inv);
      for (std::size_t j = c; j < n; ++j) a[i * n + j] = work.sub(a[i * n + j], work.mul(f, a[c * n + j]));
    }
  }
  return m.ring().normalize(det);
}

// ---------------------------------------------------------------- Smith normal form

SmithForm smith_normal_form(const Matrix& m) {
  if (m.ring().kind() != RingKind::Integer)
    throw Unsupported("smith_normal_form requires the integer ring; use rank over fields");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = to_integers(m);
  IntMatrix left = int_identity(rows);
  IntMatrix right = int_identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(left[i], left[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : right) std::swap(r[i], r[j]);
  };
  // row_i -= q·row_t
  auto row_axpy = [&](std::size_t i, std::size_t t, const mpz_class& q) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[t][j];
    for (std::size_t j = 0; j < rows; ++j) left[i][j] -= q * left[t][j];
  };
  auto col_axpy = [&](std::size_t j, std::size_t t, const mpz_class& q) {
    for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
    for (std::size_t i = 0; i < cols; ++i) right[i][j] -= q * right[i][t];
  };

  std::vector<mpz_class> factors;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest absolute value in the trailing block; ties by row-major position.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_axpy(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_axpy(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t onto the diagonal.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) { bi = t; bj = j; }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Enforce d_t | every trailing entry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = 0; c < cols; ++c) a[t][c] += a[i][c];
            for (std::size_t c = 0; c < rows; ++c) left[t][c] += left[i][c];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : left[t]) x = -x;
    }
    factors.push_back(a[t][t]);
  }
  return {std::move(factors), from_integers(left, rows), from_integers(right, cols)};
}

// ---------------------------------------------------------------- presentations

FpPresentation::FpPresentation(Ring r, std::size_t n, Matrix rel)
    : ring(r), generators(n), relations(std::move(rel)) {
  if (relations.cols() != n)
    throw ValidationError("relation matrix has " + std::to_string(relations.cols()) + " columns, expected " +
                          std::to_string(n));
  require_same_ring(ring, relations.ring());
}

std::size_t dimension(const FpPresentation& p) {
  require_field(p.ring, "dimension");
  return p.generators - rank(p.relations);
}

AbelianInvariants abelian_invariants(const FpPresentation& p) {
  if (p.ring.kind() != RingKind::Integer) throw Unsupported("abelian_invariants requires the integer ring");
  auto snf = smith_normal_form(p.relations);
  AbelianInvariants inv;
  inv.free_rank = p.generators - snf.factors.size();
  for (const auto& d : snf.factors)
    if (d != 1) inv.torsion.push_back(d);
  return inv;
}

bool presentation_iso(const FpPresentation& a, const FpPresentation& b) {
  require_same_ring(a.ring, b.ring);
  if (a.ring.is_field()) return dimension(a) == dimension(b);
  return abelian_invariants(a) == abelian_invariants(b);
}

bool is_zero_module(const FpPresentation& p) {
  if (p.ring.is_field()) return dimension(p) == 0;
  auto inv = abelian_invariants(p);
  return inv.free_rank == 0 && inv.torsion.empty();
}

bool in_row_span(const Matrix& rows, std::span<const Scalar> v) {
  if (v.size() != rows.cols()) throw ValidationError("in_row_span: vector length mismatch");
  const Ring& ring = rows.ring();
  bool v_zero = std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
  if (v_zero) return true;
  if (rows.rows() == 0) return false;
  if (ring.is_field()) {
    Matrix aug = rows;
    aug.append_row(v);
    return rank(aug) == rank(rows);
  }
  // y·A = v over ℤ  ⇔  (y·L⁻¹)·D = v·R with L·A·R = D.
  auto snf = smith_normal_form(rows);
  Matrix vm(ring, 0, v.size());
  vm.append_row(v);
  Matrix w = vm * snf.right;
  for (std::size_t i = 0; i < w.cols(); ++i) {
    const mpz_class x = w(0, i).get_num();
    if (i < snf.factors.size()) {
      if (x % snf.factors[i] != 0) return false;
    } else if (x != 0) {
      return false;
    }
  }
  return true;
}

bool map_is_well_defined(const FpPresentation& src, const FpPresentation& dst, const Matrix& map) {
  if (map.rows() != dst.generators || map.cols() != src.generators)
    throw ValidationError("map shape does not match presentations");
  // relation r (row over src gens) maps to map·rᵀ over dst gens.
  Matrix images = src.relations * map.transpose();
  for (std::size_t i = 0; i < images.rows(); ++i)
    if (!in_row_span(dst.relations, images.row(i))) return false;
  return true;
}

bool maps_equal_modulo(const Matrix& a, const Matrix& b, const FpPresentation& dst) {
  Matrix diff = (a - b).transpose();
  for (std::size_t i = 0; i < diff.rows(); ++i)
    if (!in_row_span(dst.relations, diff.row(i))) return false;
  return true;
}

std::size_t induced_rank(const FpPresentation& src, const FpPresentation& dst, const Matrix& map) {
  require_field(dst.ring, "induced_rank");
  if (map.rows() != dst.generators || map.cols() != src.generators)
    throw ValidationError("map shape does not match presentations");
  Matrix aug = stack(dst.relations, map.transpose());
  return rank(aug) - rank(dst.relations);
}

FpPresentation induced_cokernel(const FpPresentation& dst, const Matrix& map) {
  if (map.rows() != dst.generators) throw ValidationError("map shape does not match target presentation");
  return FpPresentation(dst.ring, dst.generators, stack(dst.relations, map.transpose()));
}

bool induced_is_iso(const FpPresentation& src, const FpPresentation& dst, const Matrix& map) {
  require_same_ring(src.ring, dst.ring);
  if (src.ring.is_field()) {
    const std::size_t d = dimension(dst);
    return dimension(src) == d && induced_rank(src, dst, map) == d;
  }
  // Finitely generated ℤ-modules are Hopfian: a surjection between
  // isomorphic ones is an isomorphism.
  if (map.rows() != dst.generators || map.cols() != src.generators)
    throw ValidationError("map shape does not match presentations");
  return presentation_iso(src, dst) && is_zero_module(induced_cokernel(dst, map));
}

}  // namespace persrep
