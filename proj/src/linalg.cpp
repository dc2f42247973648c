#include "z2lab/linalg.hpp"

#include <algorithm>

#include "z2lab/error.hpp"

namespace z2lab {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != cols)
      fail(ErrorCode::DimensionMismatch, "row length differs from column count");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

Vec Matrix::row(int r) const {
  Vec out(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(c)] = (*this)(r, c);
  return out;
}

Vec Matrix::column(int c) const {
  Vec out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) fail(ErrorCode::DimensionMismatch, "vector length differs from column count");
  Vec out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) acc += (*this)(r, c) * x[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator*(const Rational& k, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= k;
  return out;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Scales each row by the lcm of its denominators.
IntRows integer_rows(const Matrix& m) {
  IntRows out(static_cast<std::size_t>(m.rows()), std::vector<Integer>(static_cast<std::size_t>(m.cols())));
  for (int r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (int c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (int c = 0; c < m.cols(); ++c) {
      const Rational scaled = m(r, c) * l;
      out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = scaled.get_num();
    }
  }
  return out;
}

struct Bareiss {
  IntRows rows;
  std::vector<int> pivots;
  int swaps = 0;
};

// Fraction-free forward elimination; every intermediate entry is a minor of
// the input, so each division is exact.
Bareiss bareiss(IntRows a, int cols) {
  Bareiss out;
  const int n = static_cast<int>(a.size());
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < n; ++c) {
    int p = r;
    while (p < n && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == n) continue;
    if (p != r) {
      std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
      ++out.swaps;
    }
    auto& pr = a[static_cast<std::size_t>(r)];
    for (int i = r + 1; i < n; ++i) {
      auto& ri = a[static_cast<std::size_t>(i)];
      const Integer lead = ri[static_cast<std::size_t>(c)];
      for (int j = c + 1; j < cols; ++j) {
        Integer t = pr[static_cast<std::size_t>(c)] * ri[static_cast<std::size_t>(j)] - lead * pr[static_cast<std::size_t>(j)];
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) theorem_violation("inexact fraction-free division");
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        ri[static_cast<std::size_t>(j)] = std::move(t);
      }
      ri[static_cast<std::size_t>(c)] = 0;
    }
    prev = pr[static_cast<std::size_t>(c)];
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(static_cast<std::size_t>(r));
  out.rows = std::move(a);
  return out;
}

}  // namespace

Echelon rref(const Matrix& m) {
  Bareiss b = bareiss(integer_rows(m), m.cols());
  Echelon e;
  e.pivots = b.pivots;
  const int r = static_cast<int>(b.rows.size());
  const int cols = m.cols();
  e.rows.assign(static_cast<std::size_t>(r), Vec(static_cast<std::size_t>(cols)));
  for (int i = 0; i < r; ++i) {
    const Integer& piv = b.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(i)])];
    for (int j = 0; j < cols; ++j)
      e.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Rational(b.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], piv);
    for (auto& x : e.rows[static_cast<std::size_t>(i)]) x.canonicalize();
  }
  // Back substitution clears entries above each pivot.
  for (int i = r - 1; i >= 0; --i) {
    const int pc = e.pivots[static_cast<std::size_t>(i)];
    for (int k = 0; k < i; ++k) {
      const Rational f = e.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(pc)];
      if (f == 0) continue;
      for (int j = pc; j < cols; ++j)
        e.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -= f * e.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return e;
}

int rank(const Matrix& m) { return static_cast<int>(bareiss(integer_rows(m), m.cols()).pivots.size()); }

std::vector<Vec> nullspace(const Matrix& m) {
  const Echelon e = rref(m);
  const int cols = m.cols();
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  std::vector<Vec> out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec x(static_cast<std::size_t>(cols));
    x[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) x[static_cast<std::size_t>(e.pivots[i])] = -e.rows[i][static_cast<std::size_t>(f)];
    out.push_back(std::move(x));
  }
  return out;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  // Row scaling multiplies the determinant by the product of the scales.
  Rational scale = 1;
  for (int r = 0; r < n; ++r) {
    Integer l = 1;
    for (int c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    scale *= Rational(l);
  }
  Bareiss b = bareiss(integer_rows(m), n);
  if (static_cast<int>(b.pivots.size()) < n) return 0;
  Rational det(b.rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)]);
  if (b.swaps % 2 != 0) det = -det;
  return det / scale;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Echelon e = rref(Matrix::from_rows(vectors, ambient));
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(int ambient) {
  std::vector<Vec> units;
  for (int i = 0; i < ambient; ++i) units.push_back(unit_vec(ambient, i));
  return span(ambient, units);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) fail(ErrorCode::DimensionMismatch, "vector outside ambient space");
  Vec coords(basis_.size());
  Vec rest = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = rest[static_cast<std::size_t>(pivots_[i])];
    coords[i] = c;
    if (c == 0) continue;
    for (int j = 0; j < ambient_; ++j) rest[static_cast<std::size_t>(j)] -= c * basis_[i][static_cast<std::size_t>(j)];
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::perp() const {
  if (basis_.empty()) return whole(ambient_);
  return span(ambient_, nullspace(Matrix::from_rows(basis_, ambient_)));
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) fail(ErrorCode::DimensionMismatch, "subspaces of different spaces");
  std::vector<Vec> all = a.basis_;
  all.insert(all.end(), b.basis_.begin(), b.basis_.end());
  return Subspace::span(a.ambient_, all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) fail(ErrorCode::DimensionMismatch, "subspaces of different spaces");
  return (a.perp() + b.perp()).perp();
}

Subspace direct_sum(const Subspace& u, const Subspace& w) {
  const int n = u.ambient() + w.ambient();
  std::vector<Vec> vs;
  for (const Vec& x : u.basis()) {
    Vec y = zero_vec(n);
    std::copy(x.begin(), x.end(), y.begin());
    vs.push_back(std::move(y));
  }
  for (const Vec& x : w.basis()) {
    Vec y = zero_vec(n);
    std::copy(x.begin(), x.end(), y.begin() + u.ambient());
    vs.push_back(std::move(y));
  }
  return Subspace::span(n, vs);
}

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }

Vec unit_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace z2lab
