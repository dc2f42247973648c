#include "z2lab/artinian.hpp"

#include "z2lab/error.hpp"

namespace z2lab {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

Matrix stack(const std::vector<Matrix>& blocks, int cols) {
  int rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix out(rows, cols);
  int at = 0;
  for (const auto& b : blocks) {
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < cols; ++c) out(at + r, c) = b(r, c);
    at += b.rows();
  }
  return out;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::create(std::vector<std::string> labels, std::vector<std::vector<Vec>> table) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) fail(ErrorCode::InvalidAlgebra, "algebra of dimension 0");
  if (static_cast<int>(table.size()) != n) fail(ErrorCode::DimensionMismatch, "structure table has wrong row count");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::DimensionMismatch, "structure table has wrong column count");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != n) fail(ErrorCode::DimensionMismatch, "product vector has wrong length");
  }
  FiniteAlgebra a(std::move(labels), std::move(table));
  for (int j = 0; j < n; ++j)
    if (a.product(0, j) != unit_vec(n, j) || a.product(j, 0) != unit_vec(n, j))
      fail(ErrorCode::InvalidAlgebra, "basis element 0 is not a unit");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.product(i, j) != a.product(j, i))
        fail(ErrorCode::InvalidAlgebra, "not commutative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  // triples involving the unit are associative once the unit checks pass
  Vec left(idx(n)), right(idx(n));
  Rational term;
  auto combine = [&](Vec& out, const Vec& coeffs, auto&& basis_product) {
    for (auto& x : out) x = 0;
    for (int l = 0; l < n; ++l) {
      if (coeffs[idx(l)] == 0) continue;
      const Vec& p = basis_product(l);
      for (int q = 0; q < n; ++q)
        if (p[idx(q)] != 0) {
          term = coeffs[idx(l)] * p[idx(q)];
          out[idx(q)] += term;
        }
    }
  };
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      for (int k = 1; k < n; ++k) {
        combine(left, a.product(i, j), [&](int l) -> const Vec& { return a.product(l, k); });
        combine(right, a.product(j, k), [&](int l) -> const Vec& { return a.product(i, l); });
        if (left != right)
          fail(ErrorCode::InvalidAlgebra, "not associative at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                              std::to_string(k) + ")");
      }
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.product(i, j)[0] != 0) fail(ErrorCode::InvalidAlgebra, "span of b_1.. is not an ideal");
  // Nilpotence: 𝔪^k must reach 0.
  Subspace power = a.maximal_ideal();
  while (power.dim() > 0) {
    std::vector<Vec> next;
    for (const Vec& x : power.basis())
      for (int i = 1; i < n; ++i) next.push_back(a.multiply(unit_vec(n, i), x));
    Subspace p = Subspace::span(n, next);
    if (p.dim() == power.dim()) fail(ErrorCode::InvalidAlgebra, "maximal ideal is not nilpotent");
    power = std::move(p);
  }
  return a;
}

Vec FiniteAlgebra::multiply(const Vec& x, const Vec& y) const {
  const int n = dim();
  Vec out = zero_vec(n);
  for (int i = 0; i < n; ++i) {
    if (x[idx(i)] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[idx(j)] == 0) continue;
      const Rational f = x[idx(i)] * y[idx(j)];
      const Vec& p = product(i, j);
      Rational term;
      for (int k = 0; k < n; ++k)
        if (p[idx(k)] != 0) {
          term = f * p[idx(k)];
          out[idx(k)] += term;
        }
    }
  }
  return out;
}

Matrix FiniteAlgebra::left_mult(int i) const {
  const int n = dim();
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(k, j) = product(i, j)[idx(k)];
  return m;
}

Matrix FiniteAlgebra::left_mult(const Vec& x) const {
  const int n = dim();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    if (x[idx(i)] != 0) m = m + x[idx(i)] * left_mult(i);
  return m;
}

Subspace FiniteAlgebra::maximal_ideal() const {
  std::vector<Vec> vs;
  for (int i = 1; i < dim(); ++i) vs.push_back(unit_vec(dim(), i));
  return Subspace::span(dim(), vs);
}

Subspace FiniteAlgebra::socle() const {
  const int n = dim();
  if (n == 1) return Subspace::whole(1);
  std::vector<Matrix> blocks;
  for (int i = 1; i < n; ++i) blocks.push_back(left_mult(i));
  return Subspace::span(n, nullspace(stack(blocks, n)));
}

FiniteAlgebra truncated_poly_algebra(int n) {
  if (n < 1) fail(ErrorCode::InvalidAlgebra, "k[x]/(x^n) needs n >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  std::vector<std::vector<Vec>> table(idx(n), std::vector<Vec>(idx(n), zero_vec(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) table[idx(i)][idx(j)][idx(i + j)] = 1;
  return FiniteAlgebra::create(std::move(labels), std::move(table));
}

FiniteModule FiniteModule::create(const FiniteAlgebra& r, std::vector<Matrix> actions) {
  const int n = r.dim();
  if (static_cast<int>(actions.size()) != n) fail(ErrorCode::DimensionMismatch, "need one action matrix per basis element");
  const int s = actions.empty() ? 0 : actions[0].rows();
  for (const auto& a : actions)
    if (a.rows() != s || a.cols() != s) fail(ErrorCode::DimensionMismatch, "action matrices must be square of equal size");
  if (actions[0] != Matrix::identity(s)) fail(ErrorCode::ModuleActionInvalid, "unit does not act as the identity");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix expect(s, s);
      const Vec& p = r.product(i, j);
      for (int k = 0; k < n; ++k)
        if (p[idx(k)] != 0) expect = expect + p[idx(k)] * actions[idx(k)];
      if (actions[idx(i)] * actions[idx(j)] != expect)
        fail(ErrorCode::ModuleActionInvalid,
             "action is not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return FiniteModule(s, std::move(actions));
}

FiniteModule FiniteModule::residue_power(const FiniteAlgebra& r, int s) {
  std::vector<Matrix> actions(idx(r.dim()), Matrix(s, s));
  actions[0] = Matrix::identity(s);
  return create(r, std::move(actions));
}

FiniteModule FiniteModule::free(const FiniteAlgebra& r, int rank) {
  const int n = r.dim();
  const int s = n * rank;
  std::vector<Matrix> actions;
  for (int i = 0; i < n; ++i) {
    const Matrix l = r.left_mult(i);
    Matrix a(s, s);
    for (int block = 0; block < rank; ++block)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) a(block * n + p, block * n + q) = l(p, q);
    actions.push_back(std::move(a));
  }
  return create(r, std::move(actions));
}

Matrix FiniteModule::action_of(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < actions_.size(); ++i)
    if (x[i] != 0) m = m + x[i] * actions_[i];
  return m;
}

Subspace FiniteModule::annihilator() const {
  const int n = static_cast<int>(actions_.size());
  Matrix sys(dim_ * dim_, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < dim_; ++k)
      for (int j = 0; j < dim_; ++j) sys(k * dim_ + j, i) = actions_[idx(i)](k, j);
  if (dim_ == 0) return Subspace::whole(n);
  return Subspace::span(n, nullspace(sys));
}

Subspace FiniteModule::socle() const {
  if (dim_ == 0) return Subspace(0);
  std::vector<Matrix> blocks(actions_.begin() + 1, actions_.end());
  if (blocks.empty()) return Subspace::whole(dim_);
  return Subspace::span(dim_, nullspace(stack(blocks, dim_)));
}

Subspace FiniteModule::max_ideal_times_module() const {
  std::vector<Vec> cols;
  for (std::size_t i = 1; i < actions_.size(); ++i)
    for (int j = 0; j < dim_; ++j) cols.push_back(actions_[i].column(j));
  return Subspace::span(dim_, cols);
}

BilinearForm BilinearForm::create(const FiniteAlgebra& r, const FiniteModule& m, std::vector<std::vector<Vec>> values) {
  const int n = r.dim();
  const int s = m.dim();
  if (static_cast<int>(values.size()) != s) fail(ErrorCode::DimensionMismatch, "phi table has wrong row count");
  for (const auto& row : values) {
    if (static_cast<int>(row.size()) != s) fail(ErrorCode::DimensionMismatch, "phi table has wrong column count");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != n) fail(ErrorCode::DimensionMismatch, "phi value has wrong length");
  }
  BilinearForm phi(std::move(values));
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (phi.value(i, j) != phi.value(j, i))
        fail(ErrorCode::PhiNotSymmetric, "phi(e" + std::to_string(i) + ",e" + std::to_string(j) + ") differs from its swap");
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (phi.value(i, j)[0] != 0) fail(ErrorCode::PhiNotInMaxIdeal, "phi takes a value outside the maximal ideal");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < s; ++j)
      for (int l = 0; l < s; ++l) {
        Vec lhs = zero_vec(n);
        for (int k = 0; k < s; ++k) {
          const Rational& c = m.action(i)(k, j);
          if (c == 0) continue;
          for (int t = 0; t < n; ++t) lhs[idx(t)] += c * phi.value(k, l)[idx(t)];
        }
        if (lhs != r.multiply(unit_vec(n, i), phi.value(j, l)))
          fail(ErrorCode::PhiNotBilinear, "phi is not R-linear in its first argument");
      }
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      const Matrix left = m.action_of(phi.value(i, j));
      for (int l = 0; l < s; ++l) {
        const Matrix right = m.action_of(phi.value(j, l));
        if (left.column(l) != right.column(i))
          fail(ErrorCode::PhiAxiom2Violated, "phi(x,y)z != phi(y,z)x on basis triple (" + std::to_string(i) + "," +
                                                 std::to_string(j) + "," + std::to_string(l) + ")");
      }
    }
  return phi;
}

BilinearForm BilinearForm::zero(const FiniteAlgebra& r, const FiniteModule& m) {
  return create(r, m, std::vector<std::vector<Vec>>(idx(m.dim()), std::vector<Vec>(idx(m.dim()), zero_vec(r.dim()))));
}

Vec BilinearForm::apply(const Vec& x, const Vec& y) const {
  const int s = module_dim();
  Vec out;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      const Vec& v = value(i, j);
      if (out.empty()) out = zero_vec(static_cast<int>(v.size()));
      const Rational f = x[idx(i)] * y[idx(j)];
      if (f == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) out[k] += f * v[k];
    }
  return out;
}

FiniteAlgebra idealize(const FiniteAlgebra& r, const FiniteModule& m, const BilinearForm& phi) {
  const int n = r.dim();
  const int s = m.dim();
  const int total = n + s;
  if (phi.module_dim() != s) fail(ErrorCode::DimensionMismatch, "phi is defined on a module of another size");
  std::vector<std::string> labels = r.labels();
  for (int j = 0; j < s; ++j) labels.push_back("e" + std::to_string(j));
  std::vector<std::vector<Vec>> table(idx(total), std::vector<Vec>(idx(total), zero_vec(total)));
  for (int p = 0; p < total; ++p)
    for (int q = 0; q < total; ++q) {
      Vec& out = table[idx(p)][idx(q)];
      if (p < n && q < n) {
        const Vec& v = r.product(p, q);
        for (int k = 0; k < n; ++k) out[idx(k)] = v[idx(k)];
      } else if (p < n || q < n) {
        const int ring = p < n ? p : q;
        const int elem = (p < n ? q : p) - n;
        for (int k = 0; k < s; ++k) out[idx(n + k)] = m.action(ring)(k, elem);
      } else {
        const Vec& v = phi.value(p - n, q - n);
        for (int k = 0; k < n; ++k) out[idx(k)] = v[idx(k)];
      }
    }
  return FiniteAlgebra::create(std::move(labels), std::move(table));
}

Subspace m_phi(const FiniteAlgebra& r, const FiniteModule& m, const BilinearForm& phi) {
  const int n = r.dim();
  const int s = m.dim();
  if (s == 0) return Subspace(0);
  Matrix sys(s * n, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      for (int k = 0; k < n; ++k) sys(j * n + k, i) = phi.value(i, j)[idx(k)];
  return Subspace::span(s, nullspace(sys));
}

std::pair<Subspace, Subspace> socle_decomposition(const FiniteAlgebra& r, const FiniteModule& m,
                                                  const BilinearForm& phi) {
  return {intersect(r.socle(), m.annihilator()), intersect(m.socle(), m_phi(r, m, phi))};
}

DichotomyReport gorenstein_dichotomy(const FiniteAlgebra& r, const FiniteModule& m, const BilinearForm& phi) {
  DichotomyReport rep;
  const FiniteAlgebra a = idealize(r, m, phi);
  rep.cm_type_a = a.cm_type();
  rep.gorenstein_a = rep.cm_type_a == 1;
  rep.faithful = m.is_faithful();
  rep.module_socle_dim = m.socle().dim();
  rep.cm_type_r = r.cm_type();
  rep.m_phi_dim = m_phi(r, m, phi).dim();
  rep.branch_canonical = rep.faithful && rep.module_socle_dim == 1;
  rep.branch_radical = rep.cm_type_r == 1 && rep.m_phi_dim == 0;
  if (rep.gorenstein_a != (rep.branch_canonical || rep.branch_radical))
    theorem_violation("Gorenstein test of R x_phi M disagrees with the two-branch criterion");
  return rep;
}

Idealization matrix_idealization(const FiniteAlgebra& r, const Vec& xi, const Matrix& c) {
  if (!r.is_gorenstein()) fail(ErrorCode::NotGorensteinBase, "base algebra has socle of dimension " + std::to_string(r.cm_type()));
  if (static_cast<int>(xi.size()) != r.dim() || is_zero(xi) || !r.socle().contains(xi))
    fail(ErrorCode::NotSocle, "xi does not span the socle");
  if (c.rows() != c.cols() || c != c.transpose()) fail(ErrorCode::NotSymmetric, "C must be a symmetric square matrix");
  const int s = c.rows();
  FiniteModule m = FiniteModule::residue_power(r, s);
  std::vector<std::vector<Vec>> values(idx(s), std::vector<Vec>(idx(s)));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      Vec v = xi;
      for (auto& x : v) x *= c(i, j);
      values[idx(i)][idx(j)] = std::move(v);
    }
  BilinearForm phi = BilinearForm::create(r, m, std::move(values));
  FiniteAlgebra a = idealize(r, m, phi);
  return Idealization{r, std::move(m), std::move(phi), std::move(a)};
}

Idealization preset_quadratic(const Rational& a, const Rational& b, const Rational& c) {
  Matrix cm(2, 2);
  cm(0, 0) = a;
  cm(0, 1) = b;
  cm(1, 0) = b;
  cm(1, 1) = c;
  return matrix_idealization(truncated_poly_algebra(2), unit_vec(2, 1), cm);
}

DualModule dual_module(const FiniteAlgebra& r, const FiniteModule& m, const BilinearForm& phi,
                       const FiniteAlgebra& a) {
  if (!r.is_gorenstein()) fail(ErrorCode::NotGorensteinBase, "dual module needs a Gorenstein base");
  const int n = r.dim();
  const int s = m.dim();
  if (a.dim() != n + s) fail(ErrorCode::DimensionMismatch, "algebra is not R x_phi M");
  // F (n×s, entry (p,q) at p·s+q) is R-linear iff F·act_i = L_i·F for all i.
  const int unknowns = n * s;
  Matrix sys(n * n * s, unknowns);
  for (int i = 0; i < n; ++i) {
    const Matrix l = r.left_mult(i);
    const Matrix& act = m.action(i);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < s; ++q) {
        const int row = (i * n + p) * s + q;
        for (int t = 0; t < s; ++t) sys(row, p * s + t) += act(t, q);
        for (int t = 0; t < n; ++t) sys(row, t * s + q) -= l(p, t);
      }
  }
  Subspace hom = unknowns == 0 ? Subspace(0) : Subspace::span(unknowns, nullspace(sys));
  const int h = hom.dim();
  const int total = h + n;

  auto hom_coords = [&](const Vec& flat) {
    auto c = hom.coordinates(flat);
    if (!c) theorem_violation("map expected to be R-linear is not");
    return *c;
  };
  auto as_matrix = [&](const Vec& flat) {
    Matrix f(n, s);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < s; ++q) f(p, q) = flat[idx(p * s + q)];
    return f;
  };
  auto flatten = [&](const Matrix& f) {
    Vec v = zero_vec(unknowns);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < s; ++q) v[idx(p * s + q)] = f(p, q);
    return v;
  };

  std::vector<Matrix> actions;
  for (int ai = 0; ai < n + s; ++ai) {
    Matrix act(total, total);
    if (ai < n) {
      const Matrix l = r.left_mult(ai);
      for (int t = 0; t < h; ++t) {
        const Vec c = hom_coords(flatten(l * as_matrix(hom.basis()[idx(t)])));
        for (int u = 0; u < h; ++u) act(u, t) = c[idx(u)];
      }
      for (int u = 0; u < n; ++u)
        for (int k = 0; k < n; ++k) act(h + k, h + u) = r.product(ai, u)[idx(k)];
    } else {
      const int j = ai - n;
      for (int t = 0; t < h; ++t) {
        const Matrix f = as_matrix(hom.basis()[idx(t)]);
        for (int k = 0; k < n; ++k) act(h + k, t) = f(k, j);
      }
      for (int u = 0; u < n; ++u) {
        Matrix psi(n, s);
        for (int q = 0; q < s; ++q) {
          const Vec val = r.multiply(unit_vec(n, u), phi.value(j, q));
          for (int p = 0; p < n; ++p) psi(p, q) = val[idx(p)];
        }
        const Vec c = hom_coords(flatten(psi));
        for (int w = 0; w < h; ++w) act(w, h + u) = c[idx(w)];
      }
    }
    actions.push_back(std::move(act));
  }
  try {
    return DualModule{std::move(hom), FiniteModule::create(a, std::move(actions))};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ModuleActionInvalid) theorem_violation(std::string("dual module action: ") + e.what());
    throw;
  }
}

}  // namespace z2lab
