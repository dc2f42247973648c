#pragma once

#include <string>
#include <utility>
#include <vector>

#include "z2lab/linalg.hpp"

namespace z2lab {

/// A commutative local ℚ-algebra of finite dimension given by structure
/// constants b_i b_j = Σ_k c_ij^k b_k. Basis element 0 is the unit and
/// b_1, ..., b_{n-1} span the maximal ideal.
class FiniteAlgebra {
 public:
  /// `table[i][j]` is the coordinate vector of b_i b_j. Throws InvalidAlgebra
  /// unless the table is commutative, associative, unital and local.
  static FiniteAlgebra create(std::vector<std::string> labels, std::vector<std::vector<Vec>> table);

  int dim() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Vec& product(int i, int j) const { return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  Vec multiply(const Vec& x, const Vec& y) const;
  /// Matrix of z ↦ b_i z (column j is b_i b_j).
  Matrix left_mult(int i) const;
  Matrix left_mult(const Vec& x) const;

  Subspace maximal_ideal() const;
  /// (0) : 𝔪.
  Subspace socle() const;
  int cm_type() const { return socle().dim(); }
  bool is_gorenstein() const { return cm_type() == 1; }

 private:
  FiniteAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> table)
      : labels_(std::move(labels)), table_(std::move(table)) {}
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> table_;
};

/// k[x]/(x^n) on the basis 1, x, ..., x^{n-1}.
FiniteAlgebra truncated_poly_algebra(int n);

/// A finite-dimensional module over a FiniteAlgebra, one action matrix per
/// algebra basis element: b_i · e_j = Σ_k action(i)(k, j) e_k.
class FiniteModule {
 public:
  /// Throws ModuleActionInvalid unless the action is unital and
  /// multiplicative on basis pairs.
  static FiniteModule create(const FiniteAlgebra& r, std::vector<Matrix> actions);
  /// k^s with 𝔪 acting as zero.
  static FiniteModule residue_power(const FiniteAlgebra& r, int s);
  /// R^s, with e_{a·n + i} = b_i in the a-th summand.
  static FiniteModule free(const FiniteAlgebra& r, int rank);

  int dim() const noexcept { return dim_; }
  const Matrix& action(int i) const { return actions_[static_cast<std::size_t>(i)]; }
  Matrix action_of(const Vec& r) const;

  /// Ann_R M as a subspace of R.
  Subspace annihilator() const;
  bool is_faithful() const { return annihilator().dim() == 0; }
  /// (0) :_M 𝔪.
  Subspace socle() const;
  /// 𝔪M.
  Subspace max_ideal_times_module() const;
  /// μ(M) = dim M/𝔪M.
  int min_generators() const { return dim_ - max_ideal_times_module().dim(); }

 private:
  FiniteModule(int dim, std::vector<Matrix> actions) : dim_(dim), actions_(std::move(actions)) {}
  int dim_;
  std::vector<Matrix> actions_;
};

/// φ : M × M → R stored on basis pairs as coordinate vectors in R.
class BilinearForm {
 public:
  /// Checks, in order: symmetry (PhiNotSymmetric), values in 𝔪
  /// (PhiNotInMaxIdeal), R-bilinearity (PhiNotBilinear) and
  /// φ(x,y)z = φ(y,z)x (PhiAxiom2Violated).
  static BilinearForm create(const FiniteAlgebra& r, const FiniteModule& m, std::vector<std::vector<Vec>> values);
  static BilinearForm zero(const FiniteAlgebra& r, const FiniteModule& m);

  int module_dim() const noexcept { return static_cast<int>(values_.size()); }
  const Vec& value(int i, int j) const { return values_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  Vec apply(const Vec& x, const Vec& y) const;

 private:
  explicit BilinearForm(std::vector<std::vector<Vec>> values) : values_(std::move(values)) {}
  std::vector<std::vector<Vec>> values_;
};

/// A = R ×_φ M on the basis (b_0, ..., b_{n-1}, e_0, ..., e_{s-1}) with
/// (a,x)(b,y) = (ab + φ(x,y), ay + bx).
FiniteAlgebra idealize(const FiniteAlgebra& r, const FiniteModule& m, const BilinearForm& phi);

/// M_φ = {x : φ(x, ·) = 0}.
Subspace m_phi(const FiniteAlgebra& r, const FiniteModule& m, const BilinearForm& phi);

/// ((0):_R 𝔪 ∩ Ann_R M, (0):_M 𝔪 ∩ M_φ).
std::pair<Subspace, Subspace> socle_decomposition(const FiniteAlgebra& r, const FiniteModule& m,
                                                  const BilinearForm& phi);

struct DichotomyReport {
  bool gorenstein_a = false;
  int cm_type_a = 0;
  bool faithful = false;
  int module_socle_dim = 0;
  int cm_type_r = 0;
  int m_phi_dim = 0;
  bool branch_canonical = false;  // M ≅ K_R
  bool branch_radical = false;    // R Gorenstein and M_φ = 0
};

/// Computes both sides of the Gorenstein dichotomy for R ×_φ M. Throws
/// InternalTheoremViolation when A is Gorenstein exactly when neither branch
/// holds, or vice versa.
DichotomyReport gorenstein_dichotomy(const FiniteAlgebra& r, const FiniteModule& m, const BilinearForm& phi);

struct Idealization {
  FiniteAlgebra base;
  FiniteModule module;
  BilinearForm phi;
  FiniteAlgebra algebra;
};

/// R ×_φ k^s with 𝔪 k^s = 0 and φ(e_i, e_j) = c_ij ξ. Throws
/// NotGorensteinBase, NotSocle or NotSymmetric.
Idealization matrix_idealization(const FiniteAlgebra& r, const Vec& xi, const Matrix& c);

/// The four-dimensional algebra k[x]/(x²) ×_φ k² with C = [[a,b],[b,c]].
Idealization preset_quadratic(const Rational& a, const Rational& b, const Rational& c);

/// L = Hom_R(M, R) ⊕ R as a module over A = R ×_φ M, with
/// (a,x)·(f,k) = (af + ψ_{x,k}, f(x) + ak) and ψ_{x,k}(y) = kφ(x,y).
/// Basis: the echelon basis of Hom_R(M,R) (as n×s matrices, row-major)
/// followed by b_0, ..., b_{n-1}.
struct DualModule {
  Subspace hom;  // inside ℚ^{n·s}
  FiniteModule module;
};
DualModule dual_module(const FiniteAlgebra& r, const FiniteModule& m, const BilinearForm& phi,
                       const FiniteAlgebra& a);

}  // namespace z2lab
