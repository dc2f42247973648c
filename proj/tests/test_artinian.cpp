#include <doctest.h>

#include <random>

#include "z2lab/artinian.hpp"
#include "z2lab/error.hpp"
#include "z2lab/oracle.hpp"

using namespace z2lab;

namespace {

oracle::Table table_of(const FiniteAlgebra& a) {
  oracle::Table t(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) t[static_cast<std::size_t>(i)].push_back(a.product(i, j));
  return t;
}

Matrix sym2(int a, int b, int c) {
  Matrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = b;
  m(1, 1) = c;
  return m;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalTheoremViolation;
}

// all symmetric s×s matrices with entries in [lo, hi]
std::vector<Matrix> symmetric_matrices(int s, int lo, int hi) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < s; ++i)
    for (int j = i; j < s; ++j) slots.emplace_back(i, j);
  std::vector<Matrix> out;
  std::vector<int> vals(slots.size(), lo);
  while (true) {
    Matrix m(s, s);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      m(slots[k].first, slots[k].second) = vals[k];
      m(slots[k].second, slots[k].first) = vals[k];
    }
    out.push_back(m);
    std::size_t k = 0;
    while (k < vals.size() && vals[k] == hi) vals[k++] = lo;
    if (k == vals.size()) break;
    ++vals[k];
  }
  return out;
}

}  // namespace

TEST_CASE("truncated polynomial algebras") {
  auto k = truncated_poly_algebra(1);
  CHECK(k.dim() == 1);
  CHECK(k.cm_type() == 1);
  auto d = truncated_poly_algebra(2);
  CHECK(d.socle() == Subspace::span(2, {unit_vec(2, 1)}));
  auto r = truncated_poly_algebra(3);
  CHECK(is_zero(r.multiply(unit_vec(3, 1), unit_vec(3, 2))));
  for (int n = 1; n <= 6; ++n) {
    auto a = truncated_poly_algebra(n);
    CHECK(a.is_gorenstein());
    CHECK(a.socle() == Subspace::span(n, {unit_vec(n, n - 1)}));
    CHECK(oracle::socle_dim(table_of(a)) == 1);
  }
}

TEST_CASE("algebra validation") {
  // x^2 = 1 is not local
  std::vector<std::vector<Vec>> t{{unit_vec(2, 0), unit_vec(2, 1)}, {unit_vec(2, 1), unit_vec(2, 0)}};
  CHECK(code_of([&] { FiniteAlgebra::create({"1", "x"}, t); }) == ErrorCode::InvalidAlgebra);
  // x·x = x is not nilpotent
  t = {{unit_vec(2, 0), unit_vec(2, 1)}, {unit_vec(2, 1), unit_vec(2, 1)}};
  CHECK(code_of([&] { FiniteAlgebra::create({"1", "x"}, t); }) == ErrorCode::InvalidAlgebra);
  // non-commutative table on k[x,y]/(x,y)^2 variant
  auto z = zero_vec(3);
  t = {{unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)}, {unit_vec(3, 1), z, unit_vec(3, 2)}, {unit_vec(3, 2), z, z}};
  CHECK(code_of([&] { FiniteAlgebra::create({"1", "x", "y"}, t); }) == ErrorCode::InvalidAlgebra);
}

TEST_CASE("module and form validation") {
  auto r = truncated_poly_algebra(2);
  std::vector<Matrix> bad{Matrix::identity(1), Matrix::identity(1)};
  CHECK(code_of([&] { FiniteModule::create(r, bad); }) == ErrorCode::ModuleActionInvalid);
  auto m = FiniteModule::residue_power(r, 2);
  auto x = unit_vec(2, 1);
  std::vector<std::vector<Vec>> v{{x, zero_vec(2)}, {x, x}};
  CHECK(code_of([&] { BilinearForm::create(r, m, v); }) == ErrorCode::PhiNotSymmetric);
  v = {{unit_vec(2, 0), zero_vec(2)}, {zero_vec(2), zero_vec(2)}};
  CHECK(code_of([&] { BilinearForm::create(r, m, v); }) == ErrorCode::PhiNotInMaxIdeal);
  // M = R, φ(1,1) = x: R-linearity forces φ(x,1) = x^2 = 0, consistent;
  // over k[x]/(x^3) with φ(e0,e0) = x, φ(e0,e1) = 0 bilinearity fails
  auto r3 = truncated_poly_algebra(3);
  auto free1 = FiniteModule::free(r3, 1);
  std::vector<std::vector<Vec>> w(3, std::vector<Vec>(3, zero_vec(3)));
  w[0][0] = unit_vec(3, 1);
  CHECK(code_of([&] { BilinearForm::create(r3, free1, w); }) == ErrorCode::PhiNotBilinear);
}

TEST_CASE("free modules of rank two carry only the zero form") {
  auto r = truncated_poly_algebra(2);
  auto f = FiniteModule::free(r, 2);  // basis e0, x e0, e1, x e1
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> pick(-2, 2);
  int rejected = 0;
  for (int trial = 0; trial < 60; ++trial) {
    // an R-bilinear symmetric form is fixed by φ(e_a, e_b) = c_ab x
    int c00 = pick(rng), c01 = pick(rng), c11 = pick(rng);
    if (c00 == 0 && c01 == 0 && c11 == 0) c00 = 1;
    std::vector<std::vector<Vec>> v(4, std::vector<Vec>(4, zero_vec(2)));
    auto put = [&](int i, int j, int c) {
      v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Vec{0, c};
      v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = Vec{0, c};
    };
    put(0, 0, c00);
    put(0, 2, c01);
    put(2, 2, c11);
    CHECK(code_of([&] { BilinearForm::create(r, f, v); }) == ErrorCode::PhiAxiom2Violated);
    ++rejected;
  }
  CHECK(rejected == 60);
  CHECK_NOTHROW(BilinearForm::zero(r, f));
}

TEST_CASE("idealize") {
  auto r = truncated_poly_algebra(3);
  auto m = FiniteModule::free(r, 1);
  auto a = idealize(r, m, BilinearForm::zero(r, m));
  CHECK(a.dim() == 6);
  // 0 × M squares to zero
  for (int i = 3; i < 6; ++i)
    for (int j = 3; j < 6; ++j) CHECK(is_zero(a.product(i, j)));
  auto g = preset_quadratic(1, 0, 1);
  CHECK(g.algebra.dim() == 4);
}

TEST_CASE("quadratic socle examples") {
  auto g = preset_quadratic(1, 0, 1);
  CHECK(g.algebra.cm_type() == 1);
  auto h = preset_quadratic(1, 1, 1);
  CHECK(h.algebra.cm_type() == 2);
  CHECK(oracle::socle_dim(table_of(h.algebra)) == 2);
}

TEST_CASE("matrix_idealization preconditions") {
  auto r = truncated_poly_algebra(2);
  CHECK(code_of([&] { matrix_idealization(r, unit_vec(2, 0), sym2(1, 0, 1)); }) == ErrorCode::NotSocle);
  Matrix ns(2, 2);
  ns(0, 1) = 1;
  CHECK(code_of([&] { matrix_idealization(r, unit_vec(2, 1), ns); }) == ErrorCode::NotSymmetric);
  // k[x,y]/(x,y)^2 has a two-dimensional socle
  auto z = zero_vec(3);
  std::vector<std::vector<Vec>> t{{unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)}, {unit_vec(3, 1), z, z}, {unit_vec(3, 2), z, z}};
  auto kxy = FiniteAlgebra::create({"1", "x", "y"}, t);
  CHECK(kxy.cm_type() == 2);
  CHECK(code_of([&] { matrix_idealization(kxy, unit_vec(3, 1), sym2(1, 0, 1)); }) == ErrorCode::NotGorensteinBase);
}

TEST_CASE("matrix_idealization examples") {
  auto r = truncated_poly_algebra(3);
  auto xi = unit_vec(3, 2);
  CHECK(matrix_idealization(r, xi, Matrix::identity(2)).algebra.is_gorenstein());
  auto zero = matrix_idealization(r, xi, Matrix(2, 2));
  CHECK(zero.algebra.cm_type() == oracle::socle_dim(table_of(zero.algebra)));
  CHECK_FALSE(zero.algebra.is_gorenstein());
  CHECK(m_phi(zero.base, zero.module, zero.phi).dim() == 2);
  auto id = matrix_idealization(r, xi, Matrix::identity(3));
  CHECK(m_phi(id.base, id.module, id.phi).dim() == 0);
  auto sing = matrix_idealization(r, xi, sym2(1, 1, 1));
  CHECK(m_phi(sing.base, sing.module, sing.phi).dim() == 1);
}

TEST_CASE("socle decomposition") {
  auto r = truncated_poly_algebra(2);
  auto free1 = FiniteModule::free(r, 1);
  auto zphi = BilinearForm::zero(r, free1);
  auto [p1, p2] = socle_decomposition(r, free1, zphi);
  CHECK(p1.dim() == 0);
  CHECK(p2 == free1.socle());
  auto g = preset_quadratic(1, 0, 1);
  auto [q1, q2] = socle_decomposition(g.base, g.module, g.phi);
  CHECK(q2.dim() == 0);
  CHECK(direct_sum(q1, q2) == g.algebra.socle());
  auto h = preset_quadratic(1, 1, 1);
  auto [h1, h2] = socle_decomposition(h.base, h.module, h.phi);
  CHECK(direct_sum(h1, h2) == h.algebra.socle());
}

TEST_CASE("gorenstein_dichotomy branches") {
  auto r = truncated_poly_algebra(3);
  auto free1 = FiniteModule::free(r, 1);
  auto rep = gorenstein_dichotomy(r, free1, BilinearForm::zero(r, free1));
  CHECK(rep.branch_canonical);
  CHECK(rep.gorenstein_a);
  auto g = matrix_idealization(r, unit_vec(3, 2), Matrix::identity(2));
  auto rg = gorenstein_dichotomy(g.base, g.module, g.phi);
  CHECK(rg.branch_radical);
  CHECK_FALSE(rg.branch_canonical);
  CHECK_FALSE(rg.faithful);
  auto h = preset_quadratic(1, 1, 1);
  auto rh = gorenstein_dichotomy(h.base, h.module, h.phi);
  CHECK_FALSE(rh.branch_canonical);
  CHECK_FALSE(rh.branch_radical);
  CHECK_FALSE(rh.gorenstein_a);
}

TEST_CASE("M_phi is trivial iff the socle-coordinate matrix has trivial kernel") {
  for (int n : {2, 3}) {
    auto r = truncated_poly_algebra(n);
    for (const auto& c : symmetric_matrices(2, -1, 1)) {
      auto g = matrix_idealization(r, unit_vec(n, n - 1), c);
      // φ(e_i, e_j) read in the socle coordinate
      Matrix coords(2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) coords(i, j) = g.phi.value(i, j)[static_cast<std::size_t>(n - 1)];
      CHECK((m_phi(g.base, g.module, g.phi).dim() == 0) == nullspace(coords).empty());
      CHECK((determinant(c) != 0) == g.algebra.is_gorenstein());
    }
  }
}

TEST_CASE("graded ideal products") {
  // J1 = I1 × N1, J2 = I2 × N2 in A = R ×_φ M with M = R^1 over k[x]/(x^4),
  // φ(e,e) = x^2
  auto r = truncated_poly_algebra(4);
  auto m = FiniteModule::free(r, 1);
  std::vector<std::vector<Vec>> v(4, std::vector<Vec>(4, zero_vec(4)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; i + j + 2 < 4; ++j) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = unit_vec(4, i + j + 2);
  auto phi = BilinearForm::create(r, m, v);
  auto a = idealize(r, m, phi);
  auto power = [&](int k) {  // 𝔪^k in R
    std::vector<Vec> vs;
    for (int i = k; i < 4; ++i) vs.push_back(unit_vec(4, i));
    return Subspace::span(4, vs);
  };
  auto span_products = [&](const Subspace& x, const Subspace& y) {
    std::vector<Vec> vs;
    for (const auto& p : x.basis())
      for (const auto& q : y.basis()) vs.push_back(a.multiply(p, q));
    return Subspace::span(x.ambient(), vs);
  };
  for (int i1 = 0; i1 <= 4; ++i1)
    for (int n1 = 0; n1 <= 4; ++n1)
      for (int i2 = 0; i2 <= 4; ++i2)
        for (int n2 = 0; n2 <= 4; ++n2) {
          const Subspace I1 = power(i1), N1 = power(n1), I2 = power(i2), N2 = power(n2);
          const Subspace J1 = direct_sum(I1, N1), J2 = direct_sum(I2, N2);
          // components computed in R
          std::vector<Vec> first, second;
          for (const auto& p : I1.basis())
            for (const auto& q : I2.basis()) first.push_back(r.multiply(p, q));
          for (const auto& p : N1.basis())
            for (const auto& q : N2.basis()) first.push_back(phi.apply(p, q));
          for (const auto& p : I2.basis())
            for (const auto& q : N1.basis()) second.push_back(r.multiply(p, q));
          for (const auto& p : I1.basis())
            for (const auto& q : N2.basis()) second.push_back(r.multiply(p, q));
          auto expect = direct_sum(Subspace::span(4, first), Subspace::span(4, second));
          CHECK(span_products(J1, J2) == expect);
        }
}

TEST_CASE("dual module") {
  auto g = preset_quadratic(1, 1, 1);
  auto l = dual_module(g.base, g.module, g.phi, g.algebra);
  CHECK(l.module.dim() == l.hom.dim() + g.base.dim());
  CHECK(l.module.min_generators() == 2);
  auto h = preset_quadratic(1, 0, 1);
  CHECK(dual_module(h.base, h.module, h.phi, h.algebra).module.min_generators() == 1);
  auto r = truncated_poly_algebra(3);
  auto free1 = FiniteModule::free(r, 1);
  auto zphi = BilinearForm::zero(r, free1);
  auto a = idealize(r, free1, zphi);
  CHECK(dual_module(r, free1, zphi, a).module.min_generators() == a.cm_type());
  auto kxy_z = zero_vec(3);
  std::vector<std::vector<Vec>> t{{unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)}, {unit_vec(3, 1), kxy_z, kxy_z}, {unit_vec(3, 2), kxy_z, kxy_z}};
  auto kxy = FiniteAlgebra::create({"1", "x", "y"}, t);
  auto mk = FiniteModule::residue_power(kxy, 1);
  auto zk = BilinearForm::zero(kxy, mk);
  CHECK(code_of([&] { dual_module(kxy, mk, zk, idealize(kxy, mk, zk)); }) == ErrorCode::NotGorensteinBase);
}

TEST_CASE("matrix idealization sweep coherence") {
  int built = 0;
  for (int n : {2, 3}) {
    auto r = truncated_poly_algebra(n);
    auto xi = unit_vec(n, n - 1);
    for (int s = 1; s <= 2; ++s)
      for (const auto& c : symmetric_matrices(s, -2, 2)) {
        auto g = matrix_idealization(r, xi, c);
        ++built;
        REQUIRE(g.algebra.dim() == n + s);
        const int socle = g.algebra.cm_type();
        REQUIRE(socle == oracle::socle_dim(table_of(g.algebra)));
        CHECK((socle == 1) == (determinant(c) != 0));
        auto [p1, p2] = socle_decomposition(g.base, g.module, g.phi);
        CHECK(direct_sum(p1, p2) == g.algebra.socle());
        CHECK_NOTHROW(gorenstein_dichotomy(g.base, g.module, g.phi));
        CHECK(dual_module(g.base, g.module, g.phi, g.algebra).module.min_generators() == socle);
      }
  }
  CHECK(built == 2 * (5 + 125));
}
