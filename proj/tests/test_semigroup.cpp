#include <doctest.h>

#include <random>

#include "support.hpp"
#include "z2lab/error.hpp"
#include "z2lab/sweep.hpp"

using namespace test;
using z2lab::ErrorCode;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const z2lab::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalTheoremViolation;
}

}  // namespace

TEST_CASE("ns_new basic invariants") {
  auto n = S({1});
  CHECK(n.frobenius() == -1);
  CHECK(n.gaps().empty());
  CHECK(n.type() == 1);
  CHECK(n.is_naturals());

  auto s = S({5, 3, 4});
  CHECK(s.generators() == std::vector<int>{3, 4, 5});
  CHECK(s.frobenius() == 2);
  CHECK(s.gaps() == std::vector<int>{1, 2});
  CHECK(s.type() == 2);
  CHECK(s.pseudo_frobenius() == std::vector<int>{1, 2});

  auto t = S({4, 7, 9});
  CHECK(t.frobenius() == 10);
  CHECK(t.gaps() == std::vector<int>{1, 2, 3, 5, 6, 10});
  CHECK(t.multiplicity() == 4);
  CHECK(t.embedding_dimension() == 3);

  CHECK(S({6, 3, 4, 8}).generators() == std::vector<int>{3, 4});
}

TEST_CASE("ns_new errors") {
  CHECK(code_of([] { NumericalSemigroup::from_generators(std::vector<int>{}); }) == ErrorCode::EmptyGenerators);
  CHECK(code_of([] { S({4, 6}); }) == ErrorCode::NotCoprime);
  CHECK(code_of([] { S({0, 3}); }) == ErrorCode::ParseError);
}

TEST_CASE("semigroup invariants match brute-force sieve") {
  for (const auto& s : z2lab::enumerate_family(11, 3)) {
    const auto o = oracle::semigroup(s.generators());
    CAPTURE(s.to_string());
    CHECK(s.frobenius() == oracle::frobenius(o));
    CHECK(s.gaps() == oracle::gaps(o));
    CHECK(s.pseudo_frobenius() == oracle::pseudo_frobenius(o));
    CHECK(s.generators() == oracle::minimal_generators(o));
    for (int z = -3; z < o.hi; ++z) REQUIRE(s.contains(z) == o.contains(z));
  }
}

TEST_CASE("family enumeration deduplicates by gaps") {
  const auto fam = z2lab::enumerate_family(6, 3);
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) CHECK(fam[i].gaps() != fam[j].gaps());
  // {2,4} has gcd 2; {2,3} and {2,3,4} coincide
  CHECK(std::count_if(fam.begin(), fam.end(), [](const auto& s) { return s.generators() == std::vector<int>{2, 3}; }) == 1);
}

TEST_CASE("parse_int_list") {
  CHECK(z2lab::parse_int_list("3,4,5") == std::vector<int>{3, 4, 5});
  CHECK(z2lab::parse_int_list(" <4, 7 ,9> ") == std::vector<int>{4, 7, 9});
  CHECK(z2lab::parse_int_list("{-3,-2,-1}") == std::vector<int>{-3, -2, -1});
  CHECK(code_of([] { z2lab::parse_int_list("3,,4"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { z2lab::parse_int_list("3,4x"); }) == ErrorCode::ParseError);
}

TEST_CASE("ideal_from_gens") {
  auto s = S({3, 4, 5});
  CHECK(I(s, {0}) == RelativeIdeal::whole(s));
  auto e = I(s, {-3, -2, -1});
  CHECK(e.min() == -3);
  CHECK(e.conductor() == -3);
  CHECK(e == RelativeIdeal::ray(s, -3));

  auto t = S({4, 7, 9});
  auto m2 = I(t, {0, 1, 3, 6});
  CHECK(z2lab::min_gens(m2) == std::vector<int>{0, 1, 3, 6});
  // every integer >= 0 except 2
  CHECK(set_below(m2, m2.conductor()) == std::vector<int>{0, 1});
  CHECK(m2.conductor() == 3);
  CHECK(code_of([&] { RelativeIdeal::from_generators(s, std::vector<int>{}); }) == ErrorCode::EmptyGenerators);
}

TEST_CASE("window constructor enforces E + S inside E") {
  auto s = S({3, 4, 5});
  CHECK(code_of([&] { RelativeIdeal::from_window(s, 0, 6, [](int z) { return z == 0; }); }) == ErrorCode::InvalidAlgebra);
}

TEST_CASE("sum, product, intersect examples") {
  auto s = S({3, 4, 5});
  auto m = RelativeIdeal::maximal(s);
  CHECK(z2lab::product(m, m) == RelativeIdeal::ray(s, 6));
  auto e = I(s, {1, 5});
  CHECK(z2lab::sum_ideal(e, e) == e);
  auto g = S({3, 5});
  CHECK(z2lab::intersect(RelativeIdeal::whole(g), z2lab::canonical_ideal(g)) == RelativeIdeal::whole(g));
  CHECK(code_of([&] { z2lab::product(m, RelativeIdeal::whole(g)); }) == ErrorCode::BaseMismatch);
}

TEST_CASE("colon examples") {
  auto t = S({4, 7, 9});
  auto m = RelativeIdeal::maximal(t);
  auto b = z2lab::colon(m, m);
  CHECK(set_below(b, b.conductor()) == std::vector<int>{0, 4, 5});
  CHECK(b.conductor() == 7);
  for (int z = -5; z < 30; ++z) CHECK(b.contains(z) == S({4, 5, 7}).contains(z));

  for (const auto& s : small_family()) {
    auto w = RelativeIdeal::whole(s);
    CHECK(z2lab::colon(w, w) == w);
  }
  auto s = S({3, 4, 5});
  auto ms = RelativeIdeal::maximal(s);
  CHECK(z2lab::colon(ms, z2lab::product(ms, ms)) == RelativeIdeal::ray(s, -3));
}

TEST_CASE("canonical ideal") {
  CHECK(z2lab::canonical_ideal(S({1})) == RelativeIdeal::whole(S({1})));
  auto s = S({3, 4, 5});
  auto k = z2lab::canonical_ideal(s);
  CHECK(set_below(k, 5) == std::vector<int>{0, 1, 3, 4});
  CHECK(k.conductor() == 3);
  auto t = S({4, 7, 9});
  auto kt = z2lab::canonical_ideal(t);
  CHECK(set_below(kt, 11) == std::vector<int>{0, 4, 5, 7, 8, 9});
  CHECK(kt.conductor() == 11);
  for (const auto& x : small_family()) {
    auto kx = z2lab::canonical_ideal(x);
    CHECK(kx.min() == 0);
    CHECK(RelativeIdeal::whole(x).is_subset_of(kx));
    CHECK((kx == RelativeIdeal::whole(x)) == x.is_symmetric());
    CHECK(agrees(kx, oracle::canonical(oracle::semigroup(x.generators()))));
  }
}

TEST_CASE("trace") {
  for (const auto& s : small_family()) {
    CAPTURE(s.to_string());
    auto w = RelativeIdeal::whole(s);
    CHECK(z2lab::trace(w) == w);
    auto m = RelativeIdeal::maximal(s);
    CHECK((z2lab::trace(m) == m) == !s.is_naturals());
    auto k = z2lab::canonical_ideal(s);
    CHECK(z2lab::trace(k).is_subset_of(w));
    CHECK(z2lab::trace(k.shifted(7)) == z2lab::trace(k));
    CHECK(z2lab::trace(k.shifted(-3)) == z2lab::trace(k));
  }
  auto t = S({4, 7, 9});
  auto trk = z2lab::trace(z2lab::canonical_ideal(t));
  auto o = oracle::semigroup(t.generators());
  auto ko = oracle::canonical(o);
  CHECK(agrees(trk, oracle::minkowski(oracle::colon(o, ko), ko)));
}

TEST_CASE("min_gens and mu") {
  auto t = S({4, 7, 9});
  CHECK(z2lab::mu(RelativeIdeal::maximal(t)) == 3);
  CHECK(z2lab::mu(RelativeIdeal::whole(t)) == 1);
  auto s = S({3, 4, 5});
  CHECK(z2lab::mu(z2lab::canonical_ideal(s)) == 2);
  for (const auto& x : small_family()) CHECK(z2lab::mu(z2lab::canonical_ideal(x)) == x.type());
}

TEST_CASE("length_quotient and type_of_ideal") {
  auto s = S({3, 4, 5});
  CHECK(z2lab::length_quotient(RelativeIdeal::whole(s), RelativeIdeal::maximal(s)) == 1);
  // K \ S = {1}
  CHECK(z2lab::length_quotient(z2lab::canonical_ideal(s), RelativeIdeal::whole(s)) == 1);
  CHECK(z2lab::length_quotient(z2lab::canonical_ideal(s), RelativeIdeal::whole(s)) ==
        oracle::count_difference(oracle::canonical(oracle::semigroup({3, 4, 5})), oracle::semigroup({3, 4, 5})));
  CHECK(code_of([&] { z2lab::length_quotient(RelativeIdeal::maximal(s), RelativeIdeal::whole(s)); }) ==
        ErrorCode::NotContained);
  CHECK(z2lab::type_of_ideal(RelativeIdeal::whole(s)) == 2);
  CHECK(z2lab::type_of_ideal(RelativeIdeal::whole(S({1}))) == 1);
  CHECK(z2lab::type_of_ideal(RelativeIdeal::maximal(s)) == 3);
  for (const auto& x : small_family()) CHECK(z2lab::type_of_ideal(RelativeIdeal::whole(x)) == x.type());
}

TEST_CASE("ring generated by K") {
  for (const auto& x : small_family()) {
    auto sp = z2lab::ring_generated_by_K(x);
    CHECK(z2lab::product(sp, sp) == sp);
    CHECK(z2lab::canonical_ideal(x).is_subset_of(sp));
    CHECK(sp.min() == 0);
    if (x.is_symmetric()) CHECK(sp == RelativeIdeal::whole(x));
  }
  CHECK(z2lab::ring_generated_by_K(S({3, 4, 5})) == RelativeIdeal::ray(S({3, 4, 5}), 0));
}

TEST_CASE("set operations match brute-force quantifiers on random ideals") {
  std::mt19937 rng(20261014);
  for (const auto& s : small_family()) {
    for (int trial = 0; trial < 25; ++trial) {
      auto e = random_ideal(s, rng);
      auto f = random_ideal(s, rng);
      auto oe = as_oracle(e), of = as_oracle(f);
      CAPTURE(s.to_string());
      CAPTURE(e.to_string());
      CAPTURE(f.to_string());
      REQUIRE(agrees(z2lab::sum_ideal(e, f), oracle::unite(oe, of)));
      REQUIRE(agrees(z2lab::intersect(e, f), oracle::meet(oe, of)));
      REQUIRE(agrees(z2lab::product(e, f), oracle::minkowski(oe, of)));
      REQUIRE(agrees(z2lab::colon(e, f), oracle::colon(oe, of)));
      REQUIRE(z2lab::min_gens(e) == oracle::module_generators(oe, oracle::semigroup(s.generators())));
      // representation soundness: window membership vs the generator union
      auto gens = z2lab::min_gens(e);
      REQUIRE(agrees(e, oracle::ideal_from(gens, oracle::semigroup(s.generators()))));
      // algebraic laws
      CHECK(z2lab::product(e, f) == z2lab::product(f, e));
      CHECK(z2lab::product(z2lab::colon(e, f), f).is_subset_of(e));
    }
  }
}

TEST_CASE("canonical duality K - (K - E) = E") {
  std::mt19937 rng(7);
  for (const auto& s : small_family()) {
    auto k = z2lab::canonical_ideal(s);
    for (int trial = 0; trial < 20; ++trial) {
      auto e = random_ideal(s, rng);
      CHECK(z2lab::colon(k, z2lab::colon(k, e)) == e);
    }
  }
}

TEST_CASE("trace of a product lies in both traces") {
  std::mt19937 rng(11);
  for (const auto& s : small_family()) {
    for (int trial = 0; trial < 15; ++trial) {
      auto e = random_ideal(s, rng), f = random_ideal(s, rng);
      auto t = z2lab::trace(z2lab::product(e, f));
      CHECK(t.is_subset_of(z2lab::intersect(z2lab::trace(e), z2lab::trace(f))));
    }
  }
}

TEST_CASE("two-generated ideals with two-generated square") {
  std::mt19937 rng(3);
  int hits = 0;
  for (const auto& s : small_family()) {
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<int> pick(-4, 12);
      auto e = I(s, {pick(rng), pick(rng)});
      auto ee = z2lab::product(e, e);
      if (z2lab::mu(e) != 2 || z2lab::mu(ee) != 2) continue;
      ++hits;
      auto gens = z2lab::min_gens(e);
      CHECK(std::any_of(gens.begin(), gens.end(), [&](int a) { return ee == e.shifted(a); }));
    }
  }
  CHECK(hits > 10);
}

TEST_CASE("unit products and the colon of K by M") {
  std::mt19937 rng(5);
  for (const auto& s : small_family()) {
    auto m = RelativeIdeal::maximal(s);
    auto b = z2lab::colon(m, m);
    auto k = z2lab::canonical_ideal(s);
    if (!s.is_naturals()) CHECK(z2lab::product(m, z2lab::colon(k, m)) == z2lab::product(m, k));
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_ideal(s, rng, -8, 8);
      CHECK((z2lab::product(x, m) == m) == (z2lab::product(x, b) == b));
    }
    // type as the length of (E - M) / E
    for (int trial = 0; trial < 5; ++trial) {
      auto e = random_ideal(s, rng);
      CHECK(z2lab::type_of_ideal(e) == z2lab::length_quotient(z2lab::colon(e, m), e));
      CHECK(z2lab::type_of_ideal(e) == oracle::count_difference(oracle::colon(as_oracle(e), oracle::maximal(oracle::semigroup(s.generators()))), as_oracle(e)));
    }
  }
}
