#include "z2lab/ideal.hpp"

#include <algorithm>

#include "z2lab/error.hpp"

namespace z2lab {

namespace {

void require_same_base(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (!(e.base() == f.base()))
    fail(ErrorCode::BaseMismatch, "ideals over <" + e.base().to_string() + "> and <" + f.base().to_string() + ">");
}

}  // namespace

RelativeIdeal RelativeIdeal::normalized(const NumericalSemigroup& base, int lo, std::vector<char> bits) {
  const int n = static_cast<int>(bits.size());
  int first = 0;
  while (first < n && !bits[static_cast<std::size_t>(first)]) ++first;
  int last_gap = n - 1;
  while (last_gap >= first && bits[static_cast<std::size_t>(last_gap)]) --last_gap;
  const int lower = lo + first;
  const int conductor = last_gap >= first ? lo + last_gap + 1 : lower;
  std::vector<char> window(bits.begin() + first, bits.begin() + (conductor - lo));
  RelativeIdeal out(base, lower, conductor, std::move(window));
  for (int z = lower; z < conductor; ++z) {
    if (!out.contains(z)) continue;
    for (int s : base.generators())
      if (!out.contains(z + s))
        fail(ErrorCode::InvalidAlgebra,
             "set is not closed under addition of S: " + std::to_string(z) + " + " + std::to_string(s));
  }
  return out;
}

RelativeIdeal RelativeIdeal::from_generators(const NumericalSemigroup& base, std::span<const int> gens) {
  if (gens.empty()) fail(ErrorCode::EmptyGenerators, "ideal needs at least one generator");
  const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  const int top = *hi + base.conductor();
  return from_window(base, *lo, top, [&](int z) {
    return std::any_of(gens.begin(), gens.end(), [&](int g) { return base.contains(z - g); });
  });
}

RelativeIdeal RelativeIdeal::whole(const NumericalSemigroup& base) {
  return from_window(base, 0, base.conductor(), [&](int z) { return base.contains(z); });
}

RelativeIdeal RelativeIdeal::maximal(const NumericalSemigroup& base) {
  return from_window(base, 1, std::max(base.conductor(), 1), [&](int z) { return base.contains(z); });
}

RelativeIdeal RelativeIdeal::ray(const NumericalSemigroup& base, int from) {
  return RelativeIdeal(base, from, from, {});
}

std::vector<int> RelativeIdeal::members_below_conductor() const {
  std::vector<int> out;
  for (int z = lower_; z < conductor_; ++z)
    if (contains(z)) out.push_back(z);
  return out;
}

RelativeIdeal RelativeIdeal::shifted(int by) const { return RelativeIdeal(base_, lower_ + by, conductor_ + by, window_); }

bool RelativeIdeal::is_subset_of(const RelativeIdeal& other) const {
  if (lower_ < other.lower_) return false;
  const int top = std::max(conductor_, other.conductor_);
  for (int z = lower_; z < top; ++z)
    if (contains(z) && !other.contains(z)) return false;
  return true;
}

bool RelativeIdeal::is_translate_of(const RelativeIdeal& other) const {
  return conductor_ - lower_ == other.conductor_ - other.lower_ && window_ == other.window_;
}

std::string RelativeIdeal::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int g : min_gens(*this)) {
    if (!first) out += ',';
    out += std::to_string(g);
    first = false;
  }
  return out + "}";
}

bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) noexcept {
  return a.lower_ == b.lower_ && a.conductor_ == b.conductor_ && a.window_ == b.window_ && a.base_ == b.base_;
}

RelativeIdeal sum_ideal(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_base(e, f);
  const int lo = std::min(e.min(), f.min());
  const int hi = std::min(e.conductor(), f.conductor());
  return RelativeIdeal::from_window(e.base(), lo, std::max(lo, hi),
                                    [&](int z) { return e.contains(z) || f.contains(z); });
}

RelativeIdeal intersect(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_base(e, f);
  const int lo = std::max(e.min(), f.min());
  const int hi = std::max(e.conductor(), f.conductor());
  return RelativeIdeal::from_window(e.base(), lo, std::max(lo, hi),
                                    [&](int z) { return e.contains(z) && f.contains(z); });
}

RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_base(e, f);
  const int lo = e.min() + f.min();
  const int hi = std::min(e.conductor() + f.min(), f.conductor() + e.min());
  std::vector<char> bits(static_cast<std::size_t>(hi - lo), 0);
  const auto em = e.members_below_conductor();
  const auto fm = f.members_below_conductor();
  for (int x : em)
    for (int y : fm)
      if (x + y < hi) bits[static_cast<std::size_t>(x + y - lo)] = 1;
  // Members past a conductor pair with the other ideal's minimum.
  for (int z = lo; z < hi; ++z) {
    if (z - f.min() >= e.conductor() || z - e.min() >= f.conductor()) bits[static_cast<std::size_t>(z - lo)] = 1;
  }
  return RelativeIdeal::from_window(e.base(), lo, hi,
                                    [&](int z) { return bits[static_cast<std::size_t>(z - lo)] != 0; });
}

RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_base(e, f);
  const auto gens = min_gens(f);
  const int lo = e.min() - f.min();
  const int hi = e.conductor() - f.min();
  return RelativeIdeal::from_window(e.base(), lo, std::max(lo, hi), [&](int z) {
    return std::all_of(gens.begin(), gens.end(), [&](int g) { return e.contains(z + g); });
  });
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& s) {
  const int frob = s.frobenius();
  return RelativeIdeal::from_window(s, 0, frob + 1, [&](int z) { return !s.contains(frob - z); });
}

RelativeIdeal trace(const RelativeIdeal& e) { return product(e, colon(RelativeIdeal::whole(e.base()), e)); }

std::vector<int> min_gens(const RelativeIdeal& e) {
  const auto& gens = e.base().generators();
  const int top = e.conductor() + gens.back();
  std::vector<int> out;
  for (int z = e.min(); z <= top; ++z) {
    if (!e.contains(z)) continue;
    bool reducible = std::any_of(gens.begin(), gens.end(), [&](int s) { return e.contains(z - s); });
    if (!reducible) out.push_back(z);
  }
  return out;
}

int length_quotient(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_base(e, f);
  if (!f.is_subset_of(e)) fail(ErrorCode::NotContained, "length_quotient requires F ⊆ E");
  int count = 0;
  const int top = std::max(e.conductor(), f.conductor());
  for (int z = e.min(); z < top; ++z)
    if (e.contains(z) && !f.contains(z)) ++count;
  return count;
}

int type_of_ideal(const RelativeIdeal& e) {
  return length_quotient(colon(e, RelativeIdeal::maximal(e.base())), e);
}

RelativeIdeal ring_generated_by_K(const NumericalSemigroup& s) {
  const RelativeIdeal k = canonical_ideal(s);
  RelativeIdeal power = k;
  while (true) {
    RelativeIdeal next = product(power, k);
    if (next == power) return power;
    power = std::move(next);
  }
}

}  // namespace z2lab
