#include "z2lab/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "z2lab/error.hpp"

namespace z2lab {

struct NumericalSemigroup::Data {
  std::vector<int> generators;
  std::vector<int> gaps;
  std::vector<int> pseudo_frobenius;
  std::vector<char> member;  // membership for [0, conductor)
  int frobenius = -1;
  int multiplicity = 1;
};

namespace {

// Minimal generators of the semigroup given by `member` on [0, conductor).
std::vector<int> minimal_generators(const std::vector<char>& member, int conductor, int multiplicity) {
  auto in = [&](int z) { return z >= conductor || (z >= 0 && member[static_cast<std::size_t>(z)]); };
  std::vector<int> gens;
  // Every minimal generator is at most conductor + multiplicity.
  for (int m = 1; m <= conductor + multiplicity; ++m) {
    if (!in(m)) continue;
    bool decomposable = false;
    for (int s = multiplicity; s <= m - multiplicity && !decomposable; ++s)
      decomposable = in(s) && in(m - s);
    if (!decomposable) gens.push_back(m);
  }
  return gens;
}

}  // namespace

std::shared_ptr<const NumericalSemigroup::Data> NumericalSemigroup::finish(std::vector<char> member_to_bound, int bound) {
  auto d = std::make_shared<Data>();
  int frob = -1;
  for (int z = bound - 1; z >= 0; --z) {
    if (!member_to_bound[static_cast<std::size_t>(z)]) {
      frob = z;
      break;
    }
  }
  d->frobenius = frob;
  const int conductor = frob + 1;
  d->member.assign(member_to_bound.begin(), member_to_bound.begin() + conductor);
  for (int z = 0; z < conductor; ++z)
    if (!d->member[static_cast<std::size_t>(z)]) d->gaps.push_back(z);
  d->multiplicity = 1;
  while (d->multiplicity < conductor && !d->member[static_cast<std::size_t>(d->multiplicity)]) ++d->multiplicity;
  d->generators = minimal_generators(d->member, conductor, d->multiplicity);

  auto in = [&](int z) { return z >= conductor || (z >= 0 && d->member[static_cast<std::size_t>(z)]); };
  if (conductor == 0) {
    d->pseudo_frobenius = {-1};
  } else {
    for (int g : d->gaps) {
      bool pf = std::all_of(d->generators.begin(), d->generators.end(), [&](int s) { return in(g + s); });
      if (pf) d->pseudo_frobenius.push_back(g);
    }
  }
  return d;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> gens) {
  if (gens.empty()) fail(ErrorCode::EmptyGenerators, "generator list is empty");
  int g = 0;
  for (int x : gens) {
    if (x <= 0) fail(ErrorCode::ParseError, "generators must be positive, got " + std::to_string(x));
    g = std::gcd(g, x);
  }
  if (g != 1) fail(ErrorCode::NotCoprime, "gcd of generators is " + std::to_string(g));

  const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  const int bound = (*lo) * (*hi) + 1;  // Frobenius number < min * max
  std::vector<char> member(static_cast<std::size_t>(bound), 0);
  member[0] = 1;
  for (int z = 1; z < bound; ++z)
    for (int s : gens)
      if (s <= z && member[static_cast<std::size_t>(z - s)]) {
        member[static_cast<std::size_t>(z)] = 1;
        break;
      }
  return NumericalSemigroup(finish(std::move(member), bound));
}

NumericalSemigroup NumericalSemigroup::from_members(const std::function<bool(int)>& member, int bound) {
  bound = std::max(bound, 1);
  std::vector<char> bits(static_cast<std::size_t>(bound), 0);
  for (int z = 0; z < bound; ++z) bits[static_cast<std::size_t>(z)] = member(z) ? 1 : 0;
  if (!bits[0]) fail(ErrorCode::InvalidAlgebra, "member set does not contain 0");
  std::shared_ptr<const Data> d = finish(std::move(bits), bound);
  // Closure check against the generators found.
  auto in = [&](int z) {
    return z >= d->frobenius + 1 || (z >= 0 && d->member[static_cast<std::size_t>(z)]);
  };
  for (int z = 0; z <= d->frobenius; ++z) {
    if (!in(z)) continue;
    for (int s : d->generators)
      if (!in(z + s)) fail(ErrorCode::InvalidAlgebra, "member set is not additively closed");
  }
  return NumericalSemigroup(std::move(d));
}

const std::vector<int>& NumericalSemigroup::generators() const noexcept { return d_->generators; }
const std::vector<int>& NumericalSemigroup::gaps() const noexcept { return d_->gaps; }
const std::vector<int>& NumericalSemigroup::pseudo_frobenius() const noexcept { return d_->pseudo_frobenius; }
int NumericalSemigroup::frobenius() const noexcept { return d_->frobenius; }
int NumericalSemigroup::multiplicity() const noexcept { return d_->multiplicity; }

bool NumericalSemigroup::contains(int z) const noexcept {
  if (z < 0) return false;
  if (z > d_->frobenius) return true;
  return d_->member[static_cast<std::size_t>(z)] != 0;
}

std::string NumericalSemigroup::to_string() const {
  std::string out;
  for (int g : d_->generators) {
    if (!out.empty()) out += ',';
    out += std::to_string(g);
  }
  return out;
}

bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
  return a.d_ == b.d_ || a.d_->gaps == b.d_->gaps;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i < text.size() && (text[i] == '{' || text[i] == '<' || text[i] == '[')) ++i;
  while (true) {
    skip_ws();
    if (i >= text.size() || text[i] == '}' || text[i] == '>' || text[i] == ']') break;
    int value = 0;
    if (text[i] == '+') ++i;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) fail(ErrorCode::ParseError, "bad integer list: '" + std::string(text) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    out.push_back(value);
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    skip_ws();
    if (i < text.size() && (text[i] == '}' || text[i] == '>' || text[i] == ']')) ++i;
    skip_ws();
    if (i != text.size()) fail(ErrorCode::ParseError, "trailing characters in '" + std::string(text) + "'");
    break;
  }
  return out;
}

}  // namespace z2lab
