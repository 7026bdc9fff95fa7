#include "canondeg/numerical_semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "canondeg/error.hpp"

namespace canondeg {

namespace {

// Sieve length cap; max(gen) * min(gen) beyond this is refused.
constexpr long long kMaxWindow = 1LL << 26;

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> raw_generators) {
  if (raw_generators.empty()) throw SemigroupError(ErrorKind::EmptyGenerators, "no generators given");
  std::vector<int> gens(raw_generators.begin(), raw_generators.end());
  for (int g : gens) {
    if (g <= 0) throw SemigroupError(ErrorKind::InvalidGenerator, "generator " + std::to_string(g) + " is not positive");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  int d = 0;
  for (int g : gens) d = std::gcd(d, g);
  if (d != 1) throw SemigroupError(ErrorKind::GcdNotOne, "gcd of generators is " + std::to_string(d));

  // max * min bounds the conductor from above
  const long long bound = static_cast<long long>(gens.front()) * gens.back();
  if (bound > kMaxWindow)
    throw SemigroupError(ErrorKind::WindowTooLarge, "sieve window " + std::to_string(bound) + " too large");

  BitWindow members(static_cast<std::size_t>(bound) + 1);
  members.set(0);
  for (long long x = 1; x <= bound; ++x) {
    for (int g : gens) {
      if (g > x) break;
      if (members.test(static_cast<std::size_t>(x - g))) {
        members.set(static_cast<std::size_t>(x));
        break;
      }
    }
  }
  return build_trimmed(members);
}

NumericalSemigroup NumericalSemigroup::build_trimmed(const BitWindow& members) {
  auto data = std::make_shared<Data>();
  const auto last_gap = members.find_last_unset();
  data->conductor = last_gap ? static_cast<int>(*last_gap) + 1 : 0;
  const auto c = static_cast<std::size_t>(data->conductor);
  data->window = members.slice(0, c, false, true);
  data->genus = static_cast<int>(c - data->window.count());

  if (c == 0) {
    data->generators = {1};
    return NumericalSemigroup(std::move(data));
  }

  // M = H \ {0} over [0, c + m); x in M is a generator iff x is not in M + M.
  std::size_t m = 1;
  while (m < c && !data->window.test(m)) ++m;
  const std::size_t span = c + m;
  BitWindow nonzero = data->window.slice(0, span, false, true);
  nonzero.set(0, false);
  BitWindow sums(span);
  for (std::size_t x = m; x < span; ++x) {
    if (!nonzero.test(x) || sums.test(x)) continue;
    data->generators.push_back(static_cast<int>(x));
    sums |= nonzero.slice(-static_cast<std::ptrdiff_t>(x), span, false, true);
  }
  return NumericalSemigroup(std::move(data));
}

NumericalSemigroup NumericalSemigroup::from_window(const BitWindow& members) {
  if (!members.empty() && !members.test(0))
    throw SemigroupError(ErrorKind::PreconditionUnmet, "0 must be an element");
  NumericalSemigroup h = build_trimmed(members);
  // Every element is a sum of the recovered generators, so closure under
  // adding generators is closure under addition.
  const int c = h.conductor();
  for (int g : h.generators()) {
    for (int x = 0; x + g < c; ++x) {
      if (h.contains(x) && !h.contains(x + g))
        throw SemigroupError(ErrorKind::PreconditionUnmet, "member set is not additively closed");
    }
  }
  return h;
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int> gaps) {
  int top = 0;
  for (int z : gaps) {
    if (z <= 0) throw SemigroupError(ErrorKind::PreconditionUnmet, "gaps must be positive");
    top = std::max(top, z);
  }
  BitWindow members(static_cast<std::size_t>(top) + 1, true);
  for (int z : gaps) members.set(static_cast<std::size_t>(z), false);
  return from_window(members);
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(genus()));
  for (int z = 0; z < conductor(); ++z) {
    if (!contains(z)) out.push_back(z);
  }
  return out;
}

SemigroupProfile NumericalSemigroup::profile() const {
  SemigroupProfile p;
  p.multiplicity = multiplicity();
  const int f = frobenius();
  if (is_full()) {
    // k[[t]]: the canonical module is free, type 1.
    p.pseudo_frobenius = {-1};
  } else {
    for (int z : gaps()) {
      const bool pf = std::all_of(generators().begin(), generators().end(), [&](int g) { return contains(z + g); });
      if (pf) p.pseudo_frobenius.push_back(z);
    }
  }
  p.type = static_cast<int>(p.pseudo_frobenius.size());
  p.n_of = f > 0 ? static_cast<int>(window().count_range(0, static_cast<std::size_t>(f))) : 0;
  p.is_symmetric = true;
  for (int z = 0; z <= f; ++z) {
    if (contains(z) == contains(f - z)) {
      p.is_symmetric = false;
      break;
    }
  }
  return p;
}

NumericalSemigroup NumericalSemigroup::m_colon_m() const {
  if (is_full()) throw SemigroupError(ErrorKind::IsFullMonoid, "Z>=0 has no proper maximal ideal here");
  const int c = conductor();
  // z >= c always qualifies; z + g in M for every generator g suffices.
  BitWindow members(static_cast<std::size_t>(c));
  for (int z = 0; z < c; ++z) {
    const bool ok = std::all_of(generators().begin(), generators().end(), [&](int g) { return contains(z + g); });
    members.set(static_cast<std::size_t>(z), ok);
  }
  return build_trimmed(members);
}

std::vector<NumericalSemigroup> NumericalSemigroup::children() const {
  std::vector<NumericalSemigroup> out;
  for (int g : generators()) {
    if (g <= frobenius()) continue;
    BitWindow members = window().slice(0, static_cast<std::size_t>(g) + 1, false, true);
    members.set(static_cast<std::size_t>(g), false);
    out.push_back(build_trimmed(members));
  }
  return out;
}

std::string NumericalSemigroup::to_string() const { return "<" + join_generators(generators()) + ">"; }

std::string join_generators(const std::vector<int>& generators) {
  std::string out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(generators[i]);
  }
  return out;
}

std::vector<int> parse_generators(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw SemigroupError(ErrorKind::InvalidGenerator, "empty entry in '" + text + "'");
    const std::string tok = item.substr(b, e - b + 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw SemigroupError(ErrorKind::InvalidGenerator, "cannot parse '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace canondeg
