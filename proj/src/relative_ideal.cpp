#include "canondeg/relative_ideal.hpp"

#include <algorithm>

#include "canondeg/error.hpp"

namespace canondeg {

namespace {

void require_same_base(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (!(e.base() == f.base()))
    throw SemigroupError(ErrorKind::BaseMismatch,
                         "ideals over " + e.base().to_string() + " and " + f.base().to_string());
}

std::size_t window_len(const NumericalSemigroup& h) { return static_cast<std::size_t>(h.conductor()); }

}  // namespace

RelativeIdeal RelativeIdeal::normalize(const NumericalSemigroup& base, long long lo, const BitWindow& raw) {
  const std::size_t first = raw.find_first().value_or(raw.size());
  const auto offset = static_cast<std::ptrdiff_t>(first);
  return RelativeIdeal(base, static_cast<int>(lo + offset), raw.slice(offset, window_len(base), false, true));
}

RelativeIdeal RelativeIdeal::principal(const NumericalSemigroup& base, int v) {
  return RelativeIdeal(base, v, base.window());
}

RelativeIdeal RelativeIdeal::canonical(const NumericalSemigroup& base) {
  if (base.is_full()) throw SemigroupError(ErrorKind::IsFullMonoid, "canonical ideal of Z>=0 requested");
  const int f = base.frobenius();
  BitWindow bits(window_len(base));
  for (int x = 0; x < base.conductor(); ++x) bits.set(static_cast<std::size_t>(x), !base.contains(f - x));
  return RelativeIdeal(base, 0, std::move(bits));
}

RelativeIdeal RelativeIdeal::generated_by(const NumericalSemigroup& base, std::span<const int> gens) {
  if (gens.empty()) throw SemigroupError(ErrorKind::PreconditionUnmet, "ideal needs at least one generator");
  const int lo = *std::min_element(gens.begin(), gens.end());
  const std::size_t c = window_len(base);
  BitWindow raw(c);
  for (int g : gens) raw |= base.window().slice(-static_cast<std::ptrdiff_t>(g - lo), c, false, true);
  return normalize(base, lo, raw);
}

RelativeIdeal RelativeIdeal::maximal_ideal(const NumericalSemigroup& base) {
  if (base.is_full()) throw SemigroupError(ErrorKind::IsFullMonoid, "maximal ideal of Z>=0 requested");
  BitWindow raw = base.window();
  raw.set(0, false);
  return normalize(base, 0, raw);
}

RelativeIdeal RelativeIdeal::shifted(int v) const { return RelativeIdeal(base_, min_ + v, window_); }

std::vector<int> RelativeIdeal::minimal_generators() const {
  const std::size_t span = window_.size() + static_cast<std::size_t>(base_.multiplicity());
  const BitWindow members = window_.slice(0, span, false, true);
  BitWindow hit(span);
  for (int h : base_.generators()) hit |= members.slice(-static_cast<std::ptrdiff_t>(h), span, false, true);
  BitWindow gens = members;
  gens.and_not(hit);
  std::vector<int> out;
  for (std::size_t i = 0; i < span; ++i) {
    if (gens.test(i)) out.push_back(min_ + static_cast<int>(i));
  }
  return out;
}

std::vector<int> RelativeIdeal::members_below_tail() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (window_.test(i)) out.push_back(min_ + static_cast<int>(i));
  }
  return out;
}

bool RelativeIdeal::is_subset_of(const RelativeIdeal& other) const {
  require_same_base(*this, other);
  if (min_ < other.min_) return false;
  return window_.is_subset_of(other.window_.slice(min_ - other.min_, window_.size(), false, true));
}

long long RelativeIdeal::count_in(long long lo, long long hi) const {
  lo = std::max<long long>(lo, min_);
  if (hi <= lo) return 0;
  const long long tail_start = min_ + static_cast<long long>(window_.size());
  long long n = 0;
  if (lo < tail_start) {
    n += static_cast<long long>(window_.count_range(static_cast<std::size_t>(lo - min_),
                                                    static_cast<std::size_t>(std::min(hi, tail_start) - min_)));
  }
  if (hi > tail_start) n += hi - std::max(lo, tail_start);
  return n;
}

std::string RelativeIdeal::to_string() const {
  std::string out = "{";
  for (int z : members_below_tail()) out += std::to_string(z) + ",";
  out += ">=" + std::to_string(min_ + static_cast<int>(window_.size())) + "}";
  return out;
}

RelativeIdeal sum(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_base(e, f);
  const std::size_t c = window_len(e.base());
  const int lo = std::min(e.min(), f.min());
  BitWindow raw = e.window().slice(lo - e.min(), c, false, true);
  raw |= f.window().slice(lo - f.min(), c, false, true);
  return RelativeIdeal::normalize(e.base(), lo, raw);
}

RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_base(e, f);
  const std::size_t c = window_len(e.base());
  // E = ∪ (g + H) over minimal generators g, so E + F = ∪ (g + F).
  BitWindow raw(c);
  for (int g : e.minimal_generators())
    raw |= f.window().slice(-static_cast<std::ptrdiff_t>(g - e.min()), c, false, true);
  return RelativeIdeal::normalize(e.base(), static_cast<long long>(e.min()) + f.min(), raw);
}

RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_base(e, f);
  const std::size_t c = window_len(e.base());
  // z ∈ (E : F) forces z >= min E - min F; z >= min E - min F + c always qualifies.
  BitWindow raw(c, true);
  for (int g : f.minimal_generators()) raw &= e.window().slice(g - f.min(), c, false, true);
  return RelativeIdeal::normalize(e.base(), static_cast<long long>(e.min()) - f.min(), raw);
}

RelativeIdeal dual(const RelativeIdeal& e) { return colon(RelativeIdeal::principal(e.base(), 0), e); }

RelativeIdeal bidual(const RelativeIdeal& e) { return dual(dual(e)); }

RelativeIdeal trace(const RelativeIdeal& e) { return product(e, dual(e)); }

long long length_quotient(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (!f.is_subset_of(e))
    throw SemigroupError(ErrorKind::NotContained, f.to_string() + " is not contained in " + e.to_string());
  const long long hi = static_cast<long long>(f.min()) + static_cast<long long>(f.window().size());
  return e.count_in(e.min(), hi) - f.count_in(f.min(), hi);
}

}  // namespace canondeg
