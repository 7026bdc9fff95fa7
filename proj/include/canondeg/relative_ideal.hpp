#pragma once

#include <span>
#include <string>
#include <vector>

#include "canondeg/bit_window.hpp"
#include "canondeg/numerical_semigroup.hpp"

namespace canondeg {

/// A relative ideal E over H: a set of integers, bounded below, with E + H ⊆ E.
/// Models a fractional monomial ideal of k[[H]].
///
/// Stored as (min, window) where the window covers [min, min + conductor(H))
/// and every integer >= min + conductor(H) is a member. Since E ⊇ min + H this
/// representation is exact and canonical: equal sets compare equal.
class RelativeIdeal {
 public:
  /// v + H
  static RelativeIdeal principal(const NumericalSemigroup& base, int v);

  /// K = {x : F(H) - x ∉ H}, which has min 0 and contains H. Throws IsFullMonoid.
  static RelativeIdeal canonical(const NumericalSemigroup& base);

  /// The ideal generated by the given integers, ∪ (g + H). Throws
  /// PreconditionUnmet when `gens` is empty.
  static RelativeIdeal generated_by(const NumericalSemigroup& base, std::span<const int> gens);

  /// H \ {0}. Throws IsFullMonoid.
  static RelativeIdeal maximal_ideal(const NumericalSemigroup& base);

  const NumericalSemigroup& base() const noexcept { return base_; }
  int min() const noexcept { return min_; }
  const BitWindow& window() const noexcept { return window_; }

  bool contains(long long z) const noexcept {
    if (z < min_) return false;
    const long long off = z - min_;
    if (off >= static_cast<long long>(window_.size())) return true;
    return window_.test(static_cast<std::size_t>(off));
  }

  RelativeIdeal shifted(int v) const;

  /// E \ (E + M), M = H \ {0}; the exponents of a minimal monomial generating set.
  std::vector<int> minimal_generators() const;

  /// Members in [min, min + conductor), ascending. Together with min this
  /// fully describes E.
  std::vector<int> members_below_tail() const;

  bool is_subset_of(const RelativeIdeal& other) const;

  /// Members of E in the half-open integer range [lo, hi).
  long long count_in(long long lo, long long hi) const;

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) noexcept {
    return a.base_ == b.base_ && a.min_ == b.min_ && a.window_ == b.window_;
  }

  std::string to_string() const;

  /// Canonical ideal from members over [lo, lo + raw.size()), all integers at
  /// or beyond lo + raw.size() being members.
  static RelativeIdeal normalize(const NumericalSemigroup& base, long long lo, const BitWindow& raw);

 private:
  RelativeIdeal(NumericalSemigroup base, int min, BitWindow window)
      : base_(std::move(base)), min_(min), window_(std::move(window)) {}

  NumericalSemigroup base_;
  int min_ = 0;
  BitWindow window_;
};

/// E ∪ F (ideal sum). Throws BaseMismatch.
RelativeIdeal sum(const RelativeIdeal& e, const RelativeIdeal& f);

/// {x + y : x ∈ E, y ∈ F}. Throws BaseMismatch.
RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f);

/// (E : F) = {z : z + F ⊆ E}. Throws BaseMismatch.
RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f);

/// E* = (H : E)
RelativeIdeal dual(const RelativeIdeal& e);

/// E** = (H : (H : E))
RelativeIdeal bidual(const RelativeIdeal& e);

/// E · E*
RelativeIdeal trace(const RelativeIdeal& e);

/// λ(E / F) = |E \ F| for F ⊆ E. Throws NotContained or BaseMismatch.
long long length_quotient(const RelativeIdeal& e, const RelativeIdeal& f);

}  // namespace canondeg
