#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "canondeg/bit_window.hpp"

namespace canondeg {

struct SemigroupProfile {
  int multiplicity = 0;
  std::vector<int> pseudo_frobenius;
  int type = 0;
  /// |{h in H : h < F(H)}|
  int n_of = 0;
  bool is_symmetric = false;
};

/// A numerical semigroup H, i.e. a cofinite additive submonoid of the
/// nonnegative integers.
///
/// Immutable after construction. Copies share the underlying data, so a
/// semigroup is cheap to pass around and to embed in ideals over it.
/// H = Z>=0 is representable (generators {1}, Frobenius number -1).
class NumericalSemigroup {
 public:
  /// Semigroup generated by `raw_generators`. Duplicates and redundant
  /// generators are accepted; the minimal generating set is extracted.
  /// Throws EmptyGenerators, InvalidGenerator (non-positive), GcdNotOne,
  /// WindowTooLarge.
  static NumericalSemigroup from_generators(std::span<const int> raw_generators);

  /// Semigroup whose elements below `members.size()` are the set bits of
  /// `members`; every integer >= members.size() is an element. Bit 0 must be
  /// set and the set must be additively closed (checked).
  static NumericalSemigroup from_window(const BitWindow& members);

  /// Semigroup with the given gap set (all positive). Throws
  /// PreconditionUnmet if the complement is not additively closed.
  static NumericalSemigroup from_gaps(std::span<const int> gaps);

  static NumericalSemigroup full() { return from_window(BitWindow{}); }

  const std::vector<int>& generators() const noexcept { return data_->generators; }
  int conductor() const noexcept { return data_->conductor; }
  int frobenius() const noexcept { return data_->conductor - 1; }
  int genus() const noexcept { return data_->genus; }
  int multiplicity() const noexcept { return data_->generators.front(); }
  bool is_full() const noexcept { return data_->conductor == 0; }

  /// Membership of [0, conductor).
  const BitWindow& window() const noexcept { return data_->window; }

  bool contains(long long z) const noexcept {
    if (z < 0) return false;
    if (z >= data_->conductor) return true;
    return data_->window.test(static_cast<std::size_t>(z));
  }

  std::vector<int> gaps() const;
  SemigroupProfile profile() const;

  /// (M - M) with M = H \ {0}: the semigroup of (m : m). Throws IsFullMonoid.
  NumericalSemigroup m_colon_m() const;

  /// Children in the semigroup tree: H \ {g} for each minimal generator
  /// g > F(H), ordered by g.
  std::vector<NumericalSemigroup> children() const;

  /// True when both views share the same data block.
  bool same_instance(const NumericalSemigroup& other) const noexcept { return data_ == other.data_; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.data_ == b.data_ || a.data_->generators == b.data_->generators;
  }

  /// "<5,7,9>"
  std::string to_string() const;

 private:
  struct Data {
    std::vector<int> generators;
    int conductor = 0;
    int genus = 0;
    BitWindow window;
  };

  explicit NumericalSemigroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static NumericalSemigroup build_trimmed(const BitWindow& members);

  std::shared_ptr<const Data> data_;
};

/// Comma-separated generator list, "5,7,9".
std::string join_generators(const std::vector<int>& generators);

/// Parses "5,7,9" (spaces tolerated). Throws InvalidGenerator on junk.
std::vector<int> parse_generators(const std::string& text);

}  // namespace canondeg
