#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace canondeg {

/// Fixed-length bit vector with word-level shift/combine operations.
///
/// Integer sets in this library are cofinite above and bounded below, so most
/// reads past either end are answered by a fill value: slice() takes the fill
/// for positions below zero and for positions at or beyond size().
class BitWindow {
 public:
  BitWindow() = default;
  explicit BitWindow(std::size_t size, bool value = false);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  std::size_t count() const noexcept;
  /// Number of set bits in [lo, hi), clamped to the window.
  std::size_t count_range(std::size_t lo, std::size_t hi) const noexcept;
  bool all() const noexcept { return count() == size_; }

  std::optional<std::size_t> find_first() const noexcept;
  std::optional<std::size_t> find_last_unset() const noexcept;

  /// Bits [offset, offset + len) of this window as a new window. Positions
  /// below 0 read as `below`, positions at or past size() read as `tail`.
  BitWindow slice(std::ptrdiff_t offset, std::size_t len, bool below, bool tail) const;

  BitWindow& operator|=(const BitWindow& other) noexcept;
  BitWindow& operator&=(const BitWindow& other) noexcept;
  /// this &= ~other
  BitWindow& and_not(const BitWindow& other) noexcept;

  /// Every set bit here is also set in `other` (equal lengths).
  bool is_subset_of(const BitWindow& other) const noexcept;

  friend bool operator==(const BitWindow& a, const BitWindow& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::uint64_t word_at(std::ptrdiff_t index, bool below, bool tail) const noexcept;
  std::uint64_t bits_at(std::ptrdiff_t pos, bool below, bool tail) const noexcept;
  void clear_padding() noexcept;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace canondeg
