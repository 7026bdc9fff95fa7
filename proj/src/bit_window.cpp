#include "canondeg/bit_window.hpp"

#include <bit>

namespace canondeg {

namespace {

constexpr std::uint64_t kAllOnes = ~std::uint64_t{0};

constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

// floor division / modulo for possibly negative positions
constexpr std::ptrdiff_t floor_div64(std::ptrdiff_t x) { return x >= 0 ? x / 64 : -((-x + 63) / 64); }

}  // namespace

BitWindow::BitWindow(std::size_t size, bool value)
    : size_(size), words_(word_count(size), value ? kAllOnes : 0) {
  clear_padding();
}

void BitWindow::clear_padding() noexcept {
  const std::size_t rem = size_ & 63;
  if (rem != 0) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

std::size_t BitWindow::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitWindow::count_range(std::size_t lo, std::size_t hi) const noexcept {
  if (hi > size_) hi = size_;
  if (lo >= hi) return 0;
  std::size_t n = 0;
  // partial first/last words handled bitwise; bulk by popcount
  std::size_t i = lo;
  while (i < hi && (i & 63) != 0) n += test(i++);
  while (i + 64 <= hi) {
    n += static_cast<std::size_t>(std::popcount(words_[i >> 6]));
    i += 64;
  }
  while (i < hi) n += test(i++);
  return n;
}

std::optional<std::size_t> BitWindow::find_first() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return std::nullopt;
}

std::optional<std::size_t> BitWindow::find_last_unset() const noexcept {
  for (std::size_t k = words_.size(); k-- > 0;) {
    std::uint64_t inv = ~words_[k];
    if (k + 1 == words_.size() && (size_ & 63) != 0) inv &= (std::uint64_t{1} << (size_ & 63)) - 1;
    if (inv != 0) return k * 64 + 63 - static_cast<std::size_t>(std::countl_zero(inv));
  }
  return std::nullopt;
}

std::uint64_t BitWindow::word_at(std::ptrdiff_t index, bool below, bool tail) const noexcept {
  if (index < 0) return below ? kAllOnes : 0;
  const auto k = static_cast<std::size_t>(index);
  if (k >= words_.size()) return tail ? kAllOnes : 0;
  std::uint64_t w = words_[k];
  if (tail && k + 1 == words_.size() && (size_ & 63) != 0) w |= kAllOnes << (size_ & 63);
  return w;
}

std::uint64_t BitWindow::bits_at(std::ptrdiff_t pos, bool below, bool tail) const noexcept {
  const std::ptrdiff_t q = floor_div64(pos);
  const auto r = static_cast<unsigned>(pos - q * 64);
  const std::uint64_t lo = word_at(q, below, tail);
  if (r == 0) return lo;
  return (lo >> r) | (word_at(q + 1, below, tail) << (64 - r));
}

BitWindow BitWindow::slice(std::ptrdiff_t offset, std::size_t len, bool below, bool tail) const {
  BitWindow out(len);
  for (std::size_t k = 0; k < out.words_.size(); ++k)
    out.words_[k] = bits_at(offset + static_cast<std::ptrdiff_t>(k * 64), below, tail);
  out.clear_padding();
  return out;
}

BitWindow& BitWindow::operator|=(const BitWindow& other) noexcept {
  for (std::size_t k = 0; k < words_.size() && k < other.words_.size(); ++k) words_[k] |= other.words_[k];
  clear_padding();
  return *this;
}

BitWindow& BitWindow::operator&=(const BitWindow& other) noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= k < other.words_.size() ? other.words_[k] : 0;
  return *this;
}

BitWindow& BitWindow::and_not(const BitWindow& other) noexcept {
  for (std::size_t k = 0; k < words_.size() && k < other.words_.size(); ++k) words_[k] &= ~other.words_[k];
  return *this;
}

bool BitWindow::is_subset_of(const BitWindow& other) const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    const std::uint64_t o = k < other.words_.size() ? other.words_[k] : 0;
    if ((words_[k] & ~o) != 0) return false;
  }
  return true;
}

}  // namespace canondeg
