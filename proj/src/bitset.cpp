#include "graphtempo/bitset.hpp"

#include <algorithm>

namespace graphtempo {

bool BitRow::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitRow::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitRow::intersects(BitRow other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool BitRow::covers(BitRow other) const noexcept {
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    const std::uint64_t mine = i < words_.size() ? words_[i] : 0;
    if ((other.words_[i] & ~mine) != 0) return false;
  }
  return true;
}

std::size_t BitRow::count_and(BitRow other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

bool operator==(BitRow a, BitRow b) noexcept {
  return a.size_ == b.size_ && std::equal(a.words_.begin(), a.words_.end(),
                                          b.words_.begin(), b.words_.end());
}

TimeMask::TimeMask(std::size_t size) : size_(size), words_(words_for(size), 0) {}

TimeMask::TimeMask(BitRow row) : size_(row.size()), words_(row.words().begin(), row.words().end()) {}

TimeMask TimeMask::all(std::size_t size) {
  TimeMask mask(size);
  for (std::size_t i = 0; i < size; ++i) mask.set(i);
  return mask;
}

void TimeMask::set(std::size_t i, bool value) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= bit;
  } else {
    words_[i >> 6] &= ~bit;
  }
}

TimeMask& TimeMask::operator&=(BitRow other) noexcept {
  const auto theirs = other.words();
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= i < theirs.size() ? theirs[i] : 0;
  }
  return *this;
}

TimeMask& TimeMask::operator|=(BitRow other) noexcept {
  const auto theirs = other.words();
  const std::size_t n = std::min(words_.size(), theirs.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] |= theirs[i];
  return *this;
}

TimeMask& TimeMask::subtract(BitRow other) noexcept {
  const auto theirs = other.words();
  const std::size_t n = std::min(words_.size(), theirs.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~theirs[i];
  return *this;
}

}  // namespace graphtempo
