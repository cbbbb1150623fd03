#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace graphtempo {

/// Read-only view over a packed row of time bits. Bits past size() are zero.
class BitRow {
 public:
  BitRow() = default;
  BitRow(std::span<const std::uint64_t> words, std::size_t size)
      : words_(words), size_(size) {}

  std::size_t size() const noexcept { return size_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  bool any() const noexcept;
  std::size_t count() const noexcept;

  /// True iff some bit is set in both rows.
  bool intersects(BitRow other) const noexcept;
  /// True iff every bit set in `other` is also set here.
  bool covers(BitRow other) const noexcept;
  /// Number of bits set in both rows.
  std::size_t count_and(BitRow other) const noexcept;

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(BitRow a, BitRow b) noexcept;

 private:
  std::span<const std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Owning set of time points over a domain of fixed size.
class TimeMask {
 public:
  TimeMask() = default;
  explicit TimeMask(std::size_t size);
  explicit TimeMask(BitRow row);

  static TimeMask all(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  BitRow view() const noexcept { return {words_, size_}; }
  operator BitRow() const noexcept { return view(); }  // NOLINT

  bool test(std::size_t i) const noexcept { return view().test(i); }
  void set(std::size_t i, bool value = true) noexcept;
  bool any() const noexcept { return view().any(); }
  bool none() const noexcept { return !any(); }
  std::size_t count() const noexcept { return view().count(); }

  TimeMask& operator&=(BitRow other) noexcept;
  TimeMask& operator|=(BitRow other) noexcept;
  /// Clears every bit that is set in `other`.
  TimeMask& subtract(BitRow other) noexcept;

  friend TimeMask operator&(TimeMask a, BitRow b) noexcept { return a &= b; }
  friend TimeMask operator|(TimeMask a, BitRow b) noexcept { return a |= b; }
  friend bool operator==(const TimeMask& a, const TimeMask& b) noexcept {
    return a.view() == b.view();
  }

  template <class F>
  void for_each_set(F&& f) const {
    view().for_each_set(std::forward<F>(f));
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t words_for(std::size_t bits) noexcept { return (bits + 63) / 64; }

}  // namespace graphtempo
