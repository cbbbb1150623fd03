#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphtempo/bitset.hpp"

namespace graphtempo {

/// Linearly ordered, discrete set of time points. The position of a label is
/// its time index; labels are unique.
class TimeDomain {
 public:
  TimeDomain() = default;
  explicit TimeDomain(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Index of `label`; throws LookupError when absent.
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(const TimeDomain& a, const TimeDomain& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Closed range of time indices [start, end].
struct Interval {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const noexcept { return end - start + 1; }
  bool contains(std::size_t t) const noexcept { return start <= t && t <= end; }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Normalized set of intervals: sorted, non-overlapping and non-adjacent.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(std::initializer_list<Interval> intervals);
  explicit IntervalSet(std::vector<Interval> intervals);

  static IntervalSet point(std::size_t t) { return IntervalSet{Interval{t, t}}; }
  static IntervalSet range(std::size_t start, std::size_t end) { return IntervalSet{Interval{start, end}}; }
  static IntervalSet all(std::size_t n);
  static IntervalSet from_mask(const TimeMask& mask);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  bool contains(std::size_t t) const noexcept;
  std::size_t point_count() const noexcept;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet minus(const IntervalSet& other) const;

  /// Throws IntervalError if any point lies outside [0, n).
  void check_within(std::size_t n) const;
  /// Bit mask over a domain of n points; throws IntervalError when out of range.
  TimeMask mask(std::size_t n) const;

  /// Renders as "a..b,c" using the domain's labels.
  std::string to_string(const TimeDomain& time) const;
  /// Parses "label", "a..b" and comma-separated lists of those.
  static IntervalSet parse(std::string_view text, const TimeDomain& time);

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  void normalize();

  std::vector<Interval> intervals_;
};

}  // namespace graphtempo
