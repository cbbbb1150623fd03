#include "graphtempo/time_domain.hpp"

#include <algorithm>

#include "graphtempo/errors.hpp"

namespace graphtempo {

TimeDomain::TimeDomain(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw UsageError("time domain must contain at least one time point");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw UsageError("duplicate time label '" + labels_[i] + "'");
    }
  }
}

std::optional<std::size_t> TimeDomain::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TimeDomain::index_of(std::string_view label) const {
  if (auto index = find(label)) return *index;
  throw LookupError("unknown time label '" + std::string(label) + "'");
}

IntervalSet::IntervalSet(std::initializer_list<Interval> intervals) : intervals_(intervals) {
  normalize();
}

IntervalSet::IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  normalize();
}

IntervalSet IntervalSet::all(std::size_t n) {
  if (n == 0) return {};
  return range(0, n - 1);
}

IntervalSet IntervalSet::from_mask(const TimeMask& mask) {
  std::vector<Interval> out;
  mask.for_each_set([&](std::size_t t) {
    if (!out.empty() && out.back().end + 1 == t) {
      out.back().end = t;
    } else {
      out.push_back({t, t});
    }
  });
  IntervalSet set;
  set.intervals_ = std::move(out);
  return set;
}

void IntervalSet::normalize() {
  for (const Interval& iv : intervals_) {
    if (iv.start > iv.end) {
      throw IntervalError("interval start " + std::to_string(iv.start) + " exceeds end " +
                          std::to_string(iv.end));
    }
  }
  std::sort(intervals_.begin(), intervals_.end());
  std::vector<Interval> merged;
  for (const Interval& iv : intervals_) {
    if (!merged.empty() && iv.start <= merged.back().end + 1) {
      merged.back().end = std::max(merged.back().end, iv.end);
    } else {
      merged.push_back(iv);
    }
  }
  intervals_ = std::move(merged);
}

bool IntervalSet::contains(std::size_t t) const noexcept {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [t](const Interval& iv) { return iv.contains(t); });
}

std::size_t IntervalSet::point_count() const noexcept {
  std::size_t total = 0;
  for (const Interval& iv : intervals_) total += iv.length();
  return total;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const Interval& a : intervals_) {
    for (const Interval& b : other.intervals_) {
      const std::size_t lo = std::max(a.start, b.start);
      const std::size_t hi = std::min(a.end, b.end);
      if (lo <= hi) out.push_back({lo, hi});
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::minus(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const Interval& a : intervals_) {
    std::size_t cursor = a.start;
    bool open = true;
    for (const Interval& b : other.intervals_) {
      if (b.end < cursor || b.start > a.end) continue;
      if (b.start > cursor) out.push_back({cursor, b.start - 1});
      if (b.end >= a.end) {
        open = false;
        break;
      }
      cursor = b.end + 1;
    }
    if (open && cursor <= a.end) out.push_back({cursor, a.end});
  }
  return IntervalSet(std::move(out));
}

void IntervalSet::check_within(std::size_t n) const {
  if (!intervals_.empty() && intervals_.back().end >= n) {
    throw IntervalError("interval ends at index " + std::to_string(intervals_.back().end) +
                        " but the time domain has " + std::to_string(n) + " points");
  }
}

TimeMask IntervalSet::mask(std::size_t n) const {
  check_within(n);
  TimeMask m(n);
  for (const Interval& iv : intervals_) {
    for (std::size_t t = iv.start; t <= iv.end; ++t) m.set(t);
  }
  return m;
}

std::string IntervalSet::to_string(const TimeDomain& time) const {
  std::string out;
  for (const Interval& iv : intervals_) {
    if (!out.empty()) out += ',';
    out += time.label(iv.start);
    if (iv.end != iv.start) out += ".." + time.label(iv.end);
  }
  return out;
}

IntervalSet IntervalSet::parse(std::string_view text, const TimeDomain& time) {
  std::vector<Interval> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    if (item.empty()) throw IntervalError("empty item in interval list '" + std::string(text) + "'");
    const std::size_t dots = item.find("..");
    std::size_t start = 0;
    std::size_t end = 0;
    try {
      if (dots == std::string_view::npos) {
        start = end = time.index_of(item);
      } else {
        start = time.index_of(item.substr(0, dots));
        end = time.index_of(item.substr(dots + 2));
      }
    } catch (const LookupError& e) {
      throw IntervalError(e.what());
    }
    if (start > end) {
      throw IntervalError("interval '" + std::string(item) + "' ends before it starts");
    }
    out.push_back({start, end});
    pos = comma + 1;
  }
  return IntervalSet(std::move(out));
}

}  // namespace graphtempo
