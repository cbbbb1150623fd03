#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphtempo/bitset.hpp"
#include "graphtempo/time_domain.hpp"

namespace graphtempo {

/// Dictionary code of a MISSING attribute value.
inline constexpr std::int32_t kMissing = -1;

/// Rows of time bits, one bit per time point (the V and E arrays).
class PresenceMatrix {
 public:
  PresenceMatrix() = default;
  explicit PresenceMatrix(std::size_t columns);

  std::size_t columns() const noexcept { return columns_; }
  std::size_t rows() const noexcept { return rows_; }

  BitRow row(std::size_t r) const noexcept {
    return {std::span<const std::uint64_t>(words_).subspan(r * stride_, stride_), columns_};
  }
  bool test(std::size_t r, std::size_t t) const noexcept { return row(r).test(t); }

  /// Appends an all-zero row and returns its index.
  std::size_t add_row();
  void append_row(BitRow bits);
  /// Appends `bits & mask`.
  void append_masked(BitRow bits, BitRow mask);
  void set(std::size_t r, std::size_t t, bool value = true) noexcept;

  friend bool operator==(const PresenceMatrix&, const PresenceMatrix&) = default;

 private:
  std::size_t columns_ = 0;
  std::size_t stride_ = 0;
  std::size_t rows_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class AttributeKind { kStatic, kVarying };

/// One attribute stored as dictionary codes. Static columns hold `arity`
/// codes per row; varying columns hold `arity` codes per (row, time point).
/// The dictionary is sorted, so code order equals value order.
class AttributeColumn {
 public:
  AttributeColumn(std::string name, AttributeKind kind, std::vector<std::string> dictionary,
                  std::vector<std::int32_t> codes, std::size_t rows, std::size_t time_points,
                  std::size_t arity = 1);

  /// Builds an arity-1 column from raw cells (row-major, `time_points` cells per
  /// row for varying columns, one per row for static ones).
  static AttributeColumn from_values(std::string name, AttributeKind kind,
                                     const std::vector<std::optional<std::string>>& cells,
                                     std::size_t rows, std::size_t time_points);

  const std::string& name() const noexcept { return name_; }
  AttributeKind kind() const noexcept { return kind_; }
  bool is_static() const noexcept { return kind_ == AttributeKind::kStatic; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t time_points() const noexcept { return time_points_; }
  const std::vector<std::string>& dictionary() const noexcept { return dictionary_; }
  const std::vector<std::int32_t>& codes() const noexcept { return codes_; }

  /// The `arity` codes of a cell; `t` is ignored for static columns.
  std::span<const std::int32_t> cell(std::size_t row, std::size_t t) const noexcept {
    const std::size_t offset = is_static() ? row * arity_ : (row * time_points_ + t) * arity_;
    return std::span<const std::int32_t>(codes_).subspan(offset, arity_);
  }
  const std::string& decode(std::int32_t code) const { return dictionary_.at(static_cast<std::size_t>(code)); }

  /// Copies the given source rows. Varying cells are kept only where the
  /// corresponding row of `presence` has its bit set.
  AttributeColumn restrict_rows(std::span<const std::uint32_t> source_rows,
                                const class PresenceMatrix& presence) const;

  friend bool operator==(const AttributeColumn&, const AttributeColumn&) = default;

 private:
  std::string name_;
  AttributeKind kind_;
  std::vector<std::string> dictionary_;
  std::vector<std::int32_t> codes_;
  std::size_t rows_;
  std::size_t time_points_;
  std::size_t arity_;
};

/// Named static (S) and time-varying (A^i) attribute columns.
class AttributeCatalog {
 public:
  void add(AttributeColumn column);

  const AttributeColumn* find(std::string_view name) const noexcept;
  /// Throws LookupError for unknown names.
  const AttributeColumn& at(std::string_view name) const;
  bool contains(std::string_view name) const noexcept { return find(name) != nullptr; }

  const std::vector<AttributeColumn>& columns() const noexcept { return columns_; }
  std::vector<std::string> names() const;

  friend bool operator==(const AttributeCatalog&, const AttributeCatalog&) = default;

 private:
  std::vector<AttributeColumn> columns_;
};

struct EdgeEnds {
  std::uint32_t source = 0;
  std::uint32_t target = 0;

  friend auto operator<=>(const EdgeEnds&, const EdgeEnds&) = default;
};

/// Temporal attributed graph: node and edge presence matrices over a time
/// domain plus attribute columns. Immutable after construction.
///
/// `arity` is 1 for ordinary graphs; pattern graphs (tri-graphs) have one node
/// per matched subgraph and store `arity` member values per attribute cell.
class TemporalGraph {
 public:
  /// Validates every invariant and throws ConsistencyError on violation:
  /// unique ids, valid edge endpoints, edge bit implies endpoint bits, and
  /// varying values only where the node is present.
  TemporalGraph(TimeDomain time, std::vector<std::string> node_ids, PresenceMatrix nodes,
                std::vector<EdgeEnds> edges, PresenceMatrix edge_presence, AttributeCatalog attributes,
                bool directed, std::size_t arity = 1);

  const TimeDomain& time() const noexcept { return time_; }
  std::size_t time_points() const noexcept { return time_.size(); }
  bool directed() const noexcept { return directed_; }
  std::size_t arity() const noexcept { return arity_; }

  std::size_t node_count() const noexcept { return node_ids_.size(); }
  const std::string& node_id(std::size_t i) const { return node_ids_.at(i); }
  const std::vector<std::string>& node_ids() const noexcept { return node_ids_; }
  std::optional<std::uint32_t> find_node(std::string_view id) const;
  /// Throws LookupError for unknown ids.
  std::uint32_t node_index(std::string_view id) const;
  BitRow node_presence(std::size_t i) const noexcept { return nodes_.row(i); }
  const PresenceMatrix& nodes() const noexcept { return nodes_; }

  std::size_t edge_count() const noexcept { return edge_ends_.size(); }
  EdgeEnds edge(std::size_t e) const { return edge_ends_.at(e); }
  const std::vector<EdgeEnds>& edge_list() const noexcept { return edge_ends_; }
  BitRow edge_presence(std::size_t e) const noexcept { return edges_.row(e); }
  const PresenceMatrix& edges() const noexcept { return edges_; }
  std::optional<std::uint32_t> find_edge(std::string_view source, std::string_view target) const;

  const AttributeCatalog& attributes() const noexcept { return attributes_; }

  std::size_t nodes_at(std::size_t t) const;
  std::size_t edges_at(std::size_t t) const;

 private:
  void validate() const;

  TimeDomain time_;
  std::vector<std::string> node_ids_;
  std::unordered_map<std::string, std::uint32_t> node_index_;
  PresenceMatrix nodes_;
  std::vector<EdgeEnds> edge_ends_;
  PresenceMatrix edges_;
  AttributeCatalog attributes_;
  bool directed_;
  std::size_t arity_;
};

/// A^i(u, t). Static attributes ignore `t`; varying attributes yield
/// nullopt (MISSING) where the node is absent. Pattern-graph cells are
/// rendered with members joined by '|'. Throws LookupError for unknown
/// node/attribute and IntervalError for t outside the domain.
std::optional<std::string> lookup_attribute(const TemporalGraph& graph, std::string_view node,
                                            std::string_view attribute, std::size_t t);

}  // namespace graphtempo
