#include "graphtempo/temporal_graph.hpp"

#include <algorithm>

#include "graphtempo/errors.hpp"

namespace graphtempo {

PresenceMatrix::PresenceMatrix(std::size_t columns)
    : columns_(columns), stride_(words_for(columns)) {}

std::size_t PresenceMatrix::add_row() {
  words_.resize(words_.size() + stride_, 0);
  return rows_++;
}

void PresenceMatrix::append_row(BitRow bits) {
  const std::size_t r = add_row();
  std::copy_n(bits.words().begin(), std::min(stride_, bits.words().size()),
              words_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void PresenceMatrix::append_masked(BitRow bits, BitRow mask) {
  const std::size_t r = add_row();
  for (std::size_t w = 0; w < stride_; ++w) {
    words_[r * stride_ + w] = bits.words()[w] & mask.words()[w];
  }
}

void PresenceMatrix::set(std::size_t r, std::size_t t, bool value) noexcept {
  std::uint64_t& word = words_[r * stride_ + (t >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (t & 63);
  word = value ? (word | bit) : (word & ~bit);
}

AttributeColumn::AttributeColumn(std::string name, AttributeKind kind, std::vector<std::string> dictionary,
                                 std::vector<std::int32_t> codes, std::size_t rows,
                                 std::size_t time_points, std::size_t arity)
    : name_(std::move(name)),
      kind_(kind),
      dictionary_(std::move(dictionary)),
      codes_(std::move(codes)),
      rows_(rows),
      time_points_(time_points),
      arity_(arity) {
  if (name_.empty()) throw ConsistencyError("attribute name must not be empty");
  if (arity_ == 0) throw ConsistencyError("attribute '" + name_ + "' has arity 0");
  if (!std::is_sorted(dictionary_.begin(), dictionary_.end()) ||
      std::adjacent_find(dictionary_.begin(), dictionary_.end()) != dictionary_.end()) {
    throw ConsistencyError("dictionary of attribute '" + name_ + "' is not sorted and unique");
  }
  const std::size_t cells = is_static() ? rows_ : rows_ * time_points_;
  if (codes_.size() != cells * arity_) {
    throw ConsistencyError("attribute '" + name_ + "' has " + std::to_string(codes_.size()) +
                           " codes, expected " + std::to_string(cells * arity_));
  }
  const auto limit = static_cast<std::int32_t>(dictionary_.size());
  for (std::int32_t code : codes_) {
    if (code < kMissing || code >= limit) {
      throw ConsistencyError("attribute '" + name_ + "' has an out-of-range code");
    }
  }
}

AttributeColumn AttributeColumn::from_values(std::string name, AttributeKind kind,
                                             const std::vector<std::optional<std::string>>& cells,
                                             std::size_t rows, std::size_t time_points) {
  std::vector<std::string> dictionary;
  for (const auto& cell : cells) {
    if (cell) dictionary.push_back(*cell);
  }
  std::sort(dictionary.begin(), dictionary.end());
  dictionary.erase(std::unique(dictionary.begin(), dictionary.end()), dictionary.end());

  std::vector<std::int32_t> codes;
  codes.reserve(cells.size());
  for (const auto& cell : cells) {
    if (!cell) {
      codes.push_back(kMissing);
      continue;
    }
    const auto it = std::lower_bound(dictionary.begin(), dictionary.end(), *cell);
    codes.push_back(static_cast<std::int32_t>(it - dictionary.begin()));
  }
  return AttributeColumn(std::move(name), kind, std::move(dictionary), std::move(codes), rows,
                         time_points, 1);
}

AttributeColumn AttributeColumn::restrict_rows(std::span<const std::uint32_t> source_rows,
                                               const PresenceMatrix& presence) const {
  std::vector<std::int32_t> codes;
  if (is_static()) {
    codes.reserve(source_rows.size() * arity_);
    for (std::uint32_t row : source_rows) {
      const auto values = cell(row, 0);
      codes.insert(codes.end(), values.begin(), values.end());
    }
  } else {
    codes.assign(source_rows.size() * time_points_ * arity_, kMissing);
    for (std::size_t r = 0; r < source_rows.size(); ++r) {
      presence.row(r).for_each_set([&](std::size_t t) {
        const auto values = cell(source_rows[r], t);
        std::copy(values.begin(), values.end(),
                  codes.begin() + static_cast<std::ptrdiff_t>((r * time_points_ + t) * arity_));
      });
    }
  }
  return AttributeColumn(name_, kind_, dictionary_, std::move(codes), source_rows.size(), time_points_,
                         arity_);
}

void AttributeCatalog::add(AttributeColumn column) {
  if (contains(column.name())) {
    throw ConsistencyError("duplicate attribute '" + column.name() + "'");
  }
  columns_.push_back(std::move(column));
}

const AttributeColumn* AttributeCatalog::find(std::string_view name) const noexcept {
  for (const auto& column : columns_) {
    if (column.name() == name) return &column;
  }
  return nullptr;
}

const AttributeColumn& AttributeCatalog::at(std::string_view name) const {
  if (const auto* column = find(name)) return *column;
  throw LookupError("unknown attribute '" + std::string(name) + "'");
}

std::vector<std::string> AttributeCatalog::names() const {
  std::vector<std::string> out;
  out.reserve(columns_.size());
  for (const auto& column : columns_) out.push_back(column.name());
  return out;
}

namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (std::uint64_t{a} << 32) | b;
}

}  // namespace

TemporalGraph::TemporalGraph(TimeDomain time, std::vector<std::string> node_ids, PresenceMatrix nodes,
                             std::vector<EdgeEnds> edges, PresenceMatrix edge_presence,
                             AttributeCatalog attributes, bool directed, std::size_t arity)
    : time_(std::move(time)),
      node_ids_(std::move(node_ids)),
      nodes_(std::move(nodes)),
      edge_ends_(std::move(edges)),
      edges_(std::move(edge_presence)),
      attributes_(std::move(attributes)),
      directed_(directed),
      arity_(arity) {
  node_index_.reserve(node_ids_.size());
  for (std::size_t i = 0; i < node_ids_.size(); ++i) {
    if (!node_index_.emplace(node_ids_[i], static_cast<std::uint32_t>(i)).second) {
      throw ConsistencyError("duplicate node id '" + node_ids_[i] + "'");
    }
  }
  validate();
}

void TemporalGraph::validate() const {
  const std::size_t n = time_.size();
  if (n == 0) throw ConsistencyError("time domain is empty");
  if (arity_ == 0) throw ConsistencyError("graph arity must be positive");
  if (nodes_.rows() != node_ids_.size() || nodes_.columns() != n) {
    throw ConsistencyError("node presence matrix does not match node list and time domain");
  }
  if (edges_.rows() != edge_ends_.size() || edges_.columns() != n) {
    throw ConsistencyError("edge presence matrix does not match edge list and time domain");
  }
  std::vector<std::uint64_t> seen;
  seen.reserve(edge_ends_.size());
  for (std::size_t e = 0; e < edge_ends_.size(); ++e) {
    const EdgeEnds ends = edge_ends_[e];
    if (ends.source >= node_ids_.size() || ends.target >= node_ids_.size()) {
      throw ConsistencyError("edge " + std::to_string(e) + " references a node outside the graph");
    }
    if (!directed_ && ends.source > ends.target) {
      throw ConsistencyError("undirected edge (" + node_ids_[ends.source] + "," + node_ids_[ends.target] +
                             ") is not canonical");
    }
    seen.push_back(pair_key(ends.source, ends.target));
    const BitRow bits = edges_.row(e);
    if (!nodes_.row(ends.source).covers(bits) || !nodes_.row(ends.target).covers(bits)) {
      throw ConsistencyError("edge (" + node_ids_[ends.source] + "," + node_ids_[ends.target] +
                             ") exists at a time point where an endpoint is absent");
    }
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw ConsistencyError("duplicate edge");
  }
  for (const auto& column : attributes_.columns()) {
    if (column.rows() != node_ids_.size() || column.time_points() != n || column.arity() != arity_) {
      throw ConsistencyError("attribute '" + column.name() + "' does not match the graph shape");
    }
    if (column.is_static()) continue;
    for (std::size_t u = 0; u < node_ids_.size(); ++u) {
      for (std::size_t t = 0; t < n; ++t) {
        if (nodes_.test(u, t)) continue;
        for (std::int32_t code : column.cell(u, t)) {
          if (code != kMissing) {
            throw ConsistencyError("attribute '" + column.name() + "' has a value for node '" + node_ids_[u] +
                                   "' at '" + time_.label(t) + "' where the node is absent");
          }
        }
      }
    }
  }
}

std::optional<std::uint32_t> TemporalGraph::find_node(std::string_view id) const {
  const auto it = node_index_.find(std::string(id));
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t TemporalGraph::node_index(std::string_view id) const {
  if (auto index = find_node(id)) return *index;
  throw LookupError("unknown node '" + std::string(id) + "'");
}

std::optional<std::uint32_t> TemporalGraph::find_edge(std::string_view source, std::string_view target) const {
  auto s = find_node(source);
  auto t = find_node(target);
  if (!s || !t) return std::nullopt;
  EdgeEnds wanted{*s, *t};
  if (!directed_ && wanted.source > wanted.target) std::swap(wanted.source, wanted.target);
  for (std::size_t e = 0; e < edge_ends_.size(); ++e) {
    if (edge_ends_[e] == wanted) return static_cast<std::uint32_t>(e);
  }
  return std::nullopt;
}

std::size_t TemporalGraph::nodes_at(std::size_t t) const {
  std::size_t total = 0;
  for (std::size_t u = 0; u < node_count(); ++u) total += nodes_.test(u, t) ? 1 : 0;
  return total;
}

std::size_t TemporalGraph::edges_at(std::size_t t) const {
  std::size_t total = 0;
  for (std::size_t e = 0; e < edge_count(); ++e) total += edges_.test(e, t) ? 1 : 0;
  return total;
}

std::optional<std::string> lookup_attribute(const TemporalGraph& graph, std::string_view node,
                                            std::string_view attribute, std::size_t t) {
  const std::uint32_t u = graph.node_index(node);
  const AttributeColumn& column = graph.attributes().at(attribute);
  if (t >= graph.time_points()) {
    throw IntervalError("time index " + std::to_string(t) + " outside the time domain");
  }
  if (!column.is_static() && !graph.node_presence(u).test(t)) return std::nullopt;
  std::string out;
  bool first = true;
  for (std::int32_t code : column.cell(u, t)) {
    if (code == kMissing) return std::nullopt;
    if (!first) out += '|';
    out += column.decode(code);
    first = false;
  }
  return out;
}

}  // namespace graphtempo
