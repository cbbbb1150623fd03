#include "graphtempo/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>

#include "graphtempo/errors.hpp"
#include "graphtempo/graph_builder.hpp"

namespace graphtempo {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    fields.emplace_back(trim(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

struct CsvRow {
  std::size_t line;
  std::vector<std::string> fields;
};

struct CsvFile {
  std::string name;
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};

CsvFile read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  CsvFile file;
  file.name = path.string();
  if (!in) throw ParseError(file.name, 0, "cannot open file");
  std::string line;
  std::size_t number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (!have_header) {
      file.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != file.header.size()) {
      throw ParseError(file.name, number,
                       "expected " + std::to_string(file.header.size()) + " fields, found " +
                           std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ParseError(file.name, number, "empty id");
    file.rows.push_back({number, std::move(fields)});
  }
  if (!have_header) throw ParseError(file.name, 1, "missing header line");
  return file;
}

std::vector<std::string> time_header(const CsvFile& file) {
  if (file.header.size() < 2 || file.header[0] != "id") {
    throw ParseError(file.name, 1, "header must be 'id,<time label>,...'");
  }
  std::vector<std::string> labels(file.header.begin() + 1, file.header.end());
  std::set<std::string> unique(labels.begin(), labels.end());
  if (unique.size() != labels.size()) throw ParseError(file.name, 1, "duplicate time label in header");
  return labels;
}

bool is_integer(const std::string& s) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string> order_edge_labels(std::set<std::string> labels) {
  std::vector<std::string> out(labels.begin(), labels.end());
  if (!out.empty() && std::all_of(out.begin(), out.end(), is_integer)) {
    std::stable_sort(out.begin(), out.end(),
                     [](const std::string& a, const std::string& b) { return std::stoll(a) < std::stoll(b); });
  }
  return out;
}

}  // namespace

TemporalGraph load_temporal_graph(const LoadOptions& options) {
  const CsvFile edges = read_csv(options.edges);
  if (edges.header != std::vector<std::string>{"source", "target", "time"}) {
    throw ParseError(edges.name, 1, "header must be 'source,target,time'");
  }
  std::optional<CsvFile> statics;
  if (options.static_attributes) {
    statics = read_csv(*options.static_attributes);
    if (statics->header.empty() || statics->header[0] != "id") {
      throw ParseError(statics->name, 1, "header must be 'id,<attribute>,...'");
    }
  }
  std::vector<std::pair<std::string, CsvFile>> varying;
  for (const auto& [name, path] : options.varying) varying.emplace_back(name, read_csv(path));
  std::optional<CsvFile> presence;
  if (options.node_presence) presence = read_csv(*options.node_presence);

  std::vector<std::string> labels;
  if (presence) {
    labels = time_header(*presence);
  } else if (!varying.empty()) {
    labels = time_header(varying.front().second);
  } else {
    std::set<std::string> seen;
    for (const auto& row : edges.rows) seen.insert(row.fields[2]);
    labels = order_edge_labels(std::move(seen));
  }
  if (labels.empty()) throw ParseError(edges.name, 1, "no time points found");
  GraphBuilder builder(TimeDomain(labels), options.directed);
  const TimeDomain& time = builder.time();

  // With a static file the node universe is closed; otherwise nodes are
  // discovered from the other files.
  const bool closed = statics.has_value();
  auto node_for = [&](const std::string& id, const CsvFile& file, std::size_t line) {
    if (!closed) return builder.add_node(id);
    if (auto index = builder.find_node(id)) return *index;
    throw ConsistencyError(file.name + ":" + std::to_string(line) + ": unknown node '" + id + "'");
  };
  auto time_for = [&](const std::string& label, const CsvFile& file, std::size_t line) {
    if (auto index = time.find(label)) return *index;
    throw ParseError(file.name, line, "unknown time label '" + label + "'");
  };

  if (statics) {
    for (std::size_t c = 1; c < statics->header.size(); ++c) {
      builder.declare_attribute(statics->header[c], AttributeKind::kStatic);
    }
    for (const auto& row : statics->rows) {
      if (builder.find_node(row.fields[0])) {
        throw ParseError(statics->name, row.line, "duplicate node '" + row.fields[0] + "'");
      }
      const std::uint32_t u = builder.add_node(row.fields[0]);
      for (std::size_t c = 1; c < row.fields.size(); ++c) {
        if (row.fields[c] != "-") builder.set_static(statics->header[c], u, row.fields[c]);
      }
    }
  }

  if (presence) {
    for (const auto& row : presence->rows) {
      const std::uint32_t u = node_for(row.fields[0], *presence, row.line);
      for (std::size_t c = 1; c < row.fields.size(); ++c) {
        const std::string& cell = row.fields[c];
        if (cell == "1") {
          builder.set_present(u, time.index_of(presence->header[c]));
        } else if (cell != "0") {
          throw ParseError(presence->name, row.line, "presence cell must be 0 or 1, found '" + cell + "'");
        }
      }
    }
  }

  for (const auto& row : edges.rows) {
    const std::uint32_t s = node_for(row.fields[0], edges, row.line);
    const std::uint32_t t = node_for(row.fields[1], edges, row.line);
    builder.add_edge(s, t, time_for(row.fields[2], edges, row.line));
  }

  for (const auto& [name, file] : varying) {
    const auto header = time_header(file);
    std::vector<std::size_t> columns;
    for (const auto& label : header) columns.push_back(time_for(label, file, 1));
    builder.declare_attribute(name, AttributeKind::kVarying);
    for (const auto& row : file.rows) {
      const std::uint32_t u = node_for(row.fields[0], file, row.line);
      for (std::size_t c = 1; c < row.fields.size(); ++c) {
        if (row.fields[c] != "-") builder.set_varying(name, u, columns[c - 1], row.fields[c]);
      }
    }
  }

  return builder.build(!presence.has_value());
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

LoadOptions export_temporal_graph(const TemporalGraph& graph, const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  const TimeDomain& time = graph.time();
  LoadOptions options;
  options.directed = graph.directed();
  options.edges = directory / "edges.csv";
  options.node_presence = directory / "presence.csv";

  {
    auto out = open_for_write(options.edges);
    out << "source,target,time\n";
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
      const EdgeEnds ends = graph.edge(e);
      graph.edge_presence(e).for_each_set([&](std::size_t t) {
        out << graph.node_id(ends.source) << ',' << graph.node_id(ends.target) << ',' << time.label(t) << '\n';
      });
    }
  }
  {
    auto out = open_for_write(*options.node_presence);
    out << "id";
    for (const auto& label : time.labels()) out << ',' << label;
    out << '\n';
    for (std::size_t u = 0; u < graph.node_count(); ++u) {
      out << graph.node_id(u);
      for (std::size_t t = 0; t < time.size(); ++t) out << ',' << (graph.node_presence(u).test(t) ? '1' : '0');
      out << '\n';
    }
  }

  std::vector<const AttributeColumn*> statics;
  for (const auto& column : graph.attributes().columns()) {
    if (column.is_static()) statics.push_back(&column);
  }
  auto render = [&](const AttributeColumn& column, std::size_t u, std::size_t t) {
    const auto value = lookup_attribute(graph, graph.node_id(u), column.name(), t);
    return value ? *value : std::string("-");
  };
  if (!statics.empty()) {
    options.static_attributes = directory / "static.csv";
    auto out = open_for_write(*options.static_attributes);
    out << "id";
    for (const auto* column : statics) out << ',' << column->name();
    out << '\n';
    for (std::size_t u = 0; u < graph.node_count(); ++u) {
      out << graph.node_id(u);
      for (const auto* column : statics) out << ',' << render(*column, u, 0);
      out << '\n';
    }
  }
  for (const auto& column : graph.attributes().columns()) {
    if (column.is_static()) continue;
    const auto path = directory / (column.name() + ".csv");
    options.varying.emplace_back(column.name(), path);
    auto out = open_for_write(path);
    out << "id";
    for (const auto& label : time.labels()) out << ',' << label;
    out << '\n';
    for (std::size_t u = 0; u < graph.node_count(); ++u) {
      out << graph.node_id(u);
      for (std::size_t t = 0; t < time.size(); ++t) out << ',' << render(column, u, t);
      out << '\n';
    }
  }
  return options;
}

}  // namespace graphtempo
