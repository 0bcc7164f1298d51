#include "hyperspec/io.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <vector>

#include "hyperspec/errors.hpp"

namespace hyperspec {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = s.size();
    tokens.push_back(s.substr(start, end - start));
    pos = end;
  }
  return tokens;
}

std::optional<std::size_t> to_size(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::vector<VertexId> parse_side(std::string_view part, std::string_view tag, std::size_t n,
                                 std::size_t line) {
  part = trim(part);
  if (!part.starts_with(tag)) {
    throw ParseError(line, "expected '" + std::string(tag) + "'");
  }
  std::vector<VertexId> side;
  for (auto token : split_ws(part.substr(tag.size()))) {
    const auto v = to_size(token);
    if (!v) throw ParseError(line, "bad vertex index '" + std::string(token) + "'");
    if (*v < 1 || *v > n) {
      throw ParseError(line, "vertex index " + std::string(token) + " outside 1.." +
                                 std::to_string(n));
    }
    side.push_back(static_cast<VertexId>(*v - 1));
  }
  return side;
}

}  // namespace

OrientedHypergraph parse_hypergraph(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<OrientedHyperedge> edges;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  while (!text.empty()) {
    const auto eol = text.find('\n');
    const auto raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    last_line = line_no;

    if (!header) {
      const auto tokens = split_ws(line);
      const auto n = tokens.size() == 2 ? to_size(tokens[0]) : std::nullopt;
      const auto m = tokens.size() == 2 ? to_size(tokens[1]) : std::nullopt;
      if (!n || !m) throw ParseError(line_no, "expected header 'N M'");
      if (*n == 0) throw ParseError(line_no, "N must be positive");
      header.emplace(*n, *m);
      edges.reserve(*m);
      continue;
    }

    if (edges.size() == header->second) {
      throw ParseError(line_no, "more than " + std::to_string(header->second) + " hyperedges");
    }
    const auto sep = line.find(';');
    if (sep == std::string_view::npos) throw ParseError(line_no, "expected 'in: ... ; out: ...'");
    auto inputs = parse_side(line.substr(0, sep), "in:", header->first, line_no);
    auto outputs = parse_side(line.substr(sep + 1), "out:", header->first, line_no);
    try {
      edges.emplace_back(std::move(inputs), std::move(outputs));
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  if (!header) throw ParseError(line_no + 1, "missing header 'N M'");
  if (edges.size() != header->second) {
    throw ParseError(last_line + 1, "expected " + std::to_string(header->second) +
                                        " hyperedges, found " + std::to_string(edges.size()));
  }
  try {
    return OrientedHypergraph(header->first, std::move(edges));
  } catch (const DegenerateInput& e) {
    throw ValidationError(e.what());
  }
}

std::string write_hypergraph(const OrientedHypergraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  auto side = [&out](std::span<const VertexId> vs) {
    for (VertexId v : vs) out += " " + std::to_string(v + 1);
  };
  for (const auto& h : g.edges()) {
    out += "in:";
    side(h.inputs());
    out += " ; out:";
    side(h.outputs());
    out += "\n";
  }
  return out;
}

std::string format_number(double x) {
  if (x == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 15);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

double report_value(double x) {
  if (std::abs(x) <= 1e-12) return 0.0;
  if (x < 0.0 && x >= -1e-9) return 0.0;
  return x;
}

}  // namespace hyperspec
