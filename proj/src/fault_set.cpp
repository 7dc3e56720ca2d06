#include "hyperham/fault_set.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace hyperham {

FaultSet::FaultSet(CubeDim dim)
    : dim_(dim),
      fault_dir_(dim.vertex_count(), kNoFault),
      tallies_(static_cast<std::size_t>(dim.value()), {0, 0}) {}

std::optional<Edge> FaultSet::incident(Vertex v) const noexcept {
  const auto d = fault_dir_[v];
  if (d == kNoFault) return std::nullopt;
  return Edge{bit(v, d) ? flip(v, d) : v, d};
}

std::uint64_t FaultSet::crossing_per_parity() const noexcept {
  return n() >= 2 ? (std::uint64_t{1} << (n() - 2)) : 0;
}

std::vector<Edge> FaultSet::faults_in_half(int dir, int side) const {
  return faults_in(Subcube::half(dim_, dir, side));
}

std::vector<Edge> FaultSet::faults_in(const Subcube& sub) const {
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (sub.is_free(e.dir) && sub.contains(e.low)) out.push_back(e);
  }
  return out;
}

FaultSet make_fault_set(CubeDim dim, std::span<const Edge> edges) {
  FaultSet fs(dim);
  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (const Edge& e : sorted) check_edge(dim, e);
  std::sort(sorted.begin(), sorted.end());
  const int n = dim.value();
  for (const Edge& e : sorted) {
    for (Vertex v : {e.low, e.high()}) {
      if (fs.fault_dir_[v] != FaultSet::kNoFault) {
        const Edge other = *fs.incident(v);
        throw NotDisjoint("faulty edges " + format_edge(other, n) + " and " + format_edge(e, n) +
                              " share vertex " + to_binary(v, n),
                          v);
      }
    }
    fs.fault_dir_[e.low] = static_cast<std::uint8_t>(e.dir);
    fs.fault_dir_[e.high()] = static_cast<std::uint8_t>(e.dir);
    ++fs.tallies_[static_cast<std::size_t>(e.dir)][static_cast<std::size_t>(e.edge_parity())];
  }
  fs.edges_ = std::move(sorted);
  return fs;
}

std::array<std::uint64_t, 2> healthy_crossing_counts(const FaultSet& faults, int dir) {
  if (dir < 0 || dir >= faults.n()) throw EdgeOutOfRange("direction out of range");
  const auto per = faults.crossing_per_parity();
  return {per - faults.tally(dir, 0), per - faults.tally(dir, 1)};
}

std::string format_edge(const Edge& e, int n) {
  return "(" + to_binary(e.low, n) + "," + to_binary(e.high(), n) + ")";
}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& tok, int line_no) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("expected an integer, got '" + std::string(tok.text) + "'", line_no, tok.column);
  }
  return value;
}

}  // namespace

FaultSet parse_fault_file(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<CubeDim> dim;
  std::vector<Edge> edges;
  std::unordered_map<Vertex, int> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!dim) {
      const Token& t = toks.front();
      if (toks.size() != 1 || t.text.substr(0, 2) != "n=") {
        throw ParseError("expected header 'n=<dim>'", line_no, t.column);
      }
      const int n = parse_int({t.text.substr(2), t.column + 2}, line_no);
      try {
        dim = CubeDim(n);
      } catch (const DimensionError& e) {
        throw ParseError(e.what(), line_no, t.column + 2);
      }
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError("expected '<low-label> <direction>'", line_no, toks.front().column);
    }
    Edge e;
    try {
      e.low = parse_binary(toks[0].text, dim->value());
    } catch (const EdgeOutOfRange& ex) {
      throw ParseError(ex.what(), line_no, toks[0].column);
    }
    e.dir = parse_int(toks[1], line_no);
    if (e.dir < 0 || e.dir >= dim->value()) {
      throw ParseError("direction out of range", line_no, toks[1].column);
    }
    if (bit(e.low, e.dir)) {
      throw ParseError("low endpoint must have 0 at the edge direction", line_no, toks[0].column);
    }
    for (Vertex v : {e.low, e.high()}) {
      auto [it, inserted] = seen.emplace(v, line_no);
      if (!inserted) {
        throw ParseError("faulty edge shares vertex " + to_binary(v, dim->value()) +
                             " with the edge on line " + std::to_string(it->second),
                         line_no, toks[0].column);
      }
    }
    edges.push_back(e);
  }
  if (!dim) throw ParseError("missing header 'n=<dim>'", line_no + 1, 1);
  return make_fault_set(*dim, edges);
}

FaultSet parse_fault_text(const std::string& text) {
  std::istringstream in(text);
  return parse_fault_file(in);
}

std::string format_fault_file(const FaultSet& faults) {
  std::string out = "n=" + std::to_string(faults.n()) + "\n";
  for (const Edge& e : faults.edges()) {
    out += to_binary(e.low, faults.n());
    out += ' ';
    out += std::to_string(e.dir);
    out += '\n';
  }
  return out;
}

}  // namespace hyperham
