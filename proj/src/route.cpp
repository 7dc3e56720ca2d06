#include "hyperham/route.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace hyperham {

namespace {

bool step_ok(Vertex a, Vertex b) { return std::popcount(a ^ b) == 1; }

std::string label(const Route& r, Vertex v) { return to_binary(v, r.dim.value()); }

}  // namespace

int count_faulty_traversals(const FaultSet& faults, const Route& route) {
  int count = 0;
  const auto& vs = route.vertices;
  auto check = [&](Vertex a, Vertex b) {
    if (step_ok(a, b) && faults.is_faulty(edge_between(a, b))) ++count;
  };
  for (std::size_t i = 1; i < vs.size(); ++i) check(vs[i - 1], vs[i]);
  if (route.closed && vs.size() > 2) check(vs.back(), vs.front());
  return count;
}

RouteVerdict verify_route(const FaultSet& faults, const Route& route, const RouteConstraints& c) {
  RouteVerdict verdict;
  auto fail = [&](std::string msg) {
    verdict.ok = false;
    verdict.violations.push_back(std::move(msg));
  };

  if (route.dim != faults.dim()) {
    fail("route dimension " + std::to_string(route.dim.value()) + " differs from fault set dimension " +
         std::to_string(faults.n()));
    return verdict;
  }
  const auto& vs = route.vertices;
  if (vs.empty()) {
    fail("empty route");
    return verdict;
  }
  if (c.closed != route.closed) fail(c.closed ? "route is not closed" : "route is closed, expected a path");

  std::vector<bool> seen(route.dim.vertex_count(), false);
  bool range_ok = true;
  for (Vertex v : vs) {
    if (!route.dim.contains(v)) {
      fail("vertex " + std::to_string(v) + " out of range");
      range_ok = false;
      continue;
    }
    if (seen[v]) fail("duplicate vertex " + label(route, v));
    seen[v] = true;
  }
  if (!range_ok) return verdict;

  bool required_seen = false;
  auto check_step = [&](Vertex a, Vertex b) {
    if (!step_ok(a, b)) {
      fail("non-adjacent step " + label(route, a) + " -> " + label(route, b));
      return;
    }
    const Edge e = edge_between(a, b);
    if (faults.is_faulty(e)) ++verdict.faulty_traversals;
    if (c.required_edge && e == *c.required_edge) required_seen = true;
  };
  for (std::size_t i = 1; i < vs.size(); ++i) check_step(vs[i - 1], vs[i]);
  if (route.closed) {
    if (vs.size() < 3) {
      fail("a cycle needs at least 3 vertices");
    } else {
      check_step(vs.back(), vs.front());
    }
  }

  if (c.require_full_coverage) {
    std::uint64_t expected = route.dim.vertex_count();
    if (c.excluded_vertex) {
      --expected;
      if (route.dim.contains(*c.excluded_vertex) && seen[*c.excluded_vertex]) {
        fail("excluded vertex " + label(route, *c.excluded_vertex) + " visited");
      }
    }
    std::uint64_t distinct = 0;
    for (bool b : seen) distinct += b ? 1 : 0;
    if (distinct != expected || vs.size() != expected) {
      fail("coverage " + std::to_string(distinct) + " of " + std::to_string(expected) + " vertices");
    }
  }
  if (c.endpoints) {
    if (vs.front() != c.endpoints->first || vs.back() != c.endpoints->second) {
      fail("endpoints " + label(route, vs.front()) + " -> " + label(route, vs.back()) + ", expected " +
           label(route, c.endpoints->first) + " -> " + label(route, c.endpoints->second));
    }
  }
  if (c.required_edge && !required_seen) {
    fail("required edge " + format_edge(*c.required_edge, route.dim.value()) + " not traversed");
  }
  if (c.faulty_exactly && verdict.faulty_traversals != *c.faulty_exactly) {
    fail("traverses " + std::to_string(verdict.faulty_traversals) + " faulty edges, expected exactly " +
         std::to_string(*c.faulty_exactly));
  }
  if (c.max_faulty && verdict.faulty_traversals > *c.max_faulty) {
    fail("traverses " + std::to_string(verdict.faulty_traversals) + " faulty edges, at most " +
         std::to_string(*c.max_faulty) + " allowed");
  }
  return verdict;
}

RouteVerdict verify_partition(const FaultSet& faults, const Route& first, const Route& second,
                              std::pair<Vertex, Vertex> first_ends, std::pair<Vertex, Vertex> second_ends) {
  RouteConstraints c;
  c.require_full_coverage = false;
  c.max_faulty = 0;
  c.endpoints = first_ends;
  RouteVerdict a = verify_route(faults, first, c);
  c.endpoints = second_ends;
  RouteVerdict b = verify_route(faults, second, c);
  RouteVerdict out;
  out.ok = a.ok && b.ok;
  out.faulty_traversals = a.faulty_traversals + b.faulty_traversals;
  for (auto& v : a.violations) out.violations.push_back("first path: " + v);
  for (auto& v : b.violations) out.violations.push_back("second path: " + v);
  if (!out.ok) return out;

  std::vector<bool> seen(faults.dim().vertex_count(), false);
  for (Vertex v : first.vertices) seen[v] = true;
  for (Vertex v : second.vertices) {
    if (seen[v]) {
      out.ok = false;
      out.violations.push_back("paths share vertex " + to_binary(v, faults.n()));
    }
    seen[v] = true;
  }
  if (first.vertices.size() + second.vertices.size() != faults.dim().vertex_count()) {
    out.ok = false;
    out.violations.push_back("paths do not cover the cube");
  }
  return out;
}

std::string format_certificate(const FaultSet& faults, const Route& route) {
  std::ostringstream out;
  write_certificate(out, faults, route);
  return out.str();
}

void write_certificate(std::ostream& out, const FaultSet& faults, const Route& route) {
  const int n = route.dim.value();
  out << "n=" << n << " kind=" << (route.closed ? "cycle" : "path")
      << " faulty_traversals=" << count_faulty_traversals(faults, route) << '\n';
  std::string line;
  for (Vertex v : route.vertices) {
    line = to_binary(v, n);
    line += '\n';
    out << line;
  }
}

Certificate parse_certificate(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<Certificate> cert;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t')) raw.pop_back();
    std::size_t start = raw.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    const std::string line = raw.substr(start);
    const int col = static_cast<int>(start) + 1;
    if (!cert) {
      std::istringstream hs(line);
      std::string n_tok, kind_tok, faulty_tok, extra;
      hs >> n_tok >> kind_tok >> faulty_tok;
      if (!hs || (hs >> extra) || n_tok.rfind("n=", 0) != 0 || kind_tok.rfind("kind=", 0) != 0 ||
          faulty_tok.rfind("faulty_traversals=", 0) != 0) {
        throw ParseError("expected header 'n=<dim> kind=path|cycle faulty_traversals=<k>'", line_no, col);
      }
      Certificate c;
      try {
        c.route.dim = CubeDim(std::stoi(n_tok.substr(2)));
        c.declared_faulty_traversals = std::stoi(faulty_tok.substr(18));
      } catch (const std::exception& e) {
        throw ParseError(std::string("bad header value: ") + e.what(), line_no, col);
      }
      const std::string kind = kind_tok.substr(5);
      if (kind != "path" && kind != "cycle") throw ParseError("kind must be path or cycle", line_no, col);
      c.route.closed = kind == "cycle";
      cert = std::move(c);
      continue;
    }
    try {
      cert->route.vertices.push_back(parse_binary(line, cert->route.dim.value()));
    } catch (const EdgeOutOfRange& e) {
      throw ParseError(e.what(), line_no, col);
    }
  }
  if (!cert) throw ParseError("missing certificate header", line_no + 1, 1);
  return std::move(*cert);
}

Certificate parse_certificate_text(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

}  // namespace hyperham
