#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperham/fault_set.hpp"

namespace hyperham {

/// An ordered vertex sequence: a path, or a cycle when `closed`.
struct Route {
  CubeDim dim;
  std::vector<Vertex> vertices;
  bool closed = false;

  std::size_t length() const noexcept { return vertices.size(); }
};

/// What a certificate is expected to satisfy. Unset fields are not checked.
struct RouteConstraints {
  std::optional<std::pair<Vertex, Vertex>> endpoints;
  bool closed = false;
  /// Coverage target becomes the whole cube minus this vertex.
  std::optional<Vertex> excluded_vertex;
  /// Skip the coverage check (used for the halves of a two-path partition).
  bool require_full_coverage = true;
  std::optional<int> faulty_exactly;
  std::optional<int> max_faulty;
  std::optional<Edge> required_edge;
};

struct RouteVerdict {
  bool ok = true;
  int faulty_traversals = 0;
  std::vector<std::string> violations;

  explicit operator bool() const noexcept { return ok; }
};

/// Independent certificate checker: adjacency, distinctness, coverage, closure,
/// endpoints and the number of faulty edges traversed. Lists every violation.
RouteVerdict verify_route(const FaultSet& faults, const Route& route, const RouteConstraints& c);

/// Two-path partition check: disjoint, jointly covering, with the given endpoints.
RouteVerdict verify_partition(const FaultSet& faults, const Route& first, const Route& second,
                              std::pair<Vertex, Vertex> first_ends, std::pair<Vertex, Vertex> second_ends);

int count_faulty_traversals(const FaultSet& faults, const Route& route);

// Certificate format:
//   n=<dim> kind=path|cycle faulty_traversals=<k>
//   <label>
//   ...
std::string format_certificate(const FaultSet& faults, const Route& route);
void write_certificate(std::ostream& out, const FaultSet& faults, const Route& route);

struct Certificate {
  Route route;
  int declared_faulty_traversals = 0;
};
Certificate parse_certificate(std::istream& in);
Certificate parse_certificate_text(const std::string& text);

}  // namespace hyperham
