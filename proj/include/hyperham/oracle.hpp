#pragma once

// Exhaustive backtracking search for Hamiltonian paths and cycles in small
// faulty hypercubes. Ground truth for base cases and cross-checks.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperham/route.hpp"

namespace hyperham {

inline constexpr int kMaxOracleDim = 6;
inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000;

struct SearchConstraints {
  std::optional<std::pair<Vertex, Vertex>> endpoints;
  bool closed = false;
  std::optional<Vertex> excluded_vertex;
  /// Exact number of faulty edges the route must use (0 or 1). Unset means 0.
  std::optional<int> required_faulty_traversals;
  std::optional<Edge> required_edge;
};

bool oracle_exists(const FaultSet& faults, const SearchConstraints& c,
                   std::uint64_t budget = kDefaultSearchBudget);
std::optional<Route> oracle_find(const FaultSet& faults, const SearchConstraints& c,
                                 std::uint64_t budget = kDefaultSearchBudget);

/// Two vertex-disjoint fault-free paths first.first -> first.second and
/// second.first -> second.second covering the cube.
std::optional<std::pair<Route, Route>> oracle_find_two_paths(const FaultSet& faults,
                                                             std::pair<Vertex, Vertex> first,
                                                             std::pair<Vertex, Vertex> second,
                                                             std::uint64_t budget = kDefaultSearchBudget);

/// Debug enumeration: distinct undirected Hamiltonian cycles avoiding F.
std::uint64_t oracle_count_cycles(const FaultSet& faults, std::uint64_t budget = kDefaultSearchBudget);

namespace detail {

/// Search over a subcube of at most kMaxOracleDim free directions. `faults`
/// may be null for a fault-free search. Vertices are global labels.
struct SubcubeQuery {
  bool closed = false;
  /// One or two (start, end) segments; empty when closed.
  std::vector<std::pair<Vertex, Vertex>> segments;
  std::optional<Vertex> excluded;
  int faulty_exact = 0;
  std::optional<Edge> required_edge;
  std::uint64_t budget = kDefaultSearchBudget;
};

/// Returns the concatenated segment routes, or nullopt if none exists.
std::optional<std::vector<Vertex>> search_subcube(const FaultSet* faults, const Subcube& sub,
                                                  const SubcubeQuery& q);

std::uint64_t count_subcube_cycles(const FaultSet* faults, const Subcube& sub, std::uint64_t budget);

}  // namespace detail

}  // namespace hyperham
