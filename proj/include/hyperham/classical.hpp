#pragma once

// Constructive versions of the classical fault-free helper results:
// laceability with few faults, a path avoiding one vertex, a partition into
// two paths, and a path through a prescribed edge. Recursions split one
// direction at a time and bottom out in exhaustive search on Q_4.

#include <span>
#include <utility>

#include "hyperham/fault_set.hpp"
#include "hyperham/route.hpp"

namespace hyperham {

/// Hamiltonian path a -> b in fault-free Q_n; parity(a) != parity(b).
Route fault_free_hp(CubeDim dim, Vertex a, Vertex b);

/// Hamiltonian path A -> B avoiding F. Requires n >= 3, |F| <= n - 2 and
/// parity(A) != parity(B).
Route hp_few_faults(const FaultSet& faults, Vertex a, Vertex b);

/// Path x -> y through every vertex except v. Requires n >= 2,
/// parity(x) = parity(y) != parity(v), all distinct.
Route hp_avoiding_vertex(CubeDim dim, Vertex x, Vertex y, Vertex v);

/// Disjoint paths p -> r and q -> s covering Q_n. Requires distinct labels,
/// parity(p) = parity(q) = 0 and parity(r) = parity(s) = 1.
std::pair<Route, Route> two_path_partition(CubeDim dim, Vertex p, Vertex q, Vertex r, Vertex s);

/// Hamiltonian path x -> y traversing e. Requires parity(x) != parity(y)
/// and e != (x, y).
Route hp_through_edge(CubeDim dim, Vertex x, Vertex y, const Edge& e);

namespace detail {

// Subcube versions writing into caller-provided storage. Fault-free unless a
// FaultSet is passed. Preconditions are the callers' responsibility.

/// Writes sub.size() vertices.
void ff_path(const Subcube& sub, Vertex a, Vertex b, std::span<Vertex> out);
/// Writes sub.size() - 1 vertices.
void ff_path_avoiding(const Subcube& sub, Vertex x, Vertex y, Vertex v, std::span<Vertex> out);
/// Writes a1..b1 then a2..b2 (sub.size() vertices); returns the first length.
/// Needs parity(a1) = parity(a2) != parity(b1) = parity(b2).
std::size_t ff_two_paths(const Subcube& sub, Vertex a1, Vertex b1, Vertex a2, Vertex b2, std::span<Vertex> out);
/// Writes sub.size() vertices.
void ff_path_through(const Subcube& sub, Vertex x, Vertex y, const Edge& e, std::span<Vertex> out);

}  // namespace detail

}  // namespace hyperham
