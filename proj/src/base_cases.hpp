#pragma once

// Memoized exhaustive searches on subcubes of dimension <= 4. Every recursive
// construction bottoms out here.

#include <optional>
#include <span>

#include "hyperham/fault_set.hpp"

namespace hyperham::detail {

inline constexpr int kBaseDim = 4;

/// Hamiltonian path a -> b of `sub` using exactly `faulty_exact` faulty edges
/// (`faults` may be null). Writes sub.size() vertices. False if none exists.
bool small_path(const FaultSet* faults, const Subcube& sub, Vertex a, Vertex b, int faulty_exact,
                std::span<Vertex> out);

/// Fault-free path x -> y covering sub - v. Writes sub.size() - 1 vertices.
bool small_path_avoiding(const Subcube& sub, Vertex x, Vertex y, Vertex v, std::span<Vertex> out);

/// Fault-free disjoint paths a1 -> b1 and a2 -> b2 covering sub, written back
/// to back. Returns the length of the first path.
std::optional<std::size_t> small_two_paths(const Subcube& sub, Vertex a1, Vertex b1, Vertex a2, Vertex b2,
                                           std::span<Vertex> out);

}  // namespace hyperham::detail
