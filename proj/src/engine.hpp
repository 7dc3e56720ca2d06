#pragma once

// Internal entry points of the recursive La1/La2 machine, shared with the
// classical constructions.

#include <span>

#include "hyperham/builder.hpp"

namespace hyperham::detail {

/// Fault-free Hamiltonian path a -> b of a trap-free subcube (dim >= 4).
void la1(const FaultSet& faults, const Subcube& sub, Vertex a, Vertex b, std::span<Vertex> out,
         BuildTrace* trace, int depth);

/// Hamiltonian path a -> b of a trap-free subcube traversing exactly one faulty edge.
void la2(const FaultSet& faults, const Subcube& sub, Vertex a, Vertex b, std::span<Vertex> out,
         BuildTrace* trace, int depth);

}  // namespace hyperham::detail
