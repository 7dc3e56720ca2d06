#pragma once

// Recursive construction of Hamiltonian paths and cycles in hypercubes with
// pairwise disjoint faulty edges and no SCDHW / DTBCE trap.

#include <string>
#include <vector>

#include "hyperham/fault_set.hpp"
#include "hyperham/route.hpp"

namespace hyperham {

struct TraceStep {
  int depth = 0;
  Subcube sub;
  int split_dir = -1;  // -1 at the leaves
  std::string case_label;
  /// Crossing edges the case joins the halves through.
  std::vector<Edge> crossing;
  Vertex from = 0;
  Vertex to = 0;
  bool one_fault = false;  // La2 sub-problem
};

struct BuildTrace {
  std::vector<TraceStep> steps;
  /// One line per step, indented by depth.
  std::string format(int n) const;
};

/// A direction m whose halves Q^m_0 and Q^m_1 are both free of SCDHW and
/// DTBCE. Requires n >= 5 and a trap-free cube. Throws NoDimensionFound if
/// the scan comes up empty.
int select_partition_dimension(const FaultSet& faults);
int select_partition_dimension(const FaultSet& faults, const Subcube& sub);

/// Fault-free Hamiltonian path A -> B. Requires n >= 4, no SCDHW, no DTBCE
/// and parity(A) != parity(B).
Route build_hp(const FaultSet& faults, Vertex a, Vertex b, BuildTrace* trace = nullptr);

/// Hamiltonian path A -> B traversing exactly one faulty edge. Same
/// requirements as build_hp, plus |F| >= 2, or |F| = 1 and (A, B) is not
/// the faulty edge.
Route build_hp_one_fault(const FaultSet& faults, Vertex a, Vertex b, BuildTrace* trace = nullptr);

/// Whether build_hp_one_fault's fault-count requirement holds for (A, B).
bool one_fault_precondition(const FaultSet& faults, Vertex a, Vertex b);

/// Fault-free Hamiltonian cycle. Throws NotHamiltonian on an SCDHW.
/// Fault-free cubes of any n >= 2 give the reflected Gray code; Q_3 with
/// faults is solved by exhaustive search.
Route build_hc(const FaultSet& faults, BuildTrace* trace = nullptr);

}  // namespace hyperham
