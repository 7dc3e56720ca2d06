#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperham/cube.hpp"

namespace hyperham {

/// A validated, immutable set of pairwise vertex-disjoint faulty edges.
///
/// Besides the edge list it keeps, per vertex, the direction of its incident
/// faulty edge (at most one), and per (direction, edge parity) the number of
/// faulty crossing edges.
class FaultSet {
 public:
  static constexpr std::uint8_t kNoFault = 0xFF;

  explicit FaultSet(CubeDim dim);

  CubeDim dim() const noexcept { return dim_; }
  int n() const noexcept { return dim_.value(); }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  /// Sorted ascending by (low, dir).
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool is_faulty(Vertex v, int dir) const noexcept { return fault_dir_[v] == dir; }
  bool is_faulty(const Edge& e) const noexcept { return fault_dir_[e.low] == e.dir; }
  bool is_free(Vertex v) const noexcept { return fault_dir_[v] == kNoFault; }
  /// Direction of the faulty edge at v, if any.
  std::optional<int> fault_dir(Vertex v) const noexcept {
    if (fault_dir_[v] == kNoFault) return std::nullopt;
    return fault_dir_[v];
  }
  std::uint8_t raw_fault_dir(Vertex v) const noexcept { return fault_dir_[v]; }
  /// The faulty edge incident to v, if any.
  std::optional<Edge> incident(Vertex v) const noexcept;

  /// Faulty crossing edges in direction d whose low endpoint has parity p.
  std::uint64_t tally(int dir, int edge_parity) const noexcept { return tallies_[dir][edge_parity]; }
  /// Number of crossing edges per direction per parity: 2^(n-2).
  std::uint64_t crossing_per_parity() const noexcept;

  /// f_0 / f_1: faulty edges lying entirely inside Q^dir_side.
  std::vector<Edge> faults_in_half(int dir, int side) const;
  std::vector<Edge> faults_in(const Subcube& sub) const;

  friend bool operator==(const FaultSet& a, const FaultSet& b) {
    return a.dim_ == b.dim_ && a.edges_ == b.edges_;
  }

 private:
  friend FaultSet make_fault_set(CubeDim dim, std::span<const Edge> edges);

  CubeDim dim_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> fault_dir_;
  std::vector<std::array<std::uint64_t, 2>> tallies_;
};

/// Validates edges and pairwise disjointness.
/// Throws EdgeOutOfRange or NotDisjoint (naming the shared vertex and both edges).
FaultSet make_fault_set(CubeDim dim, std::span<const Edge> edges);

/// (healthy crossing edges of parity 0, of parity 1) in direction d.
std::array<std::uint64_t, 2> healthy_crossing_counts(const FaultSet& faults, int dir);

// Fault-file text format:
//   # comment
//   n=<dim>
//   <low label as n-character binary string> <direction>
FaultSet parse_fault_file(std::istream& in);
FaultSet parse_fault_text(const std::string& text);
std::string format_fault_file(const FaultSet& faults);

std::string format_edge(const Edge& e, int n);

}  // namespace hyperham
