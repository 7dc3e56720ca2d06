#pragma once

// Hypercube primitives. Vertex labels are bitmasks: bit i holds coordinate b_i.

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperham/errors.hpp"

namespace hyperham {

#ifndef HYPERHAM_MAX_DIM
#define HYPERHAM_MAX_DIM 24
#endif

inline constexpr int kMaxDim = HYPERHAM_MAX_DIM;
static_assert(kMaxDim >= 1 && kMaxDim <= 31, "labels are stored in 32 bits");

using Vertex = std::uint32_t;

/// Validated cube dimension, 1 <= n <= kMaxDim.
class CubeDim {
 public:
  constexpr CubeDim() = default;
  explicit CubeDim(int n) : n_(n) {
    if (n < 1 || n > kMaxDim) {
      throw DimensionError("cube dimension " + std::to_string(n) + " outside [1, " +
                           std::to_string(kMaxDim) + "]");
    }
  }
  constexpr int value() const noexcept { return n_; }
  constexpr std::uint64_t vertex_count() const noexcept { return std::uint64_t{1} << n_; }
  constexpr std::uint64_t edge_count() const noexcept {
    return static_cast<std::uint64_t>(n_) << (n_ - 1);
  }
  constexpr Vertex all_bits() const noexcept { return static_cast<Vertex>(vertex_count() - 1); }
  constexpr bool contains(Vertex v) const noexcept { return v < vertex_count(); }
  friend constexpr bool operator==(CubeDim, CubeDim) = default;

 private:
  int n_ = 1;
};

constexpr int parity(Vertex x) noexcept { return std::popcount(x) & 1; }

constexpr int distance(Vertex a, Vertex b) noexcept { return std::popcount(a ^ b); }

constexpr Vertex flip(Vertex x, int dir) noexcept { return x ^ (Vertex{1} << dir); }

constexpr bool bit(Vertex x, int dir) noexcept { return ((x >> dir) & 1U) != 0; }

/// x^(i): the neighbour of x across direction i.
inline Vertex neighbor(CubeDim dim, Vertex x, int dir) {
  if (dir < 0 || dir >= dim.value()) {
    throw EdgeOutOfRange("direction " + std::to_string(dir) + " out of range for n=" +
                         std::to_string(dim.value()));
  }
  return flip(x, dir);
}

/// Canonical undirected edge: the endpoint with 0 at `dir`, and the direction.
struct Edge {
  Vertex low = 0;
  int dir = 0;

  constexpr Vertex high() const noexcept { return flip(low, dir); }
  /// Edge parity is the parity of the endpoint with 0 in the edge's direction.
  constexpr int edge_parity() const noexcept { return parity(low); }
  constexpr bool touches(Vertex v) const noexcept { return v == low || v == high(); }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge& a, const Edge& b) noexcept {
    if (a.low != b.low) return a.low <=> b.low;
    return a.dir <=> b.dir;
  }
};

/// Canonical edge joining two adjacent vertices. Throws if they are not adjacent.
Edge edge_between(Vertex a, Vertex b);

/// Validating constructor used by the parsers and by make_fault_set.
void check_edge(CubeDim dim, const Edge& e);

std::string to_binary(Vertex v, int n);
/// Parses exactly-n-character binary labels, most significant coordinate first.
Vertex parse_binary(std::string_view text, int n);

/// A subcube of Q_n: vertices v with (v & ~free_mask) == fixed within n bits.
struct Subcube {
  int n = 0;
  Vertex free_mask = 0;
  Vertex fixed = 0;

  static Subcube whole(CubeDim dim) { return {dim.value(), dim.all_bits(), 0}; }
  /// Q^i_side.
  static Subcube half(CubeDim dim, int split_dir, int side);
  /// Q^{i,j}_{ab}: x_i = a and x_j = b.
  static Subcube quadrant(CubeDim dim, int i, int j, int side_i, int side_j);

  int dim() const noexcept { return std::popcount(free_mask); }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << dim(); }
  bool contains(Vertex v) const noexcept { return (v & ~free_mask) == fixed; }
  bool is_free(int dir) const noexcept { return bit(free_mask, dir); }
  /// Half of this subcube with coordinate `dir` fixed to `side`.
  Subcube split(int dir, int side) const noexcept {
    const Vertex b = Vertex{1} << dir;
    return {n, free_mask & ~b, side != 0 ? (fixed | b) : fixed};
  }
  Vertex lowest() const noexcept { return fixed; }
  std::vector<int> free_dirs() const;

  friend bool operator==(const Subcube&, const Subcube&) = default;

  /// Visits every vertex in ascending numeric order.
  template <class F>
  void for_each(F&& f) const {
    Vertex s = 0;
    for (;;) {
      f(fixed | s);
      if (s == free_mask) break;
      s = (s - free_mask) & free_mask;
    }
  }
};

/// Reflected Gray code of the subcube's free coordinates, starting at its lowest vertex.
std::vector<Vertex> gray_code(const Subcube& sub);

}  // namespace hyperham
