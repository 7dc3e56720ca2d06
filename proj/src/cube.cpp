#include "hyperham/cube.hpp"

namespace hyperham {

Edge edge_between(Vertex a, Vertex b) {
  const Vertex diff = a ^ b;
  if (std::popcount(diff) != 1) {
    throw EdgeOutOfRange("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                         " are not adjacent");
  }
  const int dir = std::countr_zero(diff);
  return {bit(a, dir) ? b : a, dir};
}

void check_edge(CubeDim dim, const Edge& e) {
  if (e.dir < 0 || e.dir >= dim.value()) {
    throw EdgeOutOfRange("edge direction " + std::to_string(e.dir) + " out of range for n=" +
                         std::to_string(dim.value()));
  }
  if (!dim.contains(e.low)) {
    throw EdgeOutOfRange("edge endpoint " + std::to_string(e.low) + " out of range for n=" +
                         std::to_string(dim.value()));
  }
  if (bit(e.low, e.dir)) {
    throw EdgeOutOfRange("edge low endpoint " + to_binary(e.low, dim.value()) + " has 1 at direction " +
                         std::to_string(e.dir));
  }
}

std::string to_binary(Vertex v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (bit(v, i)) s[static_cast<std::size_t>(n - 1 - i)] = '1';
  }
  return s;
}

Vertex parse_binary(std::string_view text, int n) {
  if (static_cast<int>(text.size()) != n) {
    throw EdgeOutOfRange("label '" + std::string(text) + "' must have exactly " + std::to_string(n) +
                         " binary digits");
  }
  Vertex v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw EdgeOutOfRange("label '" + std::string(text) + "' is not a binary string");
    }
    v = (v << 1) | static_cast<Vertex>(c - '0');
  }
  return v;
}

Subcube Subcube::half(CubeDim dim, int split_dir, int side) {
  if (split_dir < 0 || split_dir >= dim.value()) throw EdgeOutOfRange("split direction out of range");
  return whole(dim).split(split_dir, side);
}

Subcube Subcube::quadrant(CubeDim dim, int i, int j, int side_i, int side_j) {
  if (i == j) throw PreconditionViolated("quadrant split directions must differ");
  return half(dim, i, side_i).split(j, side_j);
}

std::vector<int> Subcube::free_dirs() const {
  std::vector<int> dirs;
  for (Vertex m = free_mask; m != 0; m &= m - 1) dirs.push_back(std::countr_zero(m));
  return dirs;
}

std::vector<Vertex> gray_code(const Subcube& sub) {
  const auto dirs = sub.free_dirs();
  std::vector<Vertex> out;
  out.reserve(sub.size());
  for (std::uint64_t i = 0; i < sub.size(); ++i) {
    const std::uint64_t g = i ^ (i >> 1);
    Vertex v = sub.fixed;
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      if ((g >> j) & 1U) v |= Vertex{1} << dirs[j];
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace hyperham
