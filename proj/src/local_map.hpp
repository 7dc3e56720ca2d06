#pragma once

#include <vector>

#include "hyperham/cube.hpp"

namespace hyperham::detail {

/// Maps a subcube's vertices to dense local labels 0 .. 2^k - 1.
struct LocalMap {
  std::vector<int> dirs;
  Vertex fixed = 0;

  explicit LocalMap(const Subcube& sub) : dirs(sub.free_dirs()), fixed(sub.fixed) {}

  int to_local(Vertex v) const {
    int l = 0;
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      if (bit(v, dirs[j])) l |= 1 << j;
    }
    return l;
  }
  Vertex to_global(int l) const {
    Vertex v = fixed;
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      if ((l >> j) & 1) v |= Vertex{1} << dirs[j];
    }
    return v;
  }
};

}  // namespace hyperham::detail
