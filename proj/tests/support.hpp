#pragma once

// Test-side reference implementations, written independently of the library
// internals: plain definitions and unpruned brute force.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hyperham/fault_set.hpp"
#include "hyperham/route.hpp"

namespace ref {

using hyperham::Edge;
using hyperham::FaultSet;
using hyperham::Vertex;
using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

inline std::pair<Vertex, Vertex> key(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

inline EdgeSet edge_set(const FaultSet& f) {
  EdgeSet s;
  for (const Edge& e : f.edges()) s.insert(key(e.low, e.high()));
  return s;
}

inline int pop(Vertex v) { return __builtin_popcount(v); }

/// Faulty edges used by a route, or -1 if it is not a valid route covering
/// every vertex except `skip` (use 0xFFFFFFFF for none).
inline int check_route(int n, const EdgeSet& faults, const std::vector<Vertex>& vs, bool closed,
                       Vertex skip = 0xFFFFFFFFu) {
  const Vertex count = Vertex{1} << n;
  std::vector<int> seen(count, 0);
  for (Vertex v : vs) {
    if (v >= count || v == skip || seen[v]++) return -1;
  }
  const std::size_t want = skip < count ? count - 1 : count;
  if (vs.size() != want) return -1;
  int used = 0;
  auto step = [&](Vertex a, Vertex b) {
    if (pop(a ^ b) != 1) return false;
    used += faults.count(key(a, b)) ? 1 : 0;
    return true;
  };
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (!step(vs[i - 1], vs[i])) return -1;
  }
  if (closed && !step(vs.back(), vs.front())) return -1;
  return used;
}

/// Unpruned DFS: does a Hamiltonian path a -> b (or cycle if a == b is
/// unused and closed) avoiding `faults` exist? Small n only.
class Brute {
 public:
  Brute(int n, EdgeSet faults) : n_(n), faults_(std::move(faults)), seen_(std::size_t{1} << n, false) {}

  bool path(Vertex a, Vertex b) {
    target_ = b;
    closed_ = false;
    return start(a);
  }
  bool cycle() {
    closed_ = true;
    target_ = 0;
    return start(0);
  }
  /// Number of directed Hamiltonian cycles through vertex 0 (each undirected cycle counted twice).
  std::uint64_t count_directed_cycles() {
    closed_ = true;
    counting_ = true;
    count_ = 0;
    start(0);
    return count_;
  }

 private:
  bool start(Vertex a) {
    std::fill(seen_.begin(), seen_.end(), false);
    seen_[a] = true;
    return dfs(a, 1);
  }
  bool ok(Vertex a, Vertex b) const { return !faults_.count(key(a, b)); }
  bool dfs(Vertex v, std::size_t depth) {
    const std::size_t total = seen_.size();
    if (depth == total) {
      const bool done = closed_ ? ok(v, 0) && pop(v) == 1 : v == target_;
      if (done && counting_) {
        ++count_;
        return false;
      }
      return done;
    }
    for (int d = 0; d < n_; ++d) {
      const Vertex u = v ^ (Vertex{1} << d);
      if (seen_[u] || !ok(v, u)) continue;
      if (!closed_ && u == target_ && depth + 1 != total) continue;
      seen_[u] = true;
      if (dfs(u, depth + 1)) return true;
      seen_[u] = false;
    }
    return false;
  }

  int n_;
  EdgeSet faults_;
  std::vector<bool> seen_;
  Vertex target_ = 0;
  bool closed_ = false;
  bool counting_ = false;
  std::uint64_t count_ = 0;
};

/// Every crossing edge of one parity along d is faulty (direct scan).
inline bool scdhw_by_definition(const FaultSet& f) {
  const int n = f.n();
  const auto s = edge_set(f);
  for (int d = 0; d < n; ++d) {
    for (int p = 0; p < 2; ++p) {
      bool all = true;
      for (Vertex v = 0; v < (Vertex{1} << n) && all; ++v) {
        if (((v >> d) & 1) == 0 && pop(v) % 2 == p) all = s.count(key(v, v | (Vertex{1} << d))) > 0;
      }
      if (all) return true;
    }
  }
  return false;
}

/// All crossing edges along d but two are faulty, and the two healthy ones differ in parity.
inline bool dtbce_by_definition(const FaultSet& f) {
  const int n = f.n();
  const auto s = edge_set(f);
  for (int d = 0; d < n; ++d) {
    std::vector<Vertex> healthy;
    for (Vertex v = 0; v < (Vertex{1} << n); ++v) {
      if (((v >> d) & 1) == 0 && !s.count(key(v, v | (Vertex{1} << d)))) healthy.push_back(v);
    }
    if (healthy.size() == 2 && pop(healthy[0]) % 2 != pop(healthy[1]) % 2) return true;
  }
  return false;
}

/// Fault set of Q^m_side re-labelled as a cube of dimension n - 1.
inline FaultSet induced_half(const FaultSet& f, int m, int side) {
  auto squeeze = [m](Vertex v) { return ((v >> (m + 1)) << m) | (v & ((Vertex{1} << m) - 1)); };
  std::vector<Edge> edges;
  for (const Edge& e : f.edges()) {
    if (e.dir == m || static_cast<int>((e.low >> m) & 1) != side) continue;
    edges.push_back(Edge{squeeze(e.low), e.dir > m ? e.dir - 1 : e.dir});
  }
  return hyperham::make_fault_set(hyperham::CubeDim(f.n() - 1), edges);
}

/// Matchings of Q_n by include/exclude recursion over the edge list.
inline std::uint64_t count_matchings(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < (Vertex{1} << n); ++v) {
    for (int d = 0; d < n; ++d) {
      if (!((v >> d) & 1)) edges.emplace_back(v, v | (Vertex{1} << d));
    }
  }
  std::uint64_t total = 0;
  std::vector<bool> used(std::size_t{1} << n, false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == edges.size()) {
      ++total;
      return;
    }
    self(self, i + 1);
    auto [a, b] = edges[i];
    if (!used[a] && !used[b]) {
      used[a] = used[b] = true;
      self(self, i + 1);
      used[a] = used[b] = false;
    }
  };
  rec(rec, 0);
  return total;
}

inline FaultSet faults(int n, std::vector<Edge> edges) { return hyperham::make_fault_set(hyperham::CubeDim(n), edges); }

/// The Q_4 fault sets used throughout: all parity-0 direction-0 crossing edges
/// (an SCDHW), and all direction-0 crossing edges but those at 0000 and 0010.
inline FaultSet q4_scdhw() { return faults(4, {{0b0000, 0}, {0b0110, 0}, {0b1010, 0}, {0b1100, 0}}); }
inline FaultSet q4_dtbce() {
  std::vector<Edge> e;
  for (Vertex v = 0; v < 16; v += 2) {
    if (v != 0b0000 && v != 0b0010) e.push_back({v, 0});
  }
  return faults(4, e);
}

}  // namespace ref
