#include "base_cases.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hyperham/oracle.hpp"
#include "local_map.hpp"

namespace hyperham::detail {

namespace {

enum Mode : std::uint64_t { kPath0 = 0, kPath1 = 1, kAvoid = 2, kTwo = 3 };

struct Entry {
  bool found = false;
  std::size_t first_len = 0;
  std::vector<std::uint8_t> local;
};

class Memo {
 public:
  std::optional<Entry> get(std::uint64_t key) {
    std::lock_guard lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void put(std::uint64_t key, Entry e) {
    std::lock_guard lock(mu_);
    map_.emplace(key, std::move(e));
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::uint64_t, Entry> map_;
};

Memo& memo() {
  static Memo m;
  return m;
}

/// 3 bits per local vertex: local direction of an incident fault inside sub, or 7.
std::uint64_t fault_signature(const FaultSet* faults, const Subcube& sub, const LocalMap& map) {
  std::uint64_t sig = 0;
  const int verts = 1 << map.dirs.size();
  for (int l = 0; l < verts; ++l) {
    std::uint64_t code = 7;
    if (faults) {
      const auto d = faults->raw_fault_dir(map.to_global(l));
      if (d != FaultSet::kNoFault && sub.is_free(d)) {
        for (std::size_t j = 0; j < map.dirs.size(); ++j) {
          if (map.dirs[j] == d) code = j;
        }
      }
    }
    sig |= code << (3 * l);
  }
  return sig;
}

std::uint64_t make_key(const Subcube& sub, Mode mode, int a, int b, std::uint64_t payload) {
  return static_cast<std::uint64_t>(sub.dim()) | (static_cast<std::uint64_t>(mode) << 3) |
         (static_cast<std::uint64_t>(a) << 5) | (static_cast<std::uint64_t>(b) << 9) | (payload << 13);
}

void check_small(const Subcube& sub) {
  if (sub.dim() > kBaseDim) throw std::logic_error("base case called on a subcube above dimension 4");
}

template <class Compute>
std::optional<Entry> lookup(std::uint64_t key, const LocalMap& map, Compute&& compute) {
  if (auto hit = memo().get(key)) return hit;
  Entry e;
  if (auto found = compute()) {
    e.found = true;
    e.first_len = found->second;
    for (Vertex v : found->first) e.local.push_back(static_cast<std::uint8_t>(map.to_local(v)));
  }
  memo().put(key, e);
  return e;
}

bool emit(const Entry& e, const LocalMap& map, std::span<Vertex> out) {
  if (!e.found) return false;
  if (out.size() != e.local.size()) throw std::logic_error("base case output size mismatch");
  for (std::size_t i = 0; i < e.local.size(); ++i) out[i] = map.to_global(e.local[i]);
  return true;
}

using Found = std::optional<std::pair<std::vector<Vertex>, std::size_t>>;

Found run(const FaultSet* faults, const Subcube& sub, const SubcubeQuery& q) {
  auto r = search_subcube(faults, sub, q);
  if (!r) return std::nullopt;
  return std::make_pair(std::move(*r), std::size_t{0});
}

}  // namespace

bool small_path(const FaultSet* faults, const Subcube& sub, Vertex a, Vertex b, int faulty_exact,
                std::span<Vertex> out) {
  check_small(sub);
  const LocalMap map(sub);
  const auto key = make_key(sub, faulty_exact == 1 ? kPath1 : kPath0, map.to_local(a), map.to_local(b),
                            fault_signature(faults, sub, map));
  const auto e = lookup(key, map, [&]() -> Found {
    SubcubeQuery q;
    q.segments = {{a, b}};
    q.faulty_exact = faulty_exact;
    return run(faults, sub, q);
  });
  return emit(*e, map, out);
}

bool small_path_avoiding(const Subcube& sub, Vertex x, Vertex y, Vertex v, std::span<Vertex> out) {
  check_small(sub);
  const LocalMap map(sub);
  const auto key = make_key(sub, kAvoid, map.to_local(x), map.to_local(y), static_cast<std::uint64_t>(map.to_local(v)));
  const auto e = lookup(key, map, [&]() -> Found {
    SubcubeQuery q;
    q.segments = {{x, y}};
    q.excluded = v;
    return run(nullptr, sub, q);
  });
  return emit(*e, map, out);
}

std::optional<std::size_t> small_two_paths(const Subcube& sub, Vertex a1, Vertex b1, Vertex a2, Vertex b2,
                                           std::span<Vertex> out) {
  check_small(sub);
  const LocalMap map(sub);
  const auto payload = static_cast<std::uint64_t>(map.to_local(a2)) | (static_cast<std::uint64_t>(map.to_local(b2)) << 4);
  const auto key = make_key(sub, kTwo, map.to_local(a1), map.to_local(b1), payload);
  const auto e = lookup(key, map, [&]() -> Found {
    SubcubeQuery q;
    q.segments = {{a1, b1}, {a2, b2}};
    auto r = search_subcube(nullptr, sub, q);
    if (!r) return std::nullopt;
    // The first segment ends at b1.
    std::size_t len = 0;
    while ((*r)[len] != b1) ++len;
    return std::make_pair(std::move(*r), len + 1);
  });
  if (!emit(*e, map, out)) return std::nullopt;
  return e->first_len;
}

}  // namespace hyperham::detail
