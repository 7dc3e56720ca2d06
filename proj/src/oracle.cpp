#include "hyperham/oracle.hpp"

#include <array>
#include <algorithm>
#include <bit>

#include "local_map.hpp"

namespace hyperham {

namespace {

using Mask = std::uint64_t;
using detail::LocalMap;

constexpr Mask one(int v) { return Mask{1} << v; }

/// A search instance in local coordinates of a <= 6 dimensional cube.
struct LocalQuery {
  int k = 0;
  std::array<Mask, kMaxOracleDim> faulty{};  // bit v: edge (v, v^(1<<j)) is faulty
  bool closed = false;
  std::vector<std::pair<int, int>> segments;
  int excluded = -1;
  int faulty_exact = 0;
  int req_a = -1;
  int req_b = -1;
  std::uint64_t budget = kDefaultSearchBudget;
  bool count_all = false;
};

struct Timeout {};

class Search {
 public:
  explicit Search(const LocalQuery& q) : q_(q), n_verts_(1 << q.k) {
    all_ = q.k == 6 ? ~Mask{0} : (one(n_verts_) - 1);
    for (int j = 0; j < q.k; ++j) {
      Mask low = 0;
      for (int v = 0; v < n_verts_; ++v) {
        if (((v >> j) & 1) == 0) low |= one(v);
      }
      low_[j] = low;
    }
    for (int v = 0; v < n_verts_; ++v) {
      if ((std::popcount(static_cast<unsigned>(v)) & 1) == 0) even_ |= one(v);
    }
  }

  /// Returns true when a route exists. Throws Timeout past the budget.
  bool run() {
    Mask cover = all_;
    if (q_.excluded >= 0) cover &= ~one(q_.excluded);
    if (!root_feasible(cover)) return false;

    path_.clear();
    if (q_.closed) {
      start_ = std::countr_zero(cover);
      target_ = -1;
    } else {
      start_ = q_.segments[0].first;
      target_ = q_.segments[0].second;
    }
    seg_ = 0;
    unvisited_ = cover & ~one(start_);
    head_ = start_;
    path_.push_back(start_);
    faulty_used_ = 0;
    req_used_ = false;
    first_move_ = true;
    return dfs();
  }

  const std::vector<int>& path() const { return path_; }
  std::uint64_t solutions() const { return solutions_; }

 private:
  bool root_feasible(Mask cover) const {
    const int total = std::popcount(cover);
    const int even = std::popcount(cover & even_);
    const int odd = total - even;
    if (q_.closed) return total >= 4 && even == odd;
    int surplus = 0;  // expected even - odd
    Mask ends = 0;
    for (auto [a, b] : q_.segments) {
      if (a == b || !((cover >> a) & 1) || !((cover >> b) & 1)) return false;
      if ((ends >> a) & 1 || (ends >> b) & 1) return false;
      ends |= one(a) | one(b);
      const bool ea = (even_ >> a) & 1;
      const bool eb = (even_ >> b) & 1;
      if (ea == eb) surplus += ea ? 1 : -1;
    }
    return even - odd == surplus;
  }

  Mask shift(Mask x, int j) const {
    const int s = 1 << j;
    return ((x & low_[j]) << s) | ((x & ~low_[j] & all_) >> s);
  }

  /// Neighbours of x through currently usable edges.
  Mask usable_nbrs(Mask x) const {
    Mask out = 0;
    const bool allow_faulty = faulty_used_ < q_.faulty_exact;
    for (int j = 0; j < q_.k; ++j) out |= shift(allow_faulty ? x : (x & ~q_.faulty[j]), j);
    return out;
  }

  bool edge_faulty(int a, int j) const { return (q_.faulty[j] >> a) & 1; }

  bool is_required(int a, int b) const {
    return (a == q_.req_a && b == q_.req_b) || (a == q_.req_b && b == q_.req_a);
  }

  /// Vertices that may not be stepped on while in segment seg_.
  Mask forbidden() const {
    Mask m = 0;
    for (std::size_t s = static_cast<std::size_t>(seg_) + 1; s < q_.segments.size(); ++s) {
      m |= one(q_.segments[s].first) | one(q_.segments[s].second);
    }
    return m;
  }

  /// Segment endpoints still ahead: they need only one usable neighbour.
  Mask endpoint_like() const {
    if (q_.closed) return 0;
    Mask m = one(q_.segments[seg_].second);
    return m | forbidden();
  }

  bool single_route() const { return q_.closed || q_.segments.size() == 1; }

  bool prune(int left) const {
    const Mask closing = q_.closed ? one(start_) : 0;
    const Mask avail_pool = unvisited_ | one(head_) | closing;
    const Mask ends = endpoint_like();
    for (int j = 0; j < q_.k; ++j) {
      const int w = left ^ (1 << j);
      if (!((unvisited_ >> w) & 1)) continue;
      const int avail = std::popcount(usable_nbrs(one(w)) & avail_pool);
      const int need = ((ends >> w) & 1) ? 1 : 2;
      if (avail < need) return true;
    }
    if (!single_route() || unvisited_ == 0) return false;

    // Every unvisited vertex must stay reachable from the head.
    Mask reach = usable_nbrs(one(head_)) & unvisited_;
    if (reach == 0) return true;
    for (;;) {
      const Mask next = reach | (usable_nbrs(reach) & unvisited_);
      if (next == reach) break;
      reach = next;
    }
    if (reach != unvisited_) return true;

    // Half-cube port counting: each maximal run of the remaining route inside
    // W starts and ends at a vertex that touches the rest of the route.
    for (int d = 0; d < q_.k; ++d) {
      for (int side = 0; side < 2; ++side) {
        const Mask half = side == 0 ? low_[d] : (~low_[d] & all_);
        const Mask w = unvisited_ & half;
        if (w == 0) continue;
        const Mask attach = (unvisited_ & ~w) | one(head_) | closing;
        Mask ports = w & usable_nbrs(attach);
        if (!q_.closed) ports |= w & one(target_);
        if (ports == 0) return true;
        const int nports = std::popcount(ports);
        if (nports == 1 && std::popcount(w) > 1) return true;
        const int diff = std::popcount(w & even_) - std::popcount(w & ~even_);
        const int even_ports = std::popcount(ports & even_);
        const int odd_ports = nports - even_ports;
        if (even_ports == 0 && (diff >= 0 || -diff > odd_ports)) return true;
        if (odd_ports == 0 && (diff <= 0 || diff > even_ports)) return true;
      }
    }
    return false;
  }

  bool finish_ok() const { return faulty_used_ == q_.faulty_exact && (q_.req_a < 0 || req_used_); }

  bool dfs() {
    if (++expansions_ > q_.budget) throw Timeout{};
    const int head = head_;
    const Mask forb = forbidden();
    const bool last_seg = q_.closed || static_cast<std::size_t>(seg_) + 1 == q_.segments.size();
    for (int j = 0; j < q_.k; ++j) {
      const int nb = head ^ (1 << j);
      if (!((unvisited_ >> nb) & 1) || ((forb >> nb) & 1)) continue;
      const bool faulty = edge_faulty(head, j);
      if (faulty && faulty_used_ >= q_.faulty_exact) continue;
      const bool is_target = !q_.closed && nb == target_;
      const Mask rest = unvisited_ & ~one(nb);
      if (is_target && last_seg && rest != 0) continue;
      const bool req_here = q_.req_a >= 0 && is_required(head, nb);
      const bool head_on_req = head == q_.req_a || head == q_.req_b;
      const bool head_has_other = q_.closed && first_move_;
      if (head_on_req && !req_used_ && !req_here && !head_has_other) continue;

      // apply
      const Mask saved_unvisited = unvisited_;
      const int saved_faulty = faulty_used_;
      const bool saved_req = req_used_;
      const int saved_seg = seg_;
      const int saved_target = target_;
      const bool saved_first = first_move_;
      const std::size_t saved_len = path_.size();
      unvisited_ = rest;
      faulty_used_ += faulty ? 1 : 0;
      req_used_ = req_used_ || req_here;
      first_move_ = false;
      path_.push_back(nb);
      head_ = nb;

      bool found = false;
      if (is_target && last_seg) {
        if (finish_ok()) found = record();
      } else if (is_target) {
        // Jump to the next segment's start.
        ++seg_;
        const int s = q_.segments[seg_].first;
        target_ = q_.segments[seg_].second;
        unvisited_ &= ~one(s);
        path_.push_back(s);
        head_ = s;
        if (!prune(nb)) found = dfs();
      } else if (q_.closed && rest == 0) {
        const int jd = std::countr_zero(static_cast<unsigned>(nb ^ start_));
        if (std::popcount(static_cast<unsigned>(nb ^ start_)) == 1) {
          const bool close_faulty = edge_faulty(nb, jd);
          const bool close_req = is_required(nb, start_);
          const int used = faulty_used_ + (close_faulty ? 1 : 0);
          if (used == q_.faulty_exact && (q_.req_a < 0 || req_used_ || close_req)) found = record();
        }
      } else if (!prune(head)) {
        found = dfs();
      }
      if (found) return true;

      unvisited_ = saved_unvisited;
      faulty_used_ = saved_faulty;
      req_used_ = saved_req;
      seg_ = saved_seg;
      target_ = saved_target;
      first_move_ = saved_first;
      path_.resize(saved_len);
      head_ = head;
    }
    return false;
  }

  /// Returns true to stop the search.
  bool record() {
    ++solutions_;
    return !q_.count_all;
  }

  const LocalQuery& q_;
  int n_verts_;
  Mask all_ = 0;
  Mask even_ = 0;
  std::array<Mask, kMaxOracleDim> low_{};

  std::vector<int> path_;
  Mask unvisited_ = 0;
  int head_ = 0;
  int start_ = 0;
  int target_ = -1;
  int seg_ = 0;
  int faulty_used_ = 0;
  bool req_used_ = false;
  bool first_move_ = true;
  std::uint64_t expansions_ = 0;
  std::uint64_t solutions_ = 0;
};

LocalQuery make_local(const FaultSet* faults, const Subcube& sub, const LocalMap& map) {
  LocalQuery lq;
  lq.k = sub.dim();
  if (lq.k > kMaxOracleDim) {
    throw DimensionTooLarge("oracle search limited to n <= " + std::to_string(kMaxOracleDim));
  }
  if (faults != nullptr) {
    for (int l = 0; l < (1 << lq.k); ++l) {
      const Vertex v = map.to_global(l);
      const auto d = faults->raw_fault_dir(v);
      if (d == FaultSet::kNoFault || !sub.is_free(d)) continue;
      for (std::size_t j = 0; j < map.dirs.size(); ++j) {
        if (map.dirs[j] == d) lq.faulty[j] |= one(l);
      }
    }
  }
  return lq;
}

void check_in(const Subcube& sub, Vertex v) {
  if (!sub.contains(v)) throw PreconditionViolated("vertex " + std::to_string(v) + " outside the searched cube");
}

}  // namespace

namespace detail {

std::optional<std::vector<Vertex>> search_subcube(const FaultSet* faults, const Subcube& sub,
                                                  const SubcubeQuery& q) {
  const LocalMap map(sub);
  LocalQuery lq = make_local(faults, sub, map);
  lq.closed = q.closed;
  lq.budget = q.budget;
  lq.faulty_exact = q.faulty_exact;
  if (q.closed == !q.segments.empty() || q.segments.size() > 2) {
    throw PreconditionViolated("search needs either closed or one/two segments");
  }
  if (q.faulty_exact < 0 || q.faulty_exact > 1) throw PreconditionViolated("faulty traversals must be 0 or 1");
  for (auto [a, b] : q.segments) {
    check_in(sub, a);
    check_in(sub, b);
    lq.segments.emplace_back(map.to_local(a), map.to_local(b));
  }
  if (q.excluded) {
    check_in(sub, *q.excluded);
    lq.excluded = map.to_local(*q.excluded);
  }
  if (q.required_edge) {
    check_in(sub, q.required_edge->low);
    check_in(sub, q.required_edge->high());
    lq.req_a = map.to_local(q.required_edge->low);
    lq.req_b = map.to_local(q.required_edge->high());
  }
  Search search(lq);
  bool found = false;
  try {
    found = search.run();
  } catch (const Timeout&) {
    throw SearchTimeout("oracle node budget of " + std::to_string(q.budget) + " expansions exceeded");
  }
  if (!found) return std::nullopt;
  std::vector<Vertex> out;
  out.reserve(search.path().size());
  for (int l : search.path()) out.push_back(map.to_global(l));
  return out;
}

std::uint64_t count_subcube_cycles(const FaultSet* faults, const Subcube& sub, std::uint64_t budget) {
  const LocalMap map(sub);
  LocalQuery lq = make_local(faults, sub, map);
  lq.closed = true;
  lq.budget = budget;
  lq.count_all = true;
  Search search(lq);
  try {
    search.run();
  } catch (const Timeout&) {
    throw SearchTimeout("oracle node budget exceeded while counting");
  }
  // Each undirected cycle is found once per orientation.
  return search.solutions() / 2;
}

}  // namespace detail

namespace {

detail::SubcubeQuery to_query(const FaultSet& faults, const SearchConstraints& c, std::uint64_t budget) {
  if (faults.n() > kMaxOracleDim) {
    throw DimensionTooLarge("oracle search limited to n <= " + std::to_string(kMaxOracleDim));
  }
  if (c.closed && c.endpoints) throw PreconditionViolated("a closed search takes no endpoints");
  if (!c.closed && !c.endpoints) throw PreconditionViolated("a path search needs endpoints");
  detail::SubcubeQuery q;
  q.closed = c.closed;
  if (c.endpoints) q.segments.push_back(*c.endpoints);
  q.excluded = c.excluded_vertex;
  q.faulty_exact = c.required_faulty_traversals.value_or(0);
  q.required_edge = c.required_edge;
  if (q.required_edge) check_edge(faults.dim(), *q.required_edge);
  q.budget = budget;
  return q;
}

}  // namespace

bool oracle_exists(const FaultSet& faults, const SearchConstraints& c, std::uint64_t budget) {
  return oracle_find(faults, c, budget).has_value();
}

std::optional<Route> oracle_find(const FaultSet& faults, const SearchConstraints& c, std::uint64_t budget) {
  const auto q = to_query(faults, c, budget);
  auto found = detail::search_subcube(&faults, Subcube::whole(faults.dim()), q);
  if (!found) return std::nullopt;
  return Route{faults.dim(), std::move(*found), c.closed};
}

std::optional<std::pair<Route, Route>> oracle_find_two_paths(const FaultSet& faults,
                                                             std::pair<Vertex, Vertex> first,
                                                             std::pair<Vertex, Vertex> second,
                                                             std::uint64_t budget) {
  if (faults.n() > kMaxOracleDim) {
    throw DimensionTooLarge("oracle search limited to n <= " + std::to_string(kMaxOracleDim));
  }
  detail::SubcubeQuery q;
  q.segments = {first, second};
  q.budget = budget;
  auto found = detail::search_subcube(&faults, Subcube::whole(faults.dim()), q);
  if (!found) return std::nullopt;
  const auto split = std::find(found->begin(), found->end(), first.second) - found->begin() + 1;
  Route a{faults.dim(), std::vector<Vertex>(found->begin(), found->begin() + split), false};
  Route b{faults.dim(), std::vector<Vertex>(found->begin() + split, found->end()), false};
  return std::make_pair(std::move(a), std::move(b));
}

std::uint64_t oracle_count_cycles(const FaultSet& faults, std::uint64_t budget) {
  if (faults.n() > kMaxOracleDim) {
    throw DimensionTooLarge("oracle search limited to n <= " + std::to_string(kMaxOracleDim));
  }
  return detail::count_subcube_cycles(&faults, Subcube::whole(faults.dim()), budget);
}

}  // namespace hyperham
