#include "hyperham/classical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "base_cases.hpp"
#include "engine.hpp"

namespace hyperham {

namespace detail {

namespace {

int lowest_free_dir(Vertex mask) { return std::countr_zero(mask); }

/// Lowest vertex of `sub` with the given parity that is not rejected.
template <class Reject>
Vertex pick(const Subcube& sub, int par, Reject&& reject) {
  Vertex s = 0;
  for (;;) {
    const Vertex v = sub.fixed | s;
    if (parity(v) == par && !reject(v)) return v;
    if (s == sub.free_mask) break;
    s = (s - sub.free_mask) & sub.free_mask;
  }
  throw std::logic_error("no admissible vertex in subcube");
}

void append(std::vector<Vertex>& dst, std::span<const Vertex> src) { dst.insert(dst.end(), src.begin(), src.end()); }

}  // namespace

void ff_path(const Subcube& sub, Vertex a, Vertex b, std::span<Vertex> out) {
  if (sub.free_mask == 0) {
    out[0] = a;
    return;
  }
  if (std::has_single_bit(sub.free_mask)) {
    out[0] = a;
    out[1] = b;
    return;
  }
  const int m = lowest_free_dir((a ^ b) & sub.free_mask);
  const Subcube near = sub.split(m, bit(a, m));
  const Subcube far = sub.split(m, !bit(a, m));
  const Vertex u = flip(a, lowest_free_dir(near.free_mask));
  const std::size_t h = near.size();
  ff_path(near, a, u, out.first(h));
  ff_path(far, flip(u, m), b, out.subspan(h, h));
}

void ff_path_avoiding(const Subcube& sub, Vertex x, Vertex y, Vertex v, std::span<Vertex> out) {
  if (sub.dim() <= kBaseDim) {
    if (!small_path_avoiding(sub, x, y, v, out)) throw std::logic_error("no path avoiding a vertex in base case");
    return;
  }
  const int m = lowest_free_dir((x ^ y) & sub.free_mask);
  if (bit(v, m) == bit(y, m)) {
    ff_path_avoiding(sub, y, x, v, out);
    std::reverse(out.begin(), out.end());
    return;
  }
  const Subcube near = sub.split(m, bit(x, m));
  const Subcube far = sub.split(m, bit(y, m));
  const Vertex nf = near.free_mask;
  const Vertex u = x ^ (Vertex{1} << lowest_free_dir(nf)) ^ (Vertex{1} << lowest_free_dir(nf & (nf - 1)));
  const std::size_t h = near.size();
  ff_path_avoiding(near, x, u, v, out.first(h - 1));
  ff_path(far, flip(u, m), y, out.subspan(h - 1, h));
}

std::size_t ff_two_paths(const Subcube& sub, Vertex a1, Vertex b1, Vertex a2, Vertex b2, std::span<Vertex> out) {
  if (sub.dim() <= kBaseDim) {
    auto len = small_two_paths(sub, a1, b1, a2, b2, out);
    if (!len) throw std::logic_error("no two-path partition in base case");
    return *len;
  }
  int m = -1;
  for (Vertex f = sub.free_mask; f != 0; f &= f - 1) {
    const int d = lowest_free_dir(f);
    const bool s = bit(a1, d);
    if (bit(b1, d) != s || bit(a2, d) != s || bit(b2, d) != s) {
      m = d;
      break;
    }
  }
  const bool S = bit(a1, m);
  const Subcube hs = sub.split(m, S);
  const Subcube hf = sub.split(m, !S);
  const std::size_t h = hs.size();
  const int pa = parity(a1);
  const int pb = 1 - pa;
  const bool sb1 = bit(b1, m) == S;
  const bool sa2 = bit(a2, m) == S;
  const bool sb2 = bit(b2, m) == S;

  std::vector<Vertex> near(h), far(h);
  std::vector<Vertex> p1, p2;
  p1.reserve(2 * h);
  p2.reserve(2 * h);
  auto nspan = std::span<Vertex>(near);
  auto fspan = std::span<Vertex>(far);

  if (sb1 && !sa2 && !sb2) {
    ff_path(hs, a1, b1, nspan);
    ff_path(hf, a2, b2, fspan);
    append(p1, nspan);
    append(p2, fspan);
  } else if (sb1 && sa2 && !sb2) {
    const Vertex c = pick(hs, pb, [&](Vertex v) { return v == b1; });
    const std::size_t l = ff_two_paths(hs, a1, b1, a2, c, nspan);
    ff_path(hf, flip(c, m), b2, fspan);
    append(p1, nspan.first(l));
    append(p2, nspan.subspan(l));
    append(p2, fspan);
  } else if (sb1 && !sa2 && sb2) {
    const Vertex c = pick(hs, pa, [&](Vertex v) { return v == a1; });
    const std::size_t l = ff_two_paths(hs, a1, b1, c, b2, nspan);
    ff_path(hf, a2, flip(c, m), fspan);
    append(p1, nspan.first(l));
    append(p2, fspan);
    append(p2, nspan.subspan(l));
  } else if (!sb1 && sa2 && !sb2) {
    const Vertex c = pick(hs, pb, [](Vertex) { return false; });
    const Vertex d = pick(hs, pb, [&](Vertex v) { return v == c; });
    const std::size_t l1 = ff_two_paths(hs, a1, c, a2, d, nspan);
    const std::size_t l2 = ff_two_paths(hf, flip(c, m), b1, flip(d, m), b2, fspan);
    append(p1, nspan.first(l1));
    append(p1, fspan.first(l2));
    append(p2, nspan.subspan(l1));
    append(p2, fspan.subspan(l2));
  } else if (!sb1 && !sa2 && sb2) {
    const Vertex c = pick(hs, pb, [&](Vertex v) { return v == b2 || flip(v, m) == a2; });
    const Vertex d = pick(hs, pa, [&](Vertex v) { return v == a1 || flip(v, m) == b1; });
    const std::size_t l1 = ff_two_paths(hs, a1, c, d, b2, nspan);
    const std::size_t l2 = ff_two_paths(hf, flip(c, m), b1, a2, flip(d, m), fspan);
    append(p1, nspan.first(l1));
    append(p1, fspan.first(l2));
    append(p2, fspan.subspan(l2));
    append(p2, nspan.subspan(l1));
  } else if (!sb1 && sa2 && sb2) {
    const Vertex c = pick(hs, pb, [&](Vertex v) { return v == b2; });
    const std::size_t l = ff_two_paths(hs, a1, c, a2, b2, nspan);
    ff_path(hf, flip(c, m), b1, fspan);
    append(p1, nspan.first(l));
    append(p1, fspan);
    append(p2, nspan.subspan(l));
  } else {
    // a1 alone in its half.
    const Vertex c = pick(hs, pb, [&](Vertex v) { return flip(v, m) == a2; });
    ff_path(hs, a1, c, nspan);
    const std::size_t l = ff_two_paths(hf, flip(c, m), b1, a2, b2, fspan);
    append(p1, nspan);
    append(p1, fspan.first(l));
    append(p2, fspan.subspan(l));
  }
  std::copy(p1.begin(), p1.end(), out.begin());
  std::copy(p2.begin(), p2.end(), out.begin() + static_cast<std::ptrdiff_t>(p1.size()));
  return p1.size();
}

void ff_path_through(const Subcube& sub, Vertex x, Vertex y, const Edge& e, std::span<Vertex> out) {
  const Vertex a = e.low;
  const Vertex b = e.high();
  if (!e.touches(x) && !e.touches(y)) {
    // x..a then b..y (or x..b then a..y) is exactly a two-path partition.
    if (parity(a) != parity(x)) {
      ff_two_paths(sub, x, a, b, y, out);
    } else {
      ff_two_paths(sub, x, b, a, y, out);
    }
    return;
  }
  if (e.touches(x)) {
    out[0] = x;
    ff_path_avoiding(sub, x == a ? b : a, y, x, out.subspan(1));
  } else {
    ff_path_avoiding(sub, x, y == a ? b : a, y, out.first(out.size() - 1));
    out[out.size() - 1] = y;
  }
}

}  // namespace detail

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionViolated(what);
}

void require_vertex(CubeDim dim, Vertex v) {
  if (!dim.contains(v)) throw EdgeOutOfRange("vertex " + std::to_string(v) + " out of range");
}

Route make_route(CubeDim dim, std::vector<Vertex> vs) { return Route{dim, std::move(vs), false}; }

void assert_verified(const FaultSet& faults, const Route& r, const RouteConstraints& c, const char* op) {
  const auto v = verify_route(faults, r, c);
  if (!v.ok) {
    std::string msg = std::string(op) + " produced an invalid route:";
    for (const auto& s : v.violations) msg += " " + s + ";";
    throw std::logic_error(msg);
  }
}

}  // namespace

Route fault_free_hp(CubeDim dim, Vertex a, Vertex b) {
  require_vertex(dim, a);
  require_vertex(dim, b);
  require(parity(a) != parity(b), "fault_free_hp needs endpoints of different parity");
  std::vector<Vertex> out(dim.vertex_count());
  detail::ff_path(Subcube::whole(dim), a, b, out);
  Route r = make_route(dim, std::move(out));
  RouteConstraints c;
  c.endpoints = {{a, b}};
  c.max_faulty = 0;
  assert_verified(FaultSet(dim), r, c, "fault_free_hp");
  return r;
}

Route hp_few_faults(const FaultSet& faults, Vertex a, Vertex b) {
  const CubeDim dim = faults.dim();
  require_vertex(dim, a);
  require_vertex(dim, b);
  require(dim.value() >= 3, "hp_few_faults needs n >= 3");
  require(faults.size() + 2 <= static_cast<std::size_t>(dim.value()), "hp_few_faults needs |F| <= n - 2");
  require(parity(a) != parity(b), "hp_few_faults needs endpoints of different parity");
  std::vector<Vertex> out(dim.vertex_count());
  const auto whole = Subcube::whole(dim);
  if (faults.empty()) {
    detail::ff_path(whole, a, b, out);
  } else if (dim.value() <= detail::kBaseDim) {
    if (!detail::small_path(&faults, whole, a, b, 0, out)) throw std::logic_error("hp_few_faults: base search failed");
  } else {
    // |F| <= n - 2 < 2^(n-2) - 1 leaves every direction trap-free.
    detail::la1(faults, whole, a, b, out, nullptr, 0);
  }
  Route r = make_route(dim, std::move(out));
  RouteConstraints c;
  c.endpoints = {{a, b}};
  c.max_faulty = 0;
  assert_verified(faults, r, c, "hp_few_faults");
  return r;
}

Route hp_avoiding_vertex(CubeDim dim, Vertex x, Vertex y, Vertex v) {
  require_vertex(dim, x);
  require_vertex(dim, y);
  require_vertex(dim, v);
  require(dim.value() >= 2, "hp_avoiding_vertex needs n >= 2");
  require(x != y && x != v && y != v, "hp_avoiding_vertex needs distinct vertices");
  require(parity(x) == parity(y) && parity(x) != parity(v),
          "hp_avoiding_vertex needs parity(x) = parity(y) != parity(v)");
  std::vector<Vertex> out(dim.vertex_count() - 1);
  detail::ff_path_avoiding(Subcube::whole(dim), x, y, v, out);
  Route r = make_route(dim, std::move(out));
  RouteConstraints c;
  c.endpoints = {{x, y}};
  c.excluded_vertex = v;
  c.max_faulty = 0;
  assert_verified(FaultSet(dim), r, c, "hp_avoiding_vertex");
  return r;
}

std::pair<Route, Route> two_path_partition(CubeDim dim, Vertex p, Vertex q, Vertex r, Vertex s) {
  for (Vertex v : {p, q, r, s}) require_vertex(dim, v);
  require(dim.value() >= 2, "two_path_partition needs n >= 2");
  require(p != q && r != s, "two_path_partition needs distinct vertices");
  require(parity(p) == 0 && parity(q) == 0 && parity(r) == 1 && parity(s) == 1,
          "two_path_partition needs parity(p) = parity(q) = 0 and parity(r) = parity(s) = 1");
  std::vector<Vertex> out(dim.vertex_count());
  const std::size_t len = detail::ff_two_paths(Subcube::whole(dim), p, r, q, s, out);
  Route first = make_route(dim, std::vector<Vertex>(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(len)));
  Route second = make_route(dim, std::vector<Vertex>(out.begin() + static_cast<std::ptrdiff_t>(len), out.end()));
  const auto v = verify_partition(FaultSet(dim), first, second, {p, r}, {q, s});
  if (!v.ok) throw std::logic_error("two_path_partition produced an invalid partition");
  return {std::move(first), std::move(second)};
}

Route hp_through_edge(CubeDim dim, Vertex x, Vertex y, const Edge& e) {
  require_vertex(dim, x);
  require_vertex(dim, y);
  check_edge(dim, e);
  require(parity(x) != parity(y), "hp_through_edge needs endpoints of different parity");
  require(!(e.touches(x) && e.touches(y)), "hp_through_edge: e must differ from (x, y)");
  require(dim.value() >= 2, "hp_through_edge needs n >= 2");
  std::vector<Vertex> out(dim.vertex_count());
  detail::ff_path_through(Subcube::whole(dim), x, y, e, out);
  Route route = make_route(dim, std::move(out));
  RouteConstraints c;
  c.endpoints = {{x, y}};
  c.max_faulty = 0;
  c.required_edge = e;
  assert_verified(FaultSet(dim), route, c, "hp_through_edge");
  return route;
}

}  // namespace hyperham
