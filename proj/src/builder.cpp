#include "hyperham/builder.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "base_cases.hpp"
#include "engine.hpp"
#include "hyperham/classical.hpp"
#include "hyperham/oracle.hpp"
#include "hyperham/traps.hpp"

namespace hyperham {

namespace {

struct Inner {
  std::size_t count = 0;
  Edge first{};
};

/// Faulty edges with both endpoints in sub.
Inner inner_faults(const FaultSet& faults, const Subcube& sub) {
  Inner in;
  sub.for_each([&](Vertex v) {
    const auto d = faults.raw_fault_dir(v);
    if (d != FaultSet::kNoFault && sub.is_free(d) && !bit(v, d)) {
      if (in.count++ == 0) in.first = Edge{v, d};
    }
  });
  return in;
}

/// La2's requirement on the faults of a subcube with endpoints a, b.
bool la2_ok(const Inner& in, Vertex a, Vertex b) {
  return in.count >= 2 || (in.count == 1 && !(in.first.touches(a) && in.first.touches(b)));
}

template <class Reject>
std::optional<Vertex> find_lowest(const Subcube& sub, int par, Reject&& reject) {
  Vertex s = 0;
  for (;;) {
    const Vertex v = sub.fixed | s;
    if (parity(v) == par && !reject(v)) return v;
    if (s == sub.free_mask) break;
    s = (s - sub.free_mask) & sub.free_mask;
  }
  return std::nullopt;
}

template <class Reject>
Vertex pick(const Subcube& sub, int par, Reject&& reject) {
  if (auto v = find_lowest(sub, par, reject)) return *v;
  throw std::logic_error("builder: no admissible vertex for a case choice");
}

/// Opens a gap of h slots at pos in out[0..2h) by shifting out[pos..h) to the end.
void open_gap(std::span<Vertex> out, std::size_t h, std::size_t pos) {
  std::move_backward(out.begin() + static_cast<std::ptrdiff_t>(pos), out.begin() + static_cast<std::ptrdiff_t>(h),
                     out.begin() + static_cast<std::ptrdiff_t>(2 * h));
}

Edge cross(Vertex v, int m) { return Edge{bit(v, m) ? flip(v, m) : v, m}; }

void record(BuildTrace* trace, int depth, const Subcube& sub, int m, const char* label, std::vector<Edge> crossing,
            Vertex a, Vertex b, bool one_fault) {
  if (!trace) return;
  trace->steps.push_back(TraceStep{depth, sub, m, label, std::move(crossing), a, b, one_fault});
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionViolated(what);
}

void require_no_trap(const FaultSet& faults, const char* op) {
  const int n = faults.n();
  if (auto c = detect_scdhw(faults)) throw PreconditionViolated(std::string(op) + ": fault set has " + c->describe(n));
  if (auto c = detect_dtbce(faults)) throw PreconditionViolated(std::string(op) + ": fault set has " + c->describe(n));
}

void check_endpoints(const FaultSet& faults, Vertex a, Vertex b, const char* op) {
  const CubeDim dim = faults.dim();
  if (!dim.contains(a) || !dim.contains(b)) throw EdgeOutOfRange(std::string(op) + ": endpoint out of range");
  require(faults.n() >= 4, std::string(op) + " needs n >= 4");
  require(parity(a) != parity(b), std::string(op) + " needs endpoints of different parity");
}

void assert_verified(const FaultSet& faults, const Route& r, const RouteConstraints& c, const char* op) {
  const auto v = verify_route(faults, r, c);
  if (!v.ok) {
    std::string msg = std::string(op) + " produced an invalid route:";
    for (const auto& s : v.violations) msg += " " + s + ";";
    throw std::logic_error(msg);
  }
}

}  // namespace

namespace detail {

void la1(const FaultSet& faults, const Subcube& sub, Vertex a, Vertex b, std::span<Vertex> out, BuildTrace* trace,
         int depth) {
  const Inner in = inner_faults(faults, sub);
  if (in.count == 0 || (in.count == 1 && in.first.touches(a) && in.first.touches(b))) {
    record(trace, depth, sub, -1, "Fault-free", {}, a, b, false);
    ff_path(sub, a, b, out);
    return;
  }
  if (sub.dim() <= kBaseDim) {
    record(trace, depth, sub, -1, "Base", {}, a, b, false);
    if (!small_path(&faults, sub, a, b, 0, out)) throw std::logic_error("builder: base search found no path");
    return;
  }
  const int m = select_partition_dimension(faults, sub);
  const Subcube near = sub.split(m, bit(a, m));
  const Subcube far = sub.split(m, !bit(a, m));
  const std::size_t h = near.size();
  const int pa = parity(a);
  auto healthy = [&](Vertex v) { return !faults.is_faulty(v, m); };
  auto faulty = [&](Vertex v) { return faults.is_faulty(v, m); };

  if (bit(b, m) != bit(a, m)) {
    const Vertex u = pick(near, 1 - pa, faulty);
    record(trace, depth, sub, m, "Case 1", {cross(u, m)}, a, b, false);
    la1(faults, near, a, u, out.first(h), trace, depth + 1);
    la1(faults, far, flip(u, m), b, out.subspan(h), trace, depth + 1);
    return;
  }

  const Inner nin = inner_faults(faults, near);
  if (la2_ok(nin, a, b)) {
    la2(faults, near, a, b, out.first(h), trace, depth + 1);
    std::size_t i = 0;
    while (!faults.is_faulty(edge_between(out[i], out[i + 1]))) ++i;
    const Vertex v = out[i];
    const Vertex w = out[i + 1];
    record(trace, depth, sub, m, "Case 2 / Subcase 2.1", {cross(v, m), cross(w, m)}, a, b, false);
    open_gap(out, h, i + 1);
    la1(faults, far, flip(v, m), flip(w, m), out.subspan(i + 1, h), trace, depth + 1);
    return;
  }

  // Subcase 2.2: x has B's parity, y has A's parity, both with healthy crossings.
  std::optional<Vertex> x, y;
  for (Vertex s = 0;; s = (s - near.free_mask) & near.free_mask) {
    const Vertex cx = near.fixed | s;
    if (parity(cx) != pa && healthy(cx)) {
      y = find_lowest(near, pa, [&](Vertex v) { return faulty(v) || (cx == b && v == a); });
      if (y) {
        x = cx;
        break;
      }
    }
    if (s == near.free_mask) break;
  }
  if (!x) throw std::logic_error("builder: Subcase 2.2 found no crossing pair");
  record(trace, depth, sub, m, "Case 2 / Subcase 2.2", {cross(*x, m), cross(*y, m)}, a, b, false);
  if (*y == a) {
    out[0] = a;
    la1(faults, far, flip(a, m), flip(*x, m), out.subspan(1, h), trace, depth + 1);
    ff_path_avoiding(near, *x, b, a, out.subspan(1 + h));
  } else if (*x == b) {
    ff_path_avoiding(near, a, *y, b, out.first(h - 1));
    la1(faults, far, flip(*y, m), flip(b, m), out.subspan(h - 1, h), trace, depth + 1);
    out[2 * h - 1] = b;
  } else {
    const std::size_t l = ff_two_paths(near, a, *x, *y, b, out.first(h));
    open_gap(out, h, l);
    la1(faults, far, flip(*x, m), flip(*y, m), out.subspan(l, h), trace, depth + 1);
  }
}

void la2(const FaultSet& faults, const Subcube& sub, Vertex a, Vertex b, std::span<Vertex> out, BuildTrace* trace,
         int depth) {
  const Inner in = inner_faults(faults, sub);
  if (!la2_ok(in, a, b)) throw std::logic_error("builder: one-fault path requested without a usable fault");
  if (sub.dim() <= kBaseDim) {
    record(trace, depth, sub, -1, "Base", {}, a, b, true);
    if (!small_path(&faults, sub, a, b, 1, out)) throw std::logic_error("builder: base search found no one-fault path");
    return;
  }
  if (in.count == 1) {
    record(trace, depth, sub, -1, "Single fault", {in.first}, a, b, true);
    ff_path_through(sub, a, b, in.first, out);
    return;
  }
  const int m = select_partition_dimension(faults, sub);
  const Subcube near = sub.split(m, bit(a, m));
  const Subcube far = sub.split(m, !bit(a, m));
  const std::size_t h = near.size();
  const int pa = parity(a);
  auto healthy = [&](Vertex v) { return !faults.is_faulty(v, m); };
  auto faulty = [&](Vertex v) { return faults.is_faulty(v, m); };

  if (bit(b, m) != bit(a, m)) {
    if (auto u = find_lowest(near, 1 - pa, healthy)) {
      record(trace, depth, sub, m, "Case 3 / Subcase 3.1", {cross(*u, m)}, a, b, true);
      la1(faults, near, a, *u, out.first(h), trace, depth + 1);
      la1(faults, far, flip(*u, m), b, out.subspan(h), trace, depth + 1);
      return;
    }
    // Every crossing at a vertex of parity != parity(a) in the near half is healthy.
    const Inner nin = inner_faults(faults, near);
    if (nin.count > 0) {
      const Vertex u = pick(near, 1 - pa, [&](Vertex v) { return !la2_ok(nin, a, v); });
      record(trace, depth, sub, m, "Case 3 / Subcase 3.2", {cross(u, m)}, a, b, true);
      la2(faults, near, a, u, out.first(h), trace, depth + 1);
      la1(faults, far, flip(u, m), b, out.subspan(h), trace, depth + 1);
      return;
    }
    const Inner fin = inner_faults(faults, far);
    if (fin.count > 0) {
      const Vertex u = pick(far, pa, [&](Vertex v) { return !la2_ok(fin, b, v); });
      record(trace, depth, sub, m, "Case 3 / Subcase 3.2", {cross(u, m)}, a, b, true);
      la1(faults, near, a, flip(u, m), out.first(h), trace, depth + 1);
      la2(faults, far, b, u, out.subspan(h), trace, depth + 1);
      std::reverse(out.begin() + static_cast<std::ptrdiff_t>(h), out.end());
      return;
    }
    // Subcase 3.3: all faults cross, at vertices of A's parity.
    const Vertex x = pick(near, pa, [&](Vertex v) { return v == a || healthy(v); });
    const Vertex y = pick(near, 1 - pa, [](Vertex) { return false; });
    const Vertex z = pick(near, 1 - pa, [&](Vertex v) { return v == y; });
    record(trace, depth, sub, m, "Case 3 / Subcase 3.3", {cross(x, m), cross(y, m), cross(z, m)}, a, b, true);
    std::vector<Vertex> nbuf(h);
    const std::size_t l1 = ff_two_paths(near, a, y, x, z, nbuf);
    auto put = [pos = std::size_t{0}, &out](auto first, auto last) mutable {
      pos = static_cast<std::size_t>(std::copy(first, last, out.begin() + static_cast<std::ptrdiff_t>(pos)) - out.begin());
    };
    const auto split1 = nbuf.begin() + static_cast<std::ptrdiff_t>(l1);
    if (flip(x, m) != b) {
      std::vector<Vertex> fbuf(h);
      const std::size_t l2 = ff_two_paths(far, flip(z, m), b, flip(y, m), flip(x, m), fbuf);
      const auto split2 = fbuf.begin() + static_cast<std::ptrdiff_t>(l2);
      put(nbuf.begin(), split1);
      put(split2, fbuf.end());
      put(split1, nbuf.end());
      put(fbuf.begin(), split2);
    } else {
      std::vector<Vertex> fbuf(h - 1);
      ff_path_avoiding(far, flip(y, m), flip(z, m), b, fbuf);
      put(nbuf.begin(), split1);
      put(fbuf.begin(), fbuf.end());
      put(nbuf.rbegin(), std::make_reverse_iterator(split1));
      out[2 * h - 1] = b;
    }
    return;
  }

  if (find_lowest(near, 0, healthy) || find_lowest(near, 1, healthy)) {
    la1(faults, near, a, b, out.first(h), trace, depth + 1);
    std::size_t i = 0;
    while (faulty(out[i]) == faulty(out[i + 1])) ++i;
    const Vertex v = out[i];
    const Vertex w = out[i + 1];
    record(trace, depth, sub, m, "Case 4 / Subcase 4.1", {cross(v, m), cross(w, m)}, a, b, true);
    open_gap(out, h, i + 1);
    la1(faults, far, flip(v, m), flip(w, m), out.subspan(i + 1, h), trace, depth + 1);
    return;
  }
  const Inner nin = inner_faults(faults, near);
  if (la2_ok(nin, a, b)) {
    la2(faults, near, a, b, out.first(h), trace, depth + 1);
    std::size_t i = 0;
    while (faults.is_faulty(edge_between(out[i], out[i + 1]))) ++i;
    const Vertex v = out[i];
    const Vertex w = out[i + 1];
    record(trace, depth, sub, m, "Case 4 / Subcase 4.2", {cross(v, m), cross(w, m)}, a, b, true);
    open_gap(out, h, i + 1);
    la1(faults, far, flip(v, m), flip(w, m), out.subspan(i + 1, h), trace, depth + 1);
    return;
  }
  // Subcase 4.3: the remaining faults lie in the far half.
  la1(faults, near, a, b, out.first(h), trace, depth + 1);
  const Inner fin = inner_faults(faults, far);
  std::size_t i = 0;
  while (!la2_ok(fin, flip(out[i], m), flip(out[i + 1], m))) ++i;
  const Vertex v = out[i];
  const Vertex w = out[i + 1];
  record(trace, depth, sub, m, "Case 4 / Subcase 4.3", {cross(v, m), cross(w, m)}, a, b, true);
  open_gap(out, h, i + 1);
  la2(faults, far, flip(v, m), flip(w, m), out.subspan(i + 1, h), trace, depth + 1);
}

}  // namespace detail

std::string BuildTrace::format(int n) const {
  std::ostringstream s;
  for (const auto& st : steps) {
    s << std::string(static_cast<std::size_t>(2 * st.depth), ' ') << '[';
    for (int i = n - 1; i >= 0; --i) s << (st.sub.is_free(i) ? '*' : (bit(st.sub.fixed, i) ? '1' : '0'));
    s << "] " << (st.one_fault ? "La2 " : "La1 ") << to_binary(st.from, n) << "->" << to_binary(st.to, n) << ' '
      << st.case_label;
    if (st.split_dir >= 0) s << " split=" << st.split_dir;
    for (const auto& e : st.crossing) s << ' ' << format_edge(e, n);
    s << '\n';
  }
  return s.str();
}

int select_partition_dimension(const FaultSet& faults, const Subcube& sub) {
  for (Vertex f = sub.free_mask; f != 0; f &= f - 1) {
    const int m = std::countr_zero(f);
    if (trap_free(faults, sub.split(m, 0)) && trap_free(faults, sub.split(m, 1))) return m;
  }
  throw NoDimensionFound("no direction splits the subcube into two trap-free halves");
}

int select_partition_dimension(const FaultSet& faults) {
  require(faults.n() >= 5, "select_partition_dimension needs n >= 5");
  require_no_trap(faults, "select_partition_dimension");
  return select_partition_dimension(faults, Subcube::whole(faults.dim()));
}

bool one_fault_precondition(const FaultSet& faults, Vertex a, Vertex b) {
  if (faults.size() >= 2) return true;
  if (faults.size() == 0) return false;
  return !(faults.edges()[0].touches(a) && faults.edges()[0].touches(b));
}

Route build_hp(const FaultSet& faults, Vertex a, Vertex b, BuildTrace* trace) {
  check_endpoints(faults, a, b, "build_hp");
  require_no_trap(faults, "build_hp");
  Route r{faults.dim(), std::vector<Vertex>(faults.dim().vertex_count()), false};
  detail::la1(faults, Subcube::whole(faults.dim()), a, b, r.vertices, trace, 0);
  RouteConstraints c;
  c.endpoints = {{a, b}};
  c.faulty_exactly = 0;
  assert_verified(faults, r, c, "build_hp");
  return r;
}

Route build_hp_one_fault(const FaultSet& faults, Vertex a, Vertex b, BuildTrace* trace) {
  check_endpoints(faults, a, b, "build_hp_one_fault");
  require_no_trap(faults, "build_hp_one_fault");
  require(one_fault_precondition(faults, a, b),
          "build_hp_one_fault needs |F| >= 2, or |F| = 1 with (A, B) not the faulty edge");
  Route r{faults.dim(), std::vector<Vertex>(faults.dim().vertex_count()), false};
  detail::la2(faults, Subcube::whole(faults.dim()), a, b, r.vertices, trace, 0);
  RouteConstraints c;
  c.endpoints = {{a, b}};
  c.faulty_exactly = 1;
  assert_verified(faults, r, c, "build_hp_one_fault");
  return r;
}

Route build_hc(const FaultSet& faults, BuildTrace* trace) {
  const CubeDim dim = faults.dim();
  const int n = dim.value();
  const auto whole = Subcube::whole(dim);
  Route r{dim, {}, true};
  RouteConstraints c;
  c.closed = true;
  c.faulty_exactly = 0;

  if (faults.empty() && n >= 2) {
    record(trace, 0, whole, -1, "Gray code", {}, 0, 0, false);
    r.vertices = gray_code(whole);
    assert_verified(faults, r, c, "build_hc");
    return r;
  }
  require(n >= 3, "build_hc needs n >= 3 with faults present");
  if (auto scd = detect_scdhw(faults)) throw NotHamiltonian("not Hamiltonian: " + scd->describe(n));
  if (n == 3) {
    if (auto claw = detect_claw(faults)) throw NotHamiltonian("not Hamiltonian: " + claw->describe(n));
    record(trace, 0, whole, -1, "Base", {}, 0, 0, false);
    SearchConstraints sc;
    sc.closed = true;
    auto found = oracle_find(faults, sc);
    if (!found) throw std::logic_error("build_hc: Q3 without trap has no cycle");
    assert_verified(faults, *found, c, "build_hc");
    return *found;
  }

  r.vertices.resize(dim.vertex_count());
  std::span<Vertex> out(r.vertices);
  const std::size_t h = out.size() / 2;
  if (auto dt = detect_dtbce(faults)) {
    // Both halves are free of faults apart from a possible (u, w): join an
    // HP u -> w of the 0-side with an HP w' -> u' of the 1-side.
    const int d = dt->dir;
    record(trace, 0, whole, d, "DTBCE assembly", {Edge{dt->u, d}, Edge{dt->w, d}}, dt->u, dt->w, false);
    detail::ff_path(whole.split(d, 0), dt->u, dt->w, out.first(h));
    detail::ff_path(whole.split(d, 1), flip(dt->w, d), flip(dt->u, d), out.subspan(h));
  } else {
    int d = 0;
    while (faults.is_faulty(0, d)) ++d;
    const Vertex b = flip(0, d);
    record(trace, 0, whole, -1, "Closed path", {Edge{0, d}}, 0, b, false);
    detail::la1(faults, whole, 0, b, out, trace, 1);
  }
  assert_verified(faults, r, c, "build_hc");
  return r;
}

}  // namespace hyperham
