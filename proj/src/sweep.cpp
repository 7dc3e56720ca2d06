#include "hyperham/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "hyperham/builder.hpp"
#include "hyperham/oracle.hpp"
#include "hyperham/traps.hpp"

namespace hyperham {

Vertex Automorphism::apply(Vertex v) const noexcept {
  Vertex out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (bit(v, static_cast<int>(i))) out |= Vertex{1} << perm[i];
  }
  return out ^ flip;
}

Edge Automorphism::apply(const Edge& e) const { return edge_between(apply(e.low), apply(e.high())); }

std::vector<Automorphism> automorphisms(CubeDim dim) {
  const int n = dim.value();
  if (n > kMaxSweepDim) throw DimensionTooLarge("automorphism enumeration supports n <= 6");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Automorphism> out;
  do {
    for (Vertex f = 0; f < dim.vertex_count(); ++f) out.push_back({perm, f});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

FaultSet apply(const Automorphism& a, const FaultSet& faults) {
  std::vector<Edge> edges;
  edges.reserve(faults.size());
  for (const Edge& e : faults.edges()) edges.push_back(a.apply(e));
  return make_fault_set(faults.dim(), edges);
}

std::uint32_t edge_index(CubeDim dim, const Edge& e) {
  check_edge(dim, e);
  const Vertex below = e.low & ((Vertex{1} << e.dir) - 1);
  const Vertex compressed = ((e.low >> (e.dir + 1)) << e.dir) | below;
  return (static_cast<std::uint32_t>(e.dir) << (dim.value() - 1)) | compressed;
}

Edge edge_at(CubeDim dim, std::uint32_t index) {
  const int n = dim.value();
  const int d = static_cast<int>(index >> (n - 1));
  const Vertex r = index & ((Vertex{1} << (n - 1)) - 1);
  const Vertex low = ((r >> d) << (d + 1)) | (r & ((Vertex{1} << d) - 1));
  return Edge{low, d};
}

namespace {

void require_canonical_dim(CubeDim dim) {
  if (dim.value() > kMaxCanonicalDim) throw DimensionTooLarge("canonical forms are supported for n <= 4");
}

/// Per automorphism, the induced permutation of edge indices.
struct EdgeMaps {
  std::vector<std::array<std::uint8_t, 32>> maps;
};

const EdgeMaps& edge_maps(CubeDim dim) {
  static const std::array<EdgeMaps, kMaxCanonicalDim + 1> all = [] {
    std::array<EdgeMaps, kMaxCanonicalDim + 1> t;
    for (int n = 1; n <= kMaxCanonicalDim; ++n) {
      const CubeDim d(n);
      for (const auto& a : automorphisms(d)) {
        std::array<std::uint8_t, 32> m{};
        for (std::uint32_t i = 0; i < d.edge_count(); ++i) {
          m[i] = static_cast<std::uint8_t>(edge_index(d, a.apply(edge_at(d, i))));
        }
        t[static_cast<std::size_t>(n)].maps.push_back(m);
      }
    }
    return t;
  }();
  return all[static_cast<std::size_t>(dim.value())];
}

std::uint64_t image_mask(const std::array<std::uint8_t, 32>& map, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (; mask != 0; mask &= mask - 1) out |= std::uint64_t{1} << map[static_cast<std::size_t>(std::countr_zero(mask))];
  return out;
}

std::uint64_t canonical_mask(CubeDim dim, std::uint64_t mask) {
  std::uint64_t best = mask;
  for (const auto& m : edge_maps(dim).maps) best = std::min(best, image_mask(m, mask));
  return best;
}

FaultSet from_mask(CubeDim dim, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (; mask != 0; mask &= mask - 1) edges.push_back(edge_at(dim, static_cast<std::uint32_t>(std::countr_zero(mask))));
  return make_fault_set(dim, edges);
}

/// Visits the edge mask of every matching.
template <class Visit>
void matchings_dfs(CubeDim dim, std::uint32_t start, std::uint64_t mask, std::uint32_t used, Visit& visit) {
  visit(mask);
  for (std::uint32_t i = start; i < dim.edge_count(); ++i) {
    const Edge e = edge_at(dim, i);
    const std::uint32_t ends = (1U << e.low) | (1U << e.high());
    if (used & ends) continue;
    matchings_dfs(dim, i + 1, mask | (std::uint64_t{1} << i), used | ends, visit);
  }
}

}  // namespace

std::uint64_t edge_mask(const FaultSet& faults) {
  require_canonical_dim(faults.dim());
  std::uint64_t mask = 0;
  for (const Edge& e : faults.edges()) mask |= std::uint64_t{1} << edge_index(faults.dim(), e);
  return mask;
}

FaultSet canonicalize(const FaultSet& faults) {
  require_canonical_dim(faults.dim());
  return from_mask(faults.dim(), canonical_mask(faults.dim(), edge_mask(faults)));
}

void enumerate_matchings(CubeDim dim, const std::function<void(const CanonicalFaultSet&)>& visit) {
  for (auto& c : matching_orbits(dim)) visit(c);
}

std::vector<CanonicalFaultSet> matching_orbits(CubeDim dim) {
  require_canonical_dim(dim);
  const auto& maps = edge_maps(dim).maps;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> reps;  // (mask, orbit size)
  auto visit = [&](std::uint64_t mask) {
    std::uint64_t stabilizer = 0;
    for (const auto& m : maps) {
      const std::uint64_t img = image_mask(m, mask);
      if (img < mask) return;
      if (img == mask) ++stabilizer;
    }
    reps.emplace_back(mask, maps.size() / stabilizer);
  };
  matchings_dfs(dim, 0, 0, 0, visit);
  std::sort(reps.begin(), reps.end());
  std::vector<CanonicalFaultSet> out;
  out.reserve(reps.size());
  for (auto [mask, orbit] : reps) out.push_back({from_mask(dim, mask), orbit});
  return out;
}

void enumerate_all_matchings(CubeDim dim, const std::function<void(const FaultSet&)>& visit) {
  if (dim.value() > 3) throw DimensionTooLarge("unreduced matching enumeration supports n <= 3");
  auto v = [&](std::uint64_t mask) { visit(from_mask(dim, mask)); };
  matchings_dfs(dim, 0, 0, 0, v);
}

std::uint64_t count_matchings_brute_force(CubeDim dim) {
  if (dim.value() > 3) throw DimensionTooLarge("brute-force matching count supports n <= 3");
  const int n = dim.value();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < dim.vertex_count(); ++v) {
    for (int d = 0; d < n; ++d) {
      if (!bit(v, d)) edges.emplace_back(v, flip(v, d));
    }
  }
  std::uint64_t count = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << edges.size()); ++subset) {
    std::uint32_t seen = 0;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!((subset >> i) & 1)) continue;
      const std::uint32_t ends = (1U << edges[i].first) | (1U << edges[i].second);
      ok = (seen & ends) == 0;
      seen |= ends;
    }
    count += ok ? 1 : 0;
  }
  return count;
}

std::uint64_t count_matchings_dp(CubeDim dim) {
  require_canonical_dim(dim);
  const int n = dim.value();
  const std::uint32_t full = static_cast<std::uint32_t>(dim.vertex_count() == 32 ? 0 : (1ULL << dim.vertex_count()));
  // f[S]: matchings of the subgraph induced by vertex set S.
  std::vector<std::uint64_t> f(full);
  f[0] = 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    const int v = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    std::uint64_t total = f[rest];
    for (int d = 0; d < n; ++d) {
      const std::uint32_t u = 1U << flip(static_cast<Vertex>(v), d);
      if (rest & u) total += f[rest & ~u];
    }
    f[s] = total;
  }
  return f[full - 1];
}

const char* to_string(FaultConstraint c) noexcept {
  switch (c) {
    case FaultConstraint::None:
      return "none";
    case FaultConstraint::NoTrap:
      return "no-trap";
    case FaultConstraint::HasScdhw:
      return "scdhw";
    case FaultConstraint::HasDtbce:
      return "dtbce";
  }
  return "none";
}

namespace {

constexpr int kRestarts = 1000;

/// Adds random disjoint edges until `edges` has `target` entries. False if stuck.
bool fill_random(CubeDim dim, std::vector<Edge>& edges, std::vector<bool>& used, std::size_t target,
                 std::mt19937_64& rng) {
  const int n = dim.value();
  std::uniform_int_distribution<Vertex> vert(0, dim.all_bits());
  std::uniform_int_distribution<int> dir(0, n - 1);
  std::size_t attempts = 64 * (target - std::min(target, edges.size())) + 1000;
  while (edges.size() < target && attempts-- > 0) {
    const Vertex v = vert(rng);
    const int d = dir(rng);
    const Vertex u = flip(v, d);
    if (used[v] || used[u]) continue;
    used[v] = used[u] = true;
    edges.push_back(Edge{std::min(u, v), d});
  }
  if (edges.size() == target) return true;
  // Dense requests: finish greedily over the remaining free edges in random order.
  std::vector<Edge> free_edges;
  for (Vertex v = 0; v < dim.vertex_count(); ++v) {
    if (used[v]) continue;
    for (int d = 0; d < n; ++d) {
      if (!bit(v, d) && !used[flip(v, d)]) free_edges.push_back(Edge{v, d});
    }
  }
  std::shuffle(free_edges.begin(), free_edges.end(), rng);
  for (const Edge& e : free_edges) {
    if (edges.size() == target) break;
    if (used[e.low] || used[e.high()]) continue;
    used[e.low] = used[e.high()] = true;
    edges.push_back(e);
  }
  return edges.size() == target;
}

[[noreturn]] void unsatisfiable(CubeDim dim, std::size_t size, FaultConstraint c) {
  throw ConstraintUnsatisfiable("no " + std::string(to_string(c)) + " matching of size " + std::to_string(size) +
                                " found in Q_" + std::to_string(dim.value()));
}

}  // namespace

FaultSet random_disjoint_faults(CubeDim dim, std::size_t size, FaultConstraint constraint, std::mt19937_64& rng) {
  const int n = dim.value();
  if (size > dim.vertex_count() / 2) unsatisfiable(dim, size, constraint);
  const std::size_t per = n >= 2 ? std::size_t{1} << (n - 2) : 0;

  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    std::vector<Edge> edges;
    std::vector<bool> used(dim.vertex_count(), false);
    auto take = [&](const Edge& e) {
      used[e.low] = used[e.high()] = true;
      edges.push_back(e);
    };
    switch (constraint) {
      case FaultConstraint::None:
      case FaultConstraint::NoTrap:
        break;
      case FaultConstraint::HasScdhw: {
        if (n < 2 || size < per) unsatisfiable(dim, size, constraint);
        const int d = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const int p = std::uniform_int_distribution<int>(0, 1)(rng);
        for (Vertex v = 0; v < dim.vertex_count(); ++v) {
          if (!bit(v, d) && parity(v) == p) take(Edge{v, d});
        }
        break;
      }
      case FaultConstraint::HasDtbce: {
        if (n < 3) unsatisfiable(dim, size, constraint);
        const std::size_t base = 2 * per - 2;
        if (size < base || size > base + 2) unsatisfiable(dim, size, constraint);
        const int d = std::uniform_int_distribution<int>(0, n - 1)(rng);
        std::vector<Vertex> even, odd;
        for (Vertex v = 0; v < dim.vertex_count(); ++v) {
          if (!bit(v, d)) (parity(v) == 0 ? even : odd).push_back(v);
        }
        const Vertex u = even[std::uniform_int_distribution<std::size_t>(0, even.size() - 1)(rng)];
        const Vertex w = odd[std::uniform_int_distribution<std::size_t>(0, odd.size() - 1)(rng)];
        for (Vertex v : even) {
          if (v != u) take(Edge{v, d});
        }
        for (Vertex v : odd) {
          if (v != w) take(Edge{v, d});
        }
        // Only (u, w) and its copy across d can be added without breaking the trap.
        if (size > base) {
          if (distance(u, w) != 1) continue;
          const Edge e = edge_between(u, w);
          if (size == base + 1 && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
            take(edge_between(flip(u, d), flip(w, d)));
          } else {
            take(e);
            if (size == base + 2) take(edge_between(flip(u, d), flip(w, d)));
          }
        }
        return make_fault_set(dim, edges);
      }
    }
    if (!fill_random(dim, edges, used, size, rng)) continue;
    FaultSet f = make_fault_set(dim, edges);
    if (constraint == FaultConstraint::NoTrap && (n < 3 || !trap_free(f))) continue;
    return f;
  }
  unsatisfiable(dim, size, constraint);
}

FaultSet random_disjoint_faults(CubeDim dim, std::size_t size, FaultConstraint constraint, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_disjoint_faults(dim, size, constraint, rng);
}

namespace {

const char* kind_name(TrapKind k) {
  switch (k) {
    case TrapKind::Scdhw:
      return "scdhw";
    case TrapKind::Dtbce:
      return "dtbce";
    case TrapKind::Claw:
      return "claw";
    case TrapKind::SubcubeDhw:
      return "subcube_dhw";
    case TrapKind::TooManyFaults:
      return "many_faults";
  }
  return "unknown";
}

std::string verdict_class(const char* yes, const char* no, const Verdict& v) {
  if (v.yes) return yes;
  return std::string(no) + "_" + (v.certificate ? kind_name(v.certificate->kind) : "uncertified");
}

struct Tally {
  std::map<std::string, std::uint64_t> weighted;
  std::map<std::string, std::uint64_t> reps;
  std::vector<std::pair<std::size_t, Counterexample>> cx;

  void add(const std::string& name, std::uint64_t weight) {
    weighted[name] += weight;
    reps[name] += 1;
  }
  void check(const std::string& name) { reps[name] += 1; }

  void merge(Tally&& o) {
    for (auto& [k, v] : o.weighted) weighted[k] += v;
    for (auto& [k, v] : o.reps) reps[k] += v;
    for (auto& c : o.cx) cx.push_back(std::move(c));
  }
};

class Checker {
 public:
  Checker(const SweepOptions& opt, Tally& t, std::size_t index, const FaultSet& f)
      : opt_(opt), t_(t), index_(index), f_(f), n_(f.n()) {}

  void fail(const std::string& what) { t_.cx.push_back({index_, Counterexample{f_, what}}); }

  std::string pair_name(Vertex a, Vertex b) const { return to_binary(a, n_) + "->" + to_binary(b, n_); }

  template <class Fn>
  void guarded(const std::string& what, Fn&& fn) {
    try {
      fn();
    } catch (const SearchTimeout& e) {
      t_.check("oracle_timeouts");
      fail(what + ": " + e.what());
    } catch (const std::exception& e) {
      fail(what + ": " + e.what());
    }
  }

  bool oracle_closed() {
    t_.check("oracle_queries");
    SearchConstraints c;
    c.closed = true;
    return oracle_exists(f_, c);
  }

  bool oracle_path(Vertex a, Vertex b) {
    t_.check("oracle_queries");
    SearchConstraints c;
    c.endpoints = {{a, b}};
    return oracle_exists(f_, c);
  }

  void check_hc(const Diagnosis& d) {
    guarded("build_hc", [&] {
      try {
        build_hc(f_);
        t_.check("hc_built");
        if (!d.hamiltonian.yes) fail("build_hc returned a cycle for a non-Hamiltonian instance");
      } catch (const NotHamiltonian&) {
        t_.check("hc_refused");
        if (d.hamiltonian.yes) fail("build_hc refused a Hamiltonian instance");
      }
    });
  }

  void check_builds(Vertex a, Vertex b) {
    guarded("build_hp " + pair_name(a, b), [&] {
      build_hp(f_, a, b);
      t_.check("hp_built");
    });
    if (!one_fault_precondition(f_, a, b)) return;
    guarded("build_hp_one_fault " + pair_name(a, b), [&] {
      const Route r = build_hp_one_fault(f_, a, b);
      if (count_faulty_traversals(f_, r) != 1) fail("one-fault path traverses a wrong number of faulty edges");
      t_.check("hp_one_fault_built");
    });
  }

  void check_feasibility(Vertex a, Vertex b, bool exists) {
    const auto feas = hp_feasibility(f_, a, b);
    if (feas.status == Feasibility::Constructible && !exists) {
      fail("hp_feasibility says constructible but no path " + pair_name(a, b));
    }
    if (feas.status == Feasibility::Impossible && exists) {
      fail("hp_feasibility says impossible but a path exists " + pair_name(a, b));
    }
  }

  /// Exhaustive-mode check of one matching with the given orbit weight.
  void exhaustive(std::uint64_t weight) {
    t_.add("matchings", weight);
    if (n_ < 3) return;
    guarded("diagnose", [&] {
      const Diagnosis d = diagnose(f_);
      t_.add(verdict_class("hamiltonian", "not_hamiltonian", d.hamiltonian), weight);
      t_.add(verdict_class("laceable", "not_laceable", d.laceable), weight);
      if (d.hamiltonian.yes != oracle_closed()) fail("diagnose and oracle disagree on Hamiltonicity");

      bool laceable = true;
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (Vertex a = 0; a < f_.dim().vertex_count(); ++a) {
        for (Vertex b = a + 1; b < f_.dim().vertex_count(); ++b) {
          if (parity(a) == parity(b)) continue;
          const bool exists = oracle_path(a, b);
          laceable = laceable && exists;
          check_feasibility(a, b, exists);
          pairs.emplace_back(a, b);
        }
      }
      if (d.laceable.yes != laceable) fail("diagnose and oracle disagree on laceability");
      check_hc(d);

      if (n_ >= 4 && opt_.check_builds && d.laceable.yes) {
        if (opt_.sample_pairs > 0 && opt_.sample_pairs < pairs.size()) {
          std::mt19937_64 rng(opt_.seed ^ (0x9E3779B97F4A7C15ULL * (index_ + 1)));
          std::shuffle(pairs.begin(), pairs.end(), rng);
          pairs.resize(opt_.sample_pairs);
        }
        for (auto [a, b] : pairs) {
          check_builds(a, b);
          check_builds(b, a);
        }
      }
    });
  }

  /// Sampled-mode check; `spot` adds oracle cross-checks.
  void sampled(std::mt19937_64& rng, bool spot) {
    t_.add("samples", 1);
    guarded("diagnose", [&] {
      const Diagnosis d = diagnose(f_);
      t_.add(verdict_class("hamiltonian", "not_hamiltonian", d.hamiltonian), 1);
      t_.add(verdict_class("laceable", "not_laceable", d.laceable), 1);
      if (n_ >= 4 && d.hamiltonian.yes == detect_scdhw(f_).has_value()) {
        fail("diagnose disagrees with detect_scdhw");
      }
      check_hc(d);

      std::uniform_int_distribution<Vertex> vert(0, f_.dim().all_bits());
      const Vertex a = vert(rng);
      Vertex b = vert(rng);
      if (parity(a) == parity(b)) b = flip(b, 0);
      if (n_ >= 4 && opt_.check_builds && d.laceable.yes) {
        check_builds(a, b);
      }
      if (spot) {
        t_.check("oracle_checks");
        if (d.hamiltonian.yes != oracle_closed()) fail("diagnose and oracle disagree on Hamiltonicity");
        check_feasibility(a, b, oracle_path(a, b));
      }
    });
  }

 private:
  const SweepOptions& opt_;
  Tally& t_;
  std::size_t index_;
  const FaultSet& f_;
  int n_;
};

template <class Work>
Tally parallel(std::size_t count, int jobs, Work&& work) {
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  Tally total;
  auto worker = [&] {
    Tally local;
    for (std::size_t i = next++; i < count; i = next++) work(i, local);
    std::lock_guard lock(mu);
    total.merge(std::move(local));
  };
  std::vector<std::thread> threads;
  const int n = std::max(1, jobs);
  for (int j = 1; j < n; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  std::sort(total.cx.begin(), total.cx.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return total;
}

FaultSet sample_instance(CubeDim dim, std::size_t index, std::mt19937_64& rng, Tally& t) {
  const int n = dim.value();
  const std::size_t per = std::size_t{1} << (n - 2);
  FaultConstraint c = FaultConstraint::None;
  std::size_t size = 0;
  switch (index % 10) {
    case 0:
      c = FaultConstraint::HasScdhw;
      size = per + std::uniform_int_distribution<std::size_t>(0, 2)(rng);
      break;
    case 1:
      c = FaultConstraint::HasDtbce;
      size = 2 * per - 2;
      break;
    default:
      size = std::uniform_int_distribution<std::size_t>(0, std::min(per + n, 2 * per))(rng);
  }
  try {
    return random_disjoint_faults(dim, size, c, rng);
  } catch (const ConstraintUnsatisfiable&) {
    t.check("generation_retries");
    return random_disjoint_faults(dim, 0, FaultConstraint::None, rng);
  }
}

}  // namespace

SweepReport run_sweep(const SweepOptions& opt) {
  const CubeDim dim(opt.n);
  SweepReport report;
  report.n = opt.n;
  report.mode = opt.mode;
  report.seed = opt.seed;

  Tally tally;
  if (opt.mode == SweepMode::Exhaustive) {
    if (opt.n > kMaxCanonicalDim) throw DimensionTooLarge("exhaustive sweeps support n <= 4");
    std::vector<CanonicalFaultSet> items;
    if (opt.all_matchings) {
      enumerate_all_matchings(dim, [&](const FaultSet& f) { items.push_back({f, 1}); });
    } else {
      items = matching_orbits(dim);
    }
    tally = parallel(items.size(), opt.jobs, [&](std::size_t i, Tally& t) {
      Checker(opt, t, i, items[i].representative).exhaustive(items[i].orbit_size);
    });
  } else {
    if (opt.n > kMaxSweepDim) throw DimensionTooLarge("sampled sweeps support n <= 6");
    if (opt.n < 3) throw PreconditionViolated("sampled sweeps need n >= 3");
    tally = parallel(opt.samples, opt.jobs, [&](std::size_t i, Tally& t) {
      std::seed_seq seq{opt.seed, static_cast<std::uint64_t>(i)};
      std::mt19937_64 rng(seq);
      const FaultSet f = sample_instance(dim, i, rng, t);
      Checker(opt, t, i, f).sampled(rng, i < opt.oracle_checks);
    });
  }
  report.counts = std::move(tally.weighted);
  report.representative_counts = std::move(tally.reps);
  for (auto& [i, c] : tally.cx) report.counterexamples.push_back(std::move(c));
  return report;
}

std::string SweepReport::format() const {
  std::ostringstream s;
  s << "sweep n=" << n << " mode=" << (mode == SweepMode::Exhaustive ? "exhaustive" : "sampled") << " seed=" << seed
    << '\n';
  for (const auto& [k, v] : counts) s << k << ": " << v << '\n';
  if (mode == SweepMode::Exhaustive) {
    for (const auto& [k, v] : representative_counts) s << "representatives." << k << ": " << v << '\n';
  } else {
    for (const auto& [k, v] : representative_counts) {
      if (!counts.contains(k)) s << k << ": " << v << '\n';
    }
  }
  s << "counterexamples: " << counterexamples.size() << '\n';
  for (const auto& c : counterexamples) {
    s << "# counterexample: " << c.what << '\n' << format_fault_file(c.faults);
  }
  return s.str();
}

std::string SweepReport::format_machine() const {
  std::ostringstream s;
  for (const auto& [k, v] : counts) s << "class=" << k << " count=" << v << '\n';
  for (const auto& [k, v] : representative_counts) {
    if (mode == SweepMode::Exhaustive) {
      s << "class=representatives." << k << " count=" << v << '\n';
    } else if (!counts.contains(k)) {
      s << "class=" << k << " count=" << v << '\n';
    }
  }
  s << "class=counterexamples count=" << counterexamples.size() << '\n';
  return s.str();
}

}  // namespace hyperham
