#include <doctest.h>

#include "hyperham/oracle.hpp"
#include "hyperham/traps.hpp"
#include "support.hpp"

using namespace hyperham;

namespace {

FaultSet claw_q3() { return ref::faults(3, {{0b001, 1}, {0b010, 2}, {0b100, 0}}); }

bool oracle_cycle(const FaultSet& f) {
  SearchConstraints c;
  c.closed = true;
  return oracle_exists(f, c);
}

}  // namespace

TEST_CASE("SCDHW detection") {
  const auto scd = detect_scdhw(ref::q4_scdhw());
  REQUIRE(scd);
  CHECK(scd->dir == 0);
  CHECK(scd->parity == 0);
  CHECK(scd->witness.size() == 4);
  CHECK(scd->describe(4) == "SCDHW(dir=0,parity=0)");
  CHECK_FALSE(oracle_cycle(ref::q4_scdhw()));

  CHECK_FALSE(detect_scdhw(FaultSet(CubeDim(4))));
  CHECK_FALSE(detect_scdhw(ref::faults(4, {{0b0000, 0}, {0b0110, 0}, {0b1010, 0}})));
  CHECK_THROWS_AS(detect_scdhw(FaultSet(CubeDim(2))), PreconditionViolated);
}

TEST_CASE("DTBCE detection") {
  const auto f = ref::q4_dtbce();
  const auto dt = detect_dtbce(f);
  REQUIRE(dt);
  CHECK(dt->dir == 0);
  CHECK(dt->u == 0b0000);
  CHECK(dt->w == 0b0010);
  CHECK(dt->witness.size() == 6);
  CHECK(oracle_cycle(f));
  SearchConstraints c;
  c.endpoints = {{0b0000, 0b0010}};
  CHECK_FALSE(oracle_exists(f, c));

  CHECK_FALSE(detect_dtbce(FaultSet(CubeDim(4))));

  // Healthy edges at 0000 and 0110 share parity: this is an SCDHW on parity 1.
  std::vector<Edge> e;
  for (Vertex v = 0; v < 16; v += 2) {
    if (v != 0b0000 && v != 0b0110) e.push_back({v, 0});
  }
  const auto same = ref::faults(4, e);
  CHECK_FALSE(detect_dtbce(same));
  const auto scd = detect_scdhw(same);
  REQUIRE(scd);
  CHECK(scd->dir == 0);
  CHECK(scd->parity == 1);
}

TEST_CASE("claw detection in Q3") {
  const auto claw = detect_claw(claw_q3());
  REQUIRE(claw);
  CHECK(claw->center == 0b000);
  CHECK(claw->witness.size() == 3);
  CHECK_FALSE(oracle_cycle(claw_q3()));
  CHECK_FALSE(detect_claw(FaultSet(CubeDim(3))));
  CHECK_FALSE(detect_claw(ref::faults(3, {{0b001, 1}, {0b010, 2}})));
  CHECK_THROWS_AS(detect_claw(FaultSet(CubeDim(4))), DimensionError);
}

TEST_CASE("diagnose verdicts") {
  const auto clean = diagnose(FaultSet(CubeDim(4)));
  CHECK(clean.hamiltonian.yes);
  CHECK(clean.laceable.yes);

  const auto scd = diagnose(ref::q4_scdhw());
  CHECK_FALSE(scd.hamiltonian.yes);
  CHECK_FALSE(scd.laceable.yes);
  REQUIRE(scd.hamiltonian.certificate);
  CHECK(scd.hamiltonian.certificate->kind == TrapKind::Scdhw);
  REQUIRE(scd.subcube_dhw);
  CHECK(scd.subcube_dhw->kind == TrapKind::SubcubeDhw);

  const auto dt = diagnose(ref::q4_dtbce());
  CHECK(dt.hamiltonian.yes);
  CHECK_FALSE(dt.laceable.yes);
  CHECK(dt.laceable.certificate->kind == TrapKind::Dtbce);

  // Both edges are parity-0 crossings of direction 0, so this is an SCDHW and
  // the oracle finds no cycle.
  const auto parallel = ref::faults(3, {{0b000, 0}, {0b110, 0}});
  const auto q3s = diagnose(parallel);
  SearchConstraints closed;
  closed.closed = true;
  CHECK_FALSE(oracle_exists(parallel, closed));
  CHECK_FALSE(q3s.hamiltonian.yes);
  CHECK(q3s.hamiltonian.certificate->kind == TrapKind::Scdhw);
  CHECK_FALSE(q3s.laceable.yes);

  const auto f = ref::faults(3, {{0b000, 0}, {0b011, 2}});
  const auto q3 = diagnose(f);
  CHECK(oracle_exists(f, closed));
  CHECK(q3.hamiltonian.yes);
  CHECK_FALSE(q3.laceable.yes);
  SearchConstraints c;
  bool all_pairs = true;
  for (Vertex a = 0; a < 8; ++a) {
    for (Vertex b = 0; b < 8; ++b) {
      if (parity(a) == parity(b)) continue;
      c.endpoints = {{a, b}};
      all_pairs = all_pairs && oracle_exists(f, c);
    }
  }
  CHECK_FALSE(all_pairs);
}

TEST_CASE("diagnosis report format") {
  const std::string r = format_diagnosis(diagnose(ref::q4_dtbce()));
  CHECK(r.find("dimension 0: healthy0=1 healthy1=1\n") == 0);
  CHECK(r.find("hamiltonian: yes\n") != std::string::npos);
  CHECK(r.find("laceable: no DTBCE(dir=0,u=0000,w=0010)\n") != std::string::npos);
}

TEST_CASE("endpoint feasibility") {
  CHECK(hp_feasibility(FaultSet(CubeDim(4)), 0b0000, 0b0001).status == Feasibility::Constructible);
  CHECK(hp_feasibility(FaultSet(CubeDim(4)), 0b0000, 0b0011).status == Feasibility::Impossible);
  const auto dt = ref::q4_dtbce();
  CHECK(hp_feasibility(dt, 0b0000, 0b0010).status == Feasibility::Impossible);
  CHECK(hp_feasibility(dt, 0b0011, 0b0001).status == Feasibility::Impossible);
  CHECK(hp_feasibility(dt, 0b0000, 0b0001).status == Feasibility::Unknown);
  // Under the SCDHW, a path must run from a parity-0 vertex with bit 0 clear
  // to a parity-1 vertex with bit 0 set.
  const auto scd = ref::q4_scdhw();
  CHECK(hp_feasibility(scd, 0b0001, 0b0010).status == Feasibility::Impossible);
  const auto ok = hp_feasibility(scd, 0b0000, 0b0111);
  CHECK(ok.status == Feasibility::Unknown);
}

TEST_CASE("trap-freeness matches the two detectors on every Q4 matching sample") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    std::vector<Edge> edges;
    std::vector<bool> used(16, false);
    const int want = static_cast<int>(rng() % 9);
    for (int t = 0; t < 200 && static_cast<int>(edges.size()) < want; ++t) {
      const Vertex v = static_cast<Vertex>(rng() % 16);
      const int d = static_cast<int>(rng() % 4);
      const Vertex u = flip(v, d);
      if (used[u] || used[v]) continue;
      used[u] = used[v] = true;
      edges.push_back(edge_between(u, v));
    }
    const auto f = ref::faults(4, edges);
    const bool detectors = !ref::scdhw_by_definition(f) && !ref::dtbce_by_definition(f);
    CHECK(trap_free(f) == detectors);
    CHECK(detect_scdhw(f).has_value() == ref::scdhw_by_definition(f));
    CHECK(detect_dtbce(f).has_value() == ref::dtbce_by_definition(f));
  }
}
