#include <doctest.h>

#include <random>

#include "hyperham/builder.hpp"
#include "hyperham/oracle.hpp"
#include "hyperham/sweep.hpp"
#include "hyperham/traps.hpp"
#include "support.hpp"

using namespace hyperham;

namespace {

bool half_clean(const FaultSet& f, int m, int side) {
  const auto h = ref::induced_half(f, m, side);
  return !ref::scdhw_by_definition(h) && !ref::dtbce_by_definition(h);
}

Vertex random_vertex(std::mt19937_64& rng, int n) { return static_cast<Vertex>(rng() % (Vertex{1} << n)); }

Vertex opposite_parity(std::mt19937_64& rng, int n, Vertex a) {
  Vertex b = random_vertex(rng, n);
  if (ref::pop(a) % 2 == ref::pop(b) % 2) b = flip(b, static_cast<int>(rng() % n));
  return b;
}

// Q5 faults whose half Q^1_0 carries an SCDHW along direction 2.
FaultSet lifted_half_trap() {
  return ref::faults(5, {{0b00000, 2}, {0b01001, 2}, {0b10001, 2}, {0b11000, 2}});
}

}  // namespace

TEST_CASE("select_partition_dimension examples") {
  CHECK(select_partition_dimension(FaultSet(CubeDim(5))) == 0);

  const auto f = lifted_half_trap();
  REQUIRE_FALSE(ref::scdhw_by_definition(f));
  REQUIRE_FALSE(ref::dtbce_by_definition(f));
  REQUIRE(ref::scdhw_by_definition(ref::induced_half(f, 1, 0)));
  const int m = select_partition_dimension(f);
  CHECK(m != 1);
  CHECK(half_clean(f, m, 0));
  CHECK(half_clean(f, m, 1));

  const auto g = ref::faults(5, {{0b00000, 0}, {0b00101, 1}, {0b11000, 2}});
  const int mg = select_partition_dimension(g);
  CHECK(mg == 0);
  CHECK(half_clean(g, mg, 0));
  CHECK(half_clean(g, mg, 1));

  CHECK_THROWS_AS(select_partition_dimension(FaultSet(CubeDim(4))), PreconditionViolated);
}

TEST_CASE("select_partition_dimension returns the lowest clean direction") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 400; ++i) {
    const int n = 5 + i % 3;
    const auto f = random_disjoint_faults(CubeDim(n), rng() % ((std::size_t{1} << (n - 2)) + n), FaultConstraint::NoTrap, rng);
    const int m = select_partition_dimension(f);
    for (int d = 0; d < m; ++d) CHECK_FALSE((half_clean(f, d, 0) && half_clean(f, d, 1)));
    CHECK(half_clean(f, m, 0));
    CHECK(half_clean(f, m, 1));
  }
}

TEST_CASE("build_hp examples") {
  CHECK_THROWS_AS(build_hp(FaultSet(CubeDim(4)), 0b0000, 0b1111), PreconditionViolated);
  const auto r = build_hp(FaultSet(CubeDim(4)), 0b0000, 0b1110);
  CHECK(ref::check_route(4, {}, r.vertices, false) == 0);
  CHECK(r.vertices.front() == 0b0000);
  CHECK(r.vertices.back() == 0b1110);

  const auto f = ref::faults(4, {{0b0000, 0}, {0b0110, 0}, {0b1010, 0}});
  SearchConstraints c;
  c.endpoints = {{0b0100, 0b0111}};
  CHECK_FALSE(oracle_exists(f, c));
  CHECK_THROWS_AS(build_hp(f, 0b0100, 0b0111), PreconditionViolated);
  c.endpoints = {{0b0100, 0b0110}};
  REQUIRE(oracle_exists(f, c));
  const auto g = build_hp(f, 0b0100, 0b0110);
  CHECK(ref::check_route(4, ref::edge_set(f), g.vertices, false) == 0);
  CHECK(g.vertices.front() == 0b0100);
  CHECK(g.vertices.back() == 0b0110);

  CHECK_THROWS_AS(build_hp(ref::q4_dtbce(), 0b0000, 0b0011), PreconditionViolated);
  CHECK_THROWS_AS(build_hp(ref::q4_scdhw(), 0b0000, 0b0001), PreconditionViolated);
  CHECK_THROWS_AS(build_hp(FaultSet(CubeDim(4)), 0b0000, 0b0011), PreconditionViolated);
  CHECK_THROWS_AS(build_hp(FaultSet(CubeDim(4)), 0b0000, 0b10000), EdgeOutOfRange);
}

TEST_CASE("build_hp_one_fault examples") {
  const auto f = ref::faults(4, {{0b0000, 0}, {0b0110, 0}});
  SearchConstraints c;
  c.endpoints = {{0b0000, 0b0111}};
  c.required_faulty_traversals = 1;
  REQUIRE(oracle_exists(f, c));
  const auto r = build_hp_one_fault(f, 0b0000, 0b0111);
  CHECK(ref::check_route(4, ref::edge_set(f), r.vertices, false) == 1);

  const auto single = ref::faults(4, {{0b0000, 0}});
  CHECK_FALSE(one_fault_precondition(single, 0b0000, 0b0001));
  CHECK(one_fault_precondition(single, 0b0000, 0b0111));
  CHECK_THROWS_AS(build_hp_one_fault(single, 0b0000, 0b0001), PreconditionViolated);
  CHECK_THROWS_AS(build_hp_one_fault(FaultSet(CubeDim(4)), 0b0000, 0b0001), PreconditionViolated);
}

TEST_CASE("build_hc examples") {
  const auto gray = build_hc(FaultSet(CubeDim(3)));
  CHECK(gray.closed);
  CHECK(gray.vertices == std::vector<Vertex>{0b000, 0b001, 0b011, 0b010, 0b110, 0b111, 0b101, 0b100});

  const auto dt = build_hc(ref::q4_dtbce());
  CHECK(dt.closed);
  CHECK(ref::check_route(4, ref::edge_set(ref::q4_dtbce()), dt.vertices, true) == 0);

  CHECK_THROWS_AS(build_hc(ref::q4_scdhw()), NotHamiltonian);
  CHECK_THROWS_AS(build_hc(ref::faults(3, {{0b001, 1}, {0b010, 2}, {0b100, 0}})), NotHamiltonian);
}

TEST_CASE("build_hc agrees with the oracle on every Q3 matching") {
  enumerate_all_matchings(CubeDim(3), [](const FaultSet& f) {
    SearchConstraints c;
    c.closed = true;
    const bool exists = oracle_exists(f, c);
    if (exists) {
      const auto r = build_hc(f);
      CHECK(ref::check_route(3, ref::edge_set(f), r.vertices, true) == 0);
    } else {
      CHECK_THROWS_AS(build_hc(f), NotHamiltonian);
    }
  });
}

TEST_CASE("builders are deterministic") {
  const auto f = random_disjoint_faults(CubeDim(7), 30, FaultConstraint::NoTrap, 99);
  CHECK(build_hp(f, 0, 1).vertices == build_hp(f, 0, 1).vertices);
  CHECK(build_hc(f).vertices == build_hc(f).vertices);
  BuildTrace t1, t2;
  build_hp_one_fault(f, 0, 0b1111111, &t1);
  build_hp_one_fault(f, 0, 0b1111111, &t2);
  CHECK(t1.format(7) == t2.format(7));
}

TEST_CASE("trace records the recursion") {
  const auto f = random_disjoint_faults(CubeDim(6), 12, FaultConstraint::NoTrap, 4);
  BuildTrace trace;
  build_hp(f, 0, 0b011111, &trace);
  REQUIRE_FALSE(trace.steps.empty());
  CHECK(trace.steps.front().depth == 0);
  CHECK(trace.steps.front().split_dir >= 0);
  CHECK(trace.steps.front().case_label.rfind("Case ", 0) == 0);
  const std::string text = trace.format(6);
  CHECK(text.rfind("[******] La1 000000->011111 Case ", 0) == 0);
}

TEST_CASE("builders on random trap-free instances for n = 4..8") {
  std::mt19937_64 rng(8);
  for (int n = 4; n <= 8; ++n) {
    const std::size_t cap = (std::size_t{1} << (n - 2)) + n;
    for (int i = 0; i < 120; ++i) {
      const auto f = random_disjoint_faults(CubeDim(n), rng() % cap, FaultConstraint::NoTrap, rng);
      const auto faults = ref::edge_set(f);
      const Vertex a = random_vertex(rng, n);
      const Vertex b = opposite_parity(rng, n, a);

      const auto hp = build_hp(f, a, b);
      CHECK(hp.vertices.front() == a);
      CHECK(hp.vertices.back() == b);
      CHECK(ref::check_route(n, faults, hp.vertices, false) == 0);

      if (one_fault_precondition(f, a, b)) {
        const auto one = build_hp_one_fault(f, a, b);
        CHECK(one.vertices.front() == a);
        CHECK(one.vertices.back() == b);
        CHECK(ref::check_route(n, faults, one.vertices, false) == 1);
      }

      const auto hc = build_hc(f);
      CHECK(ref::check_route(n, faults, hc.vertices, true) == 0);
    }
  }
}

TEST_CASE("build_hc on DTBCE instances") {
  for (int n = 4; n <= 9; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto f = random_disjoint_faults(CubeDim(n), (std::size_t{1} << (n - 1)) - 2 + (n == 4 ? 0 : seed % 3),
                                            FaultConstraint::HasDtbce, seed);
      REQUIRE(ref::dtbce_by_definition(f));
      const auto hc = build_hc(f);
      CHECK(ref::check_route(n, ref::edge_set(f), hc.vertices, true) == 0);
    }
  }
}
