#include <doctest.h>

#include "hyperham/oracle.hpp"
#include "hyperham/sweep.hpp"
#include "support.hpp"

using namespace hyperham;

namespace {

SearchConstraints closed() {
  SearchConstraints c;
  c.closed = true;
  return c;
}

SearchConstraints ends(Vertex a, Vertex b) {
  SearchConstraints c;
  c.endpoints = {{a, b}};
  return c;
}

}  // namespace

TEST_CASE("Q3 has six Hamiltonian cycles") {
  ref::Brute brute(3, {});
  const std::uint64_t by_brute_force = brute.count_directed_cycles() / 2;
  CHECK(by_brute_force == 6);
  CHECK(oracle_count_cycles(FaultSet(CubeDim(3))) == by_brute_force);
}

TEST_CASE("oracle examples") {
  CHECK(oracle_exists(FaultSet(CubeDim(3)), closed()));
  CHECK_FALSE(oracle_exists(ref::faults(3, {{0b001, 1}, {0b010, 2}, {0b100, 0}}), closed()));
  CHECK_FALSE(oracle_exists(ref::q4_scdhw(), closed()));

  // 0000 and 1111 have equal parity, so no path joins them.
  CHECK_FALSE(oracle_find(FaultSet(CubeDim(4)), ends(0b0000, 0b1111)));
  const auto hp = oracle_find(FaultSet(CubeDim(4)), ends(0b0000, 0b1110));
  REQUIRE(hp);
  RouteConstraints rc;
  rc.endpoints = {{0b0000, 0b1110}};
  CHECK(verify_route(FaultSet(CubeDim(4)), *hp, rc).ok);

  CHECK_FALSE(oracle_find(ref::q4_dtbce(), ends(0b0000, 0b0010)));
  const auto hc = oracle_find(ref::q4_dtbce(), closed());
  REQUIRE(hc);
  RouteConstraints cc;
  cc.closed = true;
  cc.max_faulty = 0;
  CHECK(verify_route(ref::q4_dtbce(), *hc, cc).ok);
}

TEST_CASE("oracle guards its dimension and budget") {
  CHECK_THROWS_AS(oracle_exists(FaultSet(CubeDim(7)), closed()), DimensionTooLarge);
  CHECK_THROWS_AS(oracle_count_cycles(FaultSet(CubeDim(4)), 10), SearchTimeout);
}

TEST_CASE("excluded vertex, required edge and one faulty traversal") {
  SearchConstraints c = ends(0b000, 0b011);
  c.excluded_vertex = 0b001;
  const auto r = oracle_find(FaultSet(CubeDim(3)), c);
  REQUIRE(r);
  CHECK(r->vertices.size() == 7);
  CHECK(ref::check_route(3, {}, r->vertices, false, 0b001) == 0);

  SearchConstraints e = ends(0b000, 0b111);
  e.required_edge = Edge{0b010, 0};
  const auto through = oracle_find(FaultSet(CubeDim(3)), e);
  REQUIRE(through);
  bool found = false;
  for (std::size_t i = 1; i < through->vertices.size(); ++i) {
    found |= edge_between(through->vertices[i - 1], through->vertices[i]) == Edge{0b010, 0};
  }
  CHECK(found);

  const auto f = ref::faults(4, {{0b0000, 0}, {0b0110, 0}});
  SearchConstraints one = ends(0b0000, 0b0111);
  one.required_faulty_traversals = 1;
  const auto la2 = oracle_find(f, one);
  REQUIRE(la2);
  CHECK(ref::check_route(4, ref::edge_set(f), la2->vertices, false) == 1);
}

TEST_CASE("two-path search") {
  const auto r = oracle_find_two_paths(FaultSet(CubeDim(3)), {0b000, 0b001}, {0b011, 0b111});
  REQUIRE(r);
  CHECK(r->first.vertices.front() == 0b000);
  CHECK(r->first.vertices.back() == 0b001);
  CHECK(r->second.vertices.front() == 0b011);
  CHECK(r->second.vertices.back() == 0b111);
  CHECK(r->first.vertices.size() + r->second.vertices.size() == 8);
}

TEST_CASE("oracle agrees with unpruned search on random small instances") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const int n = 3 + static_cast<int>(i % 2);
    const auto f = random_disjoint_faults(CubeDim(n), rng() % (n == 3 ? 4 : 7), FaultConstraint::None, rng);
    ref::Brute brute(n, ref::edge_set(f));
    CHECK(oracle_exists(f, closed()) == brute.cycle());
    const Vertex a = static_cast<Vertex>(rng() % (1u << n));
    Vertex b = static_cast<Vertex>(rng() % (1u << n));
    if (parity(a) == parity(b)) b = flip(b, 0);
    const auto found = oracle_find(f, ends(a, b));
    CHECK(found.has_value() == brute.path(a, b));
    if (found) CHECK(ref::check_route(n, ref::edge_set(f), found->vertices, false) == 0);
  }
}

TEST_CASE("oracle refutes trapped instances at n = 5 and n = 6") {
  for (int n : {5, 6}) {
    const auto f = random_disjoint_faults(CubeDim(n), std::size_t{1} << (n - 2), FaultConstraint::HasScdhw, 3);
    CHECK_FALSE(oracle_exists(f, closed()));
    const auto d = random_disjoint_faults(CubeDim(n), (std::size_t{1} << (n - 1)) - 2, FaultConstraint::HasDtbce, 3);
    CHECK(oracle_exists(d, closed()));
  }
}
