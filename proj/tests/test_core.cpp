#include <doctest.h>

#include <sstream>

#include "hyperham/fault_set.hpp"
#include "hyperham/route.hpp"
#include "support.hpp"

using namespace hyperham;

TEST_CASE("cube dimension bounds") {
  CHECK(CubeDim(1).vertex_count() == 2);
  CHECK(CubeDim(4).edge_count() == 32);
  CHECK(CubeDim(24).vertex_count() == (1u << 24));
  CHECK_THROWS_AS(CubeDim(0), DimensionError);
  CHECK_THROWS_AS(CubeDim(kMaxDim + 1), DimensionError);
}

TEST_CASE("neighbor flips one coordinate") {
  const CubeDim d4(4);
  CHECK(neighbor(d4, 0b0101, 1) == 0b0111);
  CHECK(neighbor(d4, 0b0000, 0) == 0b0001);
  CHECK(neighbor(d4, 0b1111, 3) == 0b0111);
  CHECK_THROWS_AS(neighbor(d4, 0, 4), EdgeOutOfRange);
  CHECK_THROWS_AS(neighbor(d4, 0, -1), EdgeOutOfRange);
}

TEST_CASE("parity and distance") {
  CHECK(parity(0b0000) == 0);
  CHECK(parity(0b0111) == 1);
  CHECK(parity(0b1111) == 0);
  CHECK(distance(0b0000, 0b0000) == 0);
  CHECK(distance(0b0000, 0b0001) == 1);
  CHECK(distance(0b0101, 0b1010) == 4);
}

TEST_CASE("edges, labels and their parities") {
  const Edge e = edge_between(0b0111, 0b0101);
  CHECK(e.low == 0b0101);
  CHECK(e.dir == 1);
  CHECK(e.high() == 0b0111);
  CHECK(e.edge_parity() == 0);
  CHECK_THROWS(edge_between(0, 3));
  CHECK(to_binary(0b0101, 4) == "0101");
  CHECK(parse_binary("0101", 4) == 0b0101);
  CHECK_THROWS_AS(parse_binary("012", 3), EdgeOutOfRange);
  CHECK_THROWS_AS(parse_binary("01", 3), EdgeOutOfRange);
  CHECK_THROWS_AS(check_edge(CubeDim(3), Edge{0b001, 0}), EdgeOutOfRange);
}

TEST_CASE("subcube halves and iteration order") {
  const CubeDim d(4);
  const auto h = Subcube::half(d, 2, 1);
  CHECK(h.dim() == 3);
  std::vector<Vertex> seen;
  h.for_each([&](Vertex v) { seen.push_back(v); });
  REQUIRE(seen.size() == 8);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  for (Vertex v : seen) CHECK(bit(v, 2));
  const auto q = Subcube::quadrant(d, 0, 3, 1, 0);
  CHECK(q.dim() == 2);
  CHECK(q.contains(0b0001));
  CHECK_FALSE(q.contains(0b1001));
}

TEST_CASE("gray code of Q3") {
  const auto g = gray_code(Subcube::whole(CubeDim(3)));
  CHECK(g == std::vector<Vertex>{0b000, 0b001, 0b011, 0b010, 0b110, 0b111, 0b101, 0b100});
}

TEST_CASE("make_fault_set validates disjointness") {
  const auto ok = make_fault_set(CubeDim(3), std::vector<Edge>{{0b000, 0}, {0b010, 2}});
  CHECK(ok.size() == 2);
  CHECK(ok.is_faulty(0b000, 0));
  CHECK(ok.is_faulty(0b001, 0));
  CHECK(ok.is_free(0b100));
  try {
    make_fault_set(CubeDim(3), std::vector<Edge>{{0b000, 0}, {0b000, 1}});
    FAIL("expected NotDisjoint");
  } catch (const NotDisjoint& e) {
    CHECK(e.shared_vertex() == 0b000);
  }
  CHECK_THROWS_AS(make_fault_set(CubeDim(3), std::vector<Edge>{{0b000, 3}}), EdgeOutOfRange);
}

TEST_CASE("tallies and healthy crossing counts") {
  const auto f = ref::q4_scdhw();
  CHECK(f.tally(0, 0) == 4);
  CHECK(f.tally(0, 1) == 0);
  CHECK(healthy_crossing_counts(f, 0) == std::array<std::uint64_t, 2>{0, 4});
  CHECK(healthy_crossing_counts(f, 1) == std::array<std::uint64_t, 2>{4, 4});
  CHECK(healthy_crossing_counts(FaultSet(CubeDim(4)), 0) == std::array<std::uint64_t, 2>{4, 4});
  // Every parity-0 direction-0 crossing edge of Q_4, by direct scan.
  std::vector<Vertex> lows;
  for (Vertex v = 0; v < 16; ++v) {
    if (!bit(v, 0) && parity(v) == 0) lows.push_back(v);
  }
  CHECK(lows == std::vector<Vertex>{0b0000, 0b0110, 0b1010, 0b1100});
  CHECK(f.faults_in_half(1, 0).size() == 2);
}

TEST_CASE("fault file round trip") {
  const auto f = ref::q4_dtbce();
  const std::string text = format_fault_file(f);
  CHECK(parse_fault_text(text) == f);
  CHECK(format_fault_file(parse_fault_text(text)) == text);
  const auto g = parse_fault_text("# comment\n\nn=3\n000 0   # trailing\n010 2\n");
  CHECK(g.size() == 2);
}

TEST_CASE("fault file errors carry line and column") {
  auto line_of = [](const std::string& text) {
    try {
      parse_fault_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("n=3\n000 0\n000 1\n") == 3);
  CHECK(line_of("n=3\n0000 0\n") == 2);
  CHECK(line_of("n=3\n001 0\n") == 2);
  CHECK(line_of("000 0\n") == 1);
  CHECK(line_of("n=3\n000 x\n") == 2);
}

TEST_CASE("verify_route reports each violation") {
  const auto empty = FaultSet(CubeDim(3));
  Route gray{CubeDim(3), gray_code(Subcube::whole(CubeDim(3))), true};
  RouteConstraints closed;
  closed.closed = true;
  CHECK(verify_route(empty, gray, closed).ok);

  Route dup = gray;
  dup.vertices[2] = dup.vertices[0];
  const auto v = verify_route(empty, dup, closed);
  CHECK_FALSE(v.ok);
  bool saw_duplicate = false;
  for (const auto& s : v.violations) saw_duplicate |= s.find("duplicate") != std::string::npos;
  CHECK(saw_duplicate);

  const auto f = ref::faults(3, {{0b000, 0}});
  closed.max_faulty = 0;
  const auto bad = verify_route(f, gray, closed);
  CHECK_FALSE(bad.ok);
  CHECK(bad.faulty_traversals == 1);
}

TEST_CASE("certificate round trip") {
  const auto f = ref::faults(3, {{0b000, 0}});
  Route gray{CubeDim(3), gray_code(Subcube::whole(CubeDim(3))), true};
  const std::string text = format_certificate(f, gray);
  CHECK(text.rfind("n=3 kind=cycle faulty_traversals=1\n", 0) == 0);
  const auto cert = parse_certificate_text(text);
  CHECK(cert.route.vertices == gray.vertices);
  CHECK(cert.route.closed);
  CHECK(cert.declared_faulty_traversals == 1);
  CHECK_THROWS_AS(parse_certificate_text("n=3 kind=loop faulty_traversals=0\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate_text("n=3 kind=path faulty_traversals=0\n0101\n"), ParseError);
}
