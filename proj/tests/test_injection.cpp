#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "rainbow/count.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/injection.hpp"

#include "fixtures.hpp"

using namespace rainbow;

TEST_CASE("membership predicates") {
  ColoredGraph g = fixtures::make_k4();
  SxTuple good{3, 2, 3, 3, 0, 1};
  CHECK(in_S(g, 0, good));
  CHECK_FALSE(in_S(g, 0, SxTuple{3, 2, 3, 1, 0, 1}));  // z outside {x, y}
  CHECK_FALSE(in_S(g, 0, SxTuple{2, 3, 3, 3, 0, 1}));  // first triangle misordered
  CHECK_FALSE(in_S(g, 0, SxTuple{3, 2, 1, 3, 0, 1}));  // {x, y} not blue
  CHECK_FALSE(in_S(g, 0, SxTuple{3, 2, 3, 3, 0, 9}));  // out of range, not an error

  TxTuple t{2, 3, 3, 0, 1};
  CHECK(in_T(g, 0, t));
  CHECK_FALSE(in_T(g, 0, TxTuple{3, 3, 3, 0, 1}));  // a not a green neighbor
  CHECK_FALSE(in_T(g, 0, TxTuple{2, 1, 3, 0, 1}));  // b1 not a blue neighbor
  CHECK_FALSE(in_T(g, 0, TxTuple{2, 3, 3, 1, 0}));  // unsorted edge pair
  CHECK_FALSE(in_T(g, 0, TxTuple{2, 3, 3, 0, 2}));  // {0,2} is green, not red
}

TEST_CASE("domain and codomain enumeration on K4") {
  ColoredGraph g = fixtures::make_k4();
  auto s0 = enumerate_S(g, 0);
  REQUIRE(s0.size() == 2);
  CHECK(s0[0] == SxTuple{3, 2, 3, 0, 3, 2});
  CHECK(s0[1] == SxTuple{3, 2, 3, 3, 0, 1});

  auto t0 = enumerate_T(g, 0);
  REQUIRE(t0.size() == 2);  // 1 green neighbor x 1 blue x 1 blue x 2 red edges
  CHECK(t0[0] == TxTuple{2, 3, 3, 0, 1});
  CHECK(t0[1] == TxTuple{2, 3, 3, 2, 3});

  for (const SxTuple& s : s0) CHECK(in_S(g, 0, s));
  for (const TxTuple& t : t0) CHECK(in_T(g, 0, t));
}

TEST_CASE("edgeless graph has empty domain and codomain") {
  ColoredGraph g = build_graph(4, {});
  CHECK(enumerate_S(g, 0).empty());
  CHECK(enumerate_T(g, 0).empty());
  InjectionReport rep = verify_injection(g, 0);
  CHECK(rep.s_size == 0);
  CHECK(rep.t_size == 0);
  CHECK(rep.ok);
}

TEST_CASE("case 1: second triangle also rainbow through x in the same order") {
  ColoredGraph g = fixtures::make_case1_instance();
  SxTuple s{1, 2, 3, 3, 4, 5};
  REQUIRE(in_S(g, 0, s));
  TxTuple t = apply_injection(g, 0, s);
  CHECK(t == TxTuple{5, 3, 4, 1, 2});
  CHECK(g.edge_color(t.a, t.b1) == Color::Green);  // case-1 signature
  auto back = invert_injection(g, 0, t);
  REQUIRE(back.has_value());
  CHECK(*back == s);
}

TEST_CASE("case 2: second triangle rainbow through x in swapped order") {
  ColoredGraph g = fixtures::make_case2_instance();
  SxTuple s{1, 2, 3, 3, 4, 5};
  REQUIRE(in_S(g, 0, s));
  TxTuple t = apply_injection(g, 0, s);
  CHECK(t == TxTuple{4, 3, 5, 1, 2});
  CHECK(g.edge_color(t.a, t.b1) == Color::Blue);  // case-2 signature
  auto back = invert_injection(g, 0, t);
  REQUIRE(back.has_value());
  CHECK(*back == s);
}

TEST_CASE("case 3 with z = x") {
  ColoredGraph g = fixtures::make_case3_zx_instance();
  SxTuple s{1, 2, 3, 0, 4, 5};
  REQUIRE(in_S(g, 0, s));
  TxTuple t = apply_injection(g, 0, s);
  CHECK(t == TxTuple{2, 1, 3, 4, 5});
  CHECK(g.edge_color(t.a, t.b1) == Color::Red);  // case-3 signature
  auto back = invert_injection(g, 0, t);
  REQUIRE(back.has_value());
  CHECK(*back == s);
}

TEST_CASE("case 3 with z = y") {
  ColoredGraph g = fixtures::make_case3_zy_instance();
  SxTuple s{1, 2, 3, 3, 4, 5};
  REQUIRE(in_S(g, 0, s));
  TxTuple t = apply_injection(g, 0, s);
  CHECK(t == TxTuple{2, 1, 3, 4, 5});
  auto back = invert_injection(g, 0, t);
  REQUIRE(back.has_value());
  CHECK(*back == s);
}

TEST_CASE("apply rejects tuples outside the domain") {
  ColoredGraph g = fixtures::make_k4();
  bool threw = false;
  try {
    apply_injection(g, 0, SxTuple{3, 2, 3, 1, 0, 1});
  } catch (const Error& e) {
    threw = e.code() == Errc::not_in_domain;
  }
  CHECK(threw);
}

TEST_CASE("invert rejects tuples outside the codomain") {
  ColoredGraph g = fixtures::make_k4();
  bool threw = false;
  try {
    invert_injection(g, 0, TxTuple{1, 3, 3, 0, 1});
  } catch (const Error& e) {
    threw = e.code() == Errc::not_in_domain;
  }
  CHECK(threw);
}

TEST_CASE("codomain tuples without preimage invert to nothing") {
  // K4: |S_0| = |T_0| = 2 and the map is onto here, so probe a sparser
  // instance where the codomain is strictly larger.
  ColoredGraph g = fixtures::make_case3_zx_instance();
  auto domain = enumerate_S(g, 0);
  std::set<TxTuple> images;
  for (const SxTuple& s : domain) images.insert(apply_injection(g, 0, s));
  std::size_t no_preimage = 0;
  for (const TxTuple& t : enumerate_T(g, 0)) {
    auto back = invert_injection(g, 0, t);
    if (images.count(t)) {
      REQUIRE(back.has_value());
      CHECK(apply_injection(g, 0, *back) == t);
    } else {
      CHECK_FALSE(back.has_value());
      ++no_preimage;
    }
  }
  CHECK(no_preimage == enumerate_T(g, 0).size() - domain.size());
}

TEST_CASE("case-color correspondence") {
  // The color of {a, b1} in the image matches the case that produced it.
  for (const auto& make :
       {fixtures::make_case1_instance, fixtures::make_case2_instance,
        fixtures::make_case3_zx_instance, fixtures::make_case3_zy_instance,
        fixtures::make_k4}) {
    ColoredGraph g = make();
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      for (const SxTuple& s : enumerate_S(g, x)) {
        TxTuple t = apply_injection(g, x, s);
        auto col = g.edge_color(t.a, t.b1);
        REQUIRE(col.has_value());
        bool case1 = s.z == s.y && is_rainbow_in_order(g, x, s.z1, s.z2);
        bool case2 = s.z == s.y && is_rainbow_in_order(g, x, s.z2, s.z1);
        if (case1) CHECK(col == Color::Green);
        else if (case2) CHECK(col == Color::Blue);
        else CHECK(col == Color::Red);
        CHECK_FALSE((case1 && case2));
      }
    }
  }
}

TEST_CASE("full verification on fixtures") {
  for (const auto& make :
       {fixtures::make_k4, fixtures::make_case1_instance,
        fixtures::make_case2_instance, fixtures::make_case3_zx_instance,
        fixtures::make_case3_zy_instance, fixtures::make_two_disjoint_triangles}) {
    ColoredGraph g = make();
    for (const InjectionReport& rep : verify_injection_all(g)) {
      CHECK(rep.well_defined);
      CHECK(rep.injective);
      CHECK(rep.roundtrip_ok);
      CHECK(rep.ok);
      CHECK(rep.s_size <= rep.t_size);
    }
  }
}

TEST_CASE("random instances verify at every vertex") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GenParams params;
    params.n = static_cast<Vertex>(5 + seed % 6);
    params.p = 0.3 + 0.15 * static_cast<double>(seed % 4);
    params.seed = 555 + seed;
    ColoredGraph g = random_colored_graph(params);
    for (const InjectionReport& rep : verify_injection_all(g, 2)) {
      CHECK(rep.ok);
      CHECK(rep.s_size <= rep.t_size);
    }
  }
}

TEST_CASE("mapping dump is aligned and sorted") {
  ColoredGraph g = fixtures::make_k4();
  std::vector<std::pair<SxTuple, TxTuple>> mapping;
  InjectionReport rep = verify_injection(g, 0, &mapping);
  REQUIRE(mapping.size() == rep.s_size);
  CHECK(std::is_sorted(mapping.begin(), mapping.end(),
                       [](const auto& a, const auto& b) {
                         return a.first < b.first;
                       }));
  for (const auto& [s, t] : mapping) {
    CHECK(apply_injection(g, 0, s) == t);
  }
}
