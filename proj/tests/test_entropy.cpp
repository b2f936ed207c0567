#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>

#include "rainbow/audit.hpp"
#include "rainbow/count.hpp"
#include "rainbow/distribution.hpp"
#include "rainbow/generate.hpp"

#include "fixtures.hpp"

using namespace rainbow;

namespace {

using V = std::vector<DerivedVariable>;

bool step_by_id(const AuditLedger& ledger, const std::string& id, AuditStep& out) {
  for (const AuditStep& s : ledger.steps) {
    if (s.id == id) {
      out = s;
      return true;
    }
  }
  return false;
}

Rational exact_mass(const FiniteDistribution& d) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) sum += d.numerator(i);
  return Rational(sum, d.denominator());
}

}  // namespace

TEST_CASE("single triangle: everything is forced") {
  FiniteDistribution d = build_joint(fixtures::make_single_triangle());
  REQUIRE(d.size() == 1);
  CHECK(d.probability(0) == Rational(1));
  const Outcome& o = d.outcome(0);
  CHECK(o.delta == RainbowTriangle{0, 1, 2});
  CHECK(o.u == 1);  // the only blue neighbor of v_r = 0 is v_g = 1
  CHECK(o.delta_prime == o.delta);
  CHECK(o.u_prime == o.u);
  CHECK(entropy(d, V{var_delta()}) == 0.0);
}

TEST_CASE("K4 joint distribution") {
  ColoredGraph g = fixtures::make_k4();
  CHECK(joint_support_size(g) == 8);
  FiniteDistribution d = build_joint(g);
  REQUIRE(d.size() == 8);
  CHECK(exact_mass(d) == Rational(1));
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d.probability(i) == Rational(1, 8));
    const Outcome& o = d.outcome(i);
    // The resampled pair shares the blue edge as a set.
    auto lb = make_pair_sorted(o.delta.v_r, o.u);
    auto lb2 = make_pair_sorted(o.delta_prime.v_r, o.u_prime);
    CHECK(lb == lb2);
  }
  CHECK(entropy(d, V{var_delta()}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(entropy(d, V{var_L_b()}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(conditional_entropy(d, V{var_u()}, V{var_v_r()}) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("errors from degenerate inputs") {
  bool no_triangle = false;
  try {
    build_joint(build_graph(
        3, {{0, 1, Color::Red}, {1, 2, Color::Red}, {0, 2, Color::Green}}));
  } catch (const Error& e) {
    no_triangle = e.code() == Errc::no_rainbow_triangle;
  }
  CHECK(no_triangle);

  bool capped = false;
  try {
    build_joint(fixtures::make_k4(), 7);  // true support is 8
  } catch (const Error& e) {
    capped = e.code() == Errc::support_cap_exceeded;
  }
  CHECK(capped);
}

TEST_CASE("entropy basics") {
  FiniteDistribution d = build_joint(fixtures::make_k4());
  CHECK(entropy(d, V{}) == 0.0);

  DerivedVariable constant{"const", 1,
                           [](std::size_t, const Outcome&, std::int32_t* out) {
                             out[0] = 7;
                           }};
  CHECK(entropy(d, V{constant}) == 0.0);

  // H(X|X) = 0.
  CHECK(conditional_entropy(d, V{var_delta()}, V{var_delta()}) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // Conditioning cannot increase entropy.
  double h_u = entropy(d, V{var_u()});
  double h_u_given = conditional_entropy(d, V{var_u()}, V{var_delta()});
  CHECK(h_u_given <= h_u + 1e-12);
}

TEST_CASE("delta is uniform so H(delta) = log2 T") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    GenParams params;
    params.n = static_cast<Vertex>(6 + seed % 7);
    params.p = 0.4 + 0.1 * static_cast<double>(seed % 3);
    params.seed = 2000 + seed;
    ColoredGraph g = random_colored_graph(params);
    if (count_rainbow_triangles_fast(g) == 0) continue;
    FiniteDistribution d = build_joint(g);
    double h = entropy(d, V{var_delta()});
    double expected = std::log2(static_cast<double>(count_rainbow_triangles_fast(g)));
    CHECK(std::abs(h - expected) <= 1e-9);
  }
}

TEST_CASE("exchangeability of the two draws") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenParams params;
    params.n = 9;
    params.p = 0.5;
    params.seed = 3000 + seed;
    ColoredGraph g = random_colored_graph(params);
    if (count_rainbow_triangles_fast(g) == 0) continue;
    FiniteDistribution d = build_joint(g);
    double lhs = conditional_entropy(d, V{var_delta()}, V{var_L_b()});
    double rhs = conditional_entropy(d, V{var_delta_prime()}, V{var_L_b()});
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("conditional independence holds by construction") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenParams params;
    params.n = 8;
    params.p = 0.55;
    params.seed = 4000 + seed;
    ColoredGraph g = random_colored_graph(params);
    if (count_rainbow_triangles_fast(g) == 0) continue;
    FiniteDistribution d = build_joint(g);
    CHECK(check_conditional_independence(d, V{var_delta()}, V{var_delta_prime()},
                                         V{var_L_b()}));
    CHECK(check_conditional_independence(d, V{var_u()}, V{var_ell_r()},
                                         V{var_v_r()}));
  }
}

TEST_CASE("unconditionally the two draws are dependent") {
  FiniteDistribution d = build_joint(fixtures::make_two_disjoint_triangles());
  REQUIRE(d.size() == 2);
  // Empty conditioning list makes this a plain independence test.
  CHECK_FALSE(
      check_conditional_independence(d, V{var_delta()}, V{var_delta_prime()}, V{}));
  CHECK(check_conditional_independence(d, V{var_delta()}, V{var_delta_prime()},
                                       V{var_L_b()}));
}

TEST_CASE("image table matches a direct application") {
  ColoredGraph g = fixtures::make_k4();
  FiniteDistribution d = build_joint(g);
  InjectionImageTable table = build_image_table(g, d);
  REQUIRE(table.images.size() == d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Outcome& o = d.outcome(i);
    SxTuple s{o.delta.v_g, o.delta.v_b, o.u, o.delta_prime.v_r,
              o.delta_prime.v_g, o.delta_prime.v_b};
    CHECK(in_S(g, o.delta.v_r, s));
    CHECK(table.images[i] == apply_injection(g, o.delta.v_r, s));
    CHECK(in_T(g, o.delta.v_r, table.images[i]));
  }
}

TEST_CASE("audit ledger on the equality instance") {
  AuditLedger ledger = audit_proof(fixtures::make_k4());
  CHECK(ledger.n == 4);
  CHECK(ledger.T == 4);
  CHECK(ledger.overall);
  REQUIRE(ledger.steps.size() == 20);
  for (const AuditStep& s : ledger.steps) {
    CHECK(s.pass);
    // Equality instance: every inequality is tight.
    CHECK(std::abs(s.slack) <= kAuditToleranceBits);
  }
}

TEST_CASE("audit ledger on the single triangle") {
  AuditLedger ledger = audit_proof(fixtures::make_single_triangle());
  CHECK(ledger.overall);
  AuditStep m, l1, l2, l3;
  REQUIRE(step_by_id(ledger, "M", m));
  REQUIRE(step_by_id(ledger, "L1", l1));
  REQUIRE(step_by_id(ledger, "L2", l2));
  REQUIRE(step_by_id(ledger, "L3", l3));
  CHECK(m.slack == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(l1.slack == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(l2.slack == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(l3.slack == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("audit passes on random instances") {
  int audited = 0;
  for (std::uint64_t seed = 0; seed < 20 && audited < 12; ++seed) {
    GenParams params;
    params.n = static_cast<Vertex>(7 + seed % 5);
    params.p = 0.5;
    params.color_bias = (seed % 2) ? fixtures::skewed_bias()
                                   : fixtures::uniform_bias();
    params.seed = 5000 + seed;
    ColoredGraph g = random_colored_graph(params);
    if (count_rainbow_triangles_fast(g) == 0) continue;
    AuditLedger ledger = audit_proof(g);
    CHECK(ledger.overall);
    for (const AuditStep& s : ledger.steps) {
      if (s.relation == "<=") CHECK(s.slack >= -kAuditToleranceBits);
    }
    ++audited;
  }
  CHECK(audited >= 5);
}

TEST_CASE("ledger entropies are invariant under relabeling") {
  GenParams params;
  params.n = 9;
  params.p = 0.5;
  params.seed = 6060;
  ColoredGraph g = random_colored_graph(params);
  REQUIRE(count_rainbow_triangles_fast(g) > 0);

  // Rotate vertex labels by 4 mod 9.
  std::vector<ColoredEdge> relabeled;
  for (const ColoredEdge& e : g.edges()) {
    relabeled.push_back({static_cast<Vertex>((e.u + 4) % 9),
                         static_cast<Vertex>((e.v + 4) % 9), e.color});
  }
  ColoredGraph h = build_graph(9, std::move(relabeled));

  AuditLedger lg = audit_proof(g);
  AuditLedger lh = audit_proof(h);
  REQUIRE(lg.steps.size() == lh.steps.size());
  for (std::size_t i = 0; i < lg.steps.size(); ++i) {
    CHECK(lg.steps[i].lhs_bits ==
          doctest::Approx(lh.steps[i].lhs_bits).epsilon(1e-9));
    CHECK(lg.steps[i].rhs_bits ==
          doctest::Approx(lh.steps[i].rhs_bits).epsilon(1e-9));
  }
}

TEST_CASE("support size bound") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenParams params;
    params.n = 10;
    params.p = 0.5;
    params.seed = 7000 + seed;
    ColoredGraph g = random_colored_graph(params);
    std::uint64_t T = count_rainbow_triangles_fast(g);
    if (T == 0) continue;
    std::uint64_t max_bdeg = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      max_bdeg = std::max<std::uint64_t>(max_bdeg, g.degree(v, Color::Blue));
    }
    CHECK(joint_support_size(g) <= BigInt(T) * max_bdeg * T * max_bdeg);
  }
}
