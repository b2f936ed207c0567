#include "rainbow/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

#include "rainbow/bitrow.hpp"

namespace rainbow {

namespace {

namespace mp = boost::multiprecision;

/// A (triangle, blue neighbor) pair together with the blue degree of the
/// triangle's v_r; probability of the pair is 1 / (T * bdeg).
struct DrawnPair {
  RainbowTriangle delta;
  Vertex u;
  std::uint64_t bdeg;
};

/// Pairs grouped by their blue edge {delta.v_r, u}, keyed by sorted pair.
std::map<VertexPair, std::vector<DrawnPair>> group_pairs(const ColoredGraph& g) {
  std::map<VertexPair, std::vector<DrawnPair>> groups;
  for (const RainbowTriangle& t : enumerate_rainbow_triangles(g)) {
    std::uint64_t bdeg = row_popcount(g.neighbors(t.v_r, Color::Blue));
    for_each_bit(g.neighbors(t.v_r, Color::Blue), [&](std::size_t u) {
      VertexPair key = make_pair_sorted(t.v_r, static_cast<Vertex>(u));
      groups[key].push_back({t, static_cast<Vertex>(u), bdeg});
    });
  }
  return groups;
}

}  // namespace

FiniteDistribution::FiniteDistribution(std::vector<Outcome> support,
                                       std::vector<BigInt> numerators,
                                       BigInt denominator)
    : support_(std::move(support)),
      numerators_(std::move(numerators)),
      denominator_(std::move(denominator)) {
  if (support_.size() != numerators_.size()) {
    raise(Errc::bad_argument, "distribution: support/numerator size mismatch");
  }
  if (denominator_ <= 0) {
    raise(Errc::bad_argument, "distribution: denominator must be positive");
  }
  BigInt sum = 0;
  for (const BigInt& a : numerators_) {
    if (a <= 0) raise(Errc::bad_argument, "distribution: nonpositive mass");
    sum += a;
  }
  if (sum != denominator_) {
    raise(Errc::bad_argument, "distribution: masses do not sum to 1");
  }
  if (!std::is_sorted(support_.begin(), support_.end()) ||
      std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
    raise(Errc::bad_argument, "distribution: support not strictly sorted");
  }
}

BigInt joint_support_size(const ColoredGraph& g) {
  BigInt total = 0;
  for (const auto& [key, pairs] : group_pairs(g)) {
    total += BigInt(pairs.size()) * BigInt(pairs.size());
  }
  return total;
}

FiniteDistribution build_joint(const ColoredGraph& g, std::uint64_t support_cap) {
  const std::uint64_t T = count_rainbow_triangles_fast(g);
  if (T == 0) {
    raise(Errc::no_rainbow_triangle, "build_joint: graph has no rainbow triangle");
  }
  auto groups = group_pairs(g);

  BigInt support_size = 0;
  for (const auto& [key, pairs] : groups) {
    support_size += BigInt(pairs.size()) * BigInt(pairs.size());
  }
  if (support_size > BigInt(support_cap)) {
    raise(Errc::support_cap_exceeded,
          "build_joint: support of " + support_size.str() + " outcomes exceeds cap " +
              std::to_string(support_cap));
  }

  // Common denominator D = T^2 * L^2 * N with L = lcm of the blue degrees in
  // play and N = lcm of the reduced numerators of the edge probabilities
  // P_ell. Every outcome mass is then an integer count over D.
  BigInt L = 1;
  for (const auto& [key, pairs] : groups) {
    for (const DrawnPair& p : pairs) L = mp::lcm(L, BigInt(p.bdeg));
  }
  struct GroupProb {
    BigInt num;  // P_ell = num / den, reduced
    BigInt den;
  };
  std::map<VertexPair, GroupProb> edge_prob;
  BigInt N = 1;
  for (const auto& [key, pairs] : groups) {
    Rational sum_inv = 0;
    for (const DrawnPair& p : pairs) sum_inv += Rational(1, p.bdeg);
    Rational p_ell = sum_inv / T;
    GroupProb gp{BigInt(mp::numerator(p_ell)), BigInt(mp::denominator(p_ell))};
    N = mp::lcm(N, gp.num);
    edge_prob.emplace(key, std::move(gp));
  }
  const BigInt D = BigInt(T) * BigInt(T) * L * L * N;

  std::vector<Outcome> support;
  std::vector<BigInt> numerators;
  support.reserve(static_cast<std::size_t>(support_size));
  numerators.reserve(static_cast<std::size_t>(support_size));
  std::vector<std::size_t> order;
  for (const auto& [key, pairs] : groups) {
    const GroupProb& gp = edge_prob.at(key);
    const BigInt scale = (N / gp.num) * gp.den;
    for (const DrawnPair& first : pairs) {
      const BigInt wi = L / first.bdeg;
      for (const DrawnPair& second : pairs) {
        support.push_back({first.delta, first.u, second.delta, second.u});
        numerators.push_back(wi * (L / second.bdeg) * scale);
      }
    }
  }
  order.resize(support.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return support[a] < support[b];
  });
  std::vector<Outcome> sorted_support(support.size());
  std::vector<BigInt> sorted_numerators(support.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted_support[i] = support[order[i]];
    sorted_numerators[i] = std::move(numerators[order[i]]);
  }
  return FiniteDistribution(std::move(sorted_support), std::move(sorted_numerators),
                            D);
}

namespace {

DerivedVariable make_var(std::string name, int width,
                         std::function<void(std::size_t, const Outcome&,
                                            std::int32_t*)>
                             project) {
  return DerivedVariable{std::move(name), width, std::move(project)};
}

std::int32_t as_key(Vertex v) { return static_cast<std::int32_t>(v); }

void write_pair_sorted(Vertex a, Vertex b, std::int32_t* out) {
  auto [lo, hi] = make_pair_sorted(a, b);
  out[0] = as_key(lo);
  out[1] = as_key(hi);
}

}  // namespace

DerivedVariable var_delta() {
  return make_var("delta", 3, [](std::size_t, const Outcome& o, std::int32_t* out) {
    out[0] = as_key(o.delta.v_r);
    out[1] = as_key(o.delta.v_g);
    out[2] = as_key(o.delta.v_b);
  });
}

DerivedVariable var_u() {
  return make_var("u", 1, [](std::size_t, const Outcome& o, std::int32_t* out) {
    out[0] = as_key(o.u);
  });
}

DerivedVariable var_delta_prime() {
  return make_var("delta_prime", 3,
                  [](std::size_t, const Outcome& o, std::int32_t* out) {
                    out[0] = as_key(o.delta_prime.v_r);
                    out[1] = as_key(o.delta_prime.v_g);
                    out[2] = as_key(o.delta_prime.v_b);
                  });
}

DerivedVariable var_u_prime() {
  return make_var("u_prime", 1, [](std::size_t, const Outcome& o, std::int32_t* out) {
    out[0] = as_key(o.u_prime);
  });
}

DerivedVariable var_v_r() {
  return make_var("v_r", 1, [](std::size_t, const Outcome& o, std::int32_t* out) {
    out[0] = as_key(o.delta.v_r);
  });
}

DerivedVariable var_v_g() {
  return make_var("v_g", 1, [](std::size_t, const Outcome& o, std::int32_t* out) {
    out[0] = as_key(o.delta.v_g);
  });
}

DerivedVariable var_v_b() {
  return make_var("v_b", 1, [](std::size_t, const Outcome& o, std::int32_t* out) {
    out[0] = as_key(o.delta.v_b);
  });
}

DerivedVariable var_ell_r() {
  return make_var("ell_r", 2, [](std::size_t, const Outcome& o, std::int32_t* out) {
    write_pair_sorted(o.delta.v_g, o.delta.v_b, out);
  });
}

DerivedVariable var_L_b() {
  return make_var("L_b", 2, [](std::size_t, const Outcome& o, std::int32_t* out) {
    write_pair_sorted(o.delta.v_r, o.u, out);
  });
}

InjectionImageTable build_image_table(const ColoredGraph& g,
                                      const FiniteDistribution& dist) {
  InjectionImageTable table;
  table.images.reserve(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const Outcome& o = dist.outcome(i);
    SxTuple s{o.delta.v_g, o.delta.v_b, o.u, o.delta_prime.v_r,
              o.delta_prime.v_g, o.delta_prime.v_b};
    table.images.push_back(apply_injection(g, o.delta.v_r, s));
  }
  return table;
}

DerivedVariable var_w(const InjectionImageTable& table) {
  const std::vector<TxTuple>* images = &table.images;
  return make_var("w", 1, [images](std::size_t i, const Outcome&, std::int32_t* out) {
    out[0] = as_key((*images)[i].a);
  });
}

DerivedVariable var_s1(const InjectionImageTable& table) {
  const std::vector<TxTuple>* images = &table.images;
  return make_var("s1", 1, [images](std::size_t i, const Outcome&, std::int32_t* out) {
    out[0] = as_key((*images)[i].b1);
  });
}

DerivedVariable var_s2(const InjectionImageTable& table) {
  const std::vector<TxTuple>* images = &table.images;
  return make_var("s2", 1, [images](std::size_t i, const Outcome&, std::int32_t* out) {
    out[0] = as_key((*images)[i].b2);
  });
}

DerivedVariable var_L_r(const InjectionImageTable& table) {
  const std::vector<TxTuple>* images = &table.images;
  return make_var("L_r", 2, [images](std::size_t i, const Outcome&, std::int32_t* out) {
    out[0] = as_key((*images)[i].e_u);
    out[1] = as_key((*images)[i].e_v);
  });
}

namespace {

int total_width(const std::vector<DerivedVariable>& vars) {
  int w = 0;
  for (const DerivedVariable& v : vars) w += v.width;
  return w;
}

/// Flat key matrix, one row of `width` slots per outcome.
std::vector<std::int32_t> project_all(const FiniteDistribution& dist,
                                      const std::vector<DerivedVariable>& vars,
                                      int width) {
  std::vector<std::int32_t> keys(dist.size() * static_cast<std::size_t>(width));
  for (std::size_t i = 0; i < dist.size(); ++i) {
    std::int32_t* row = keys.data() + i * static_cast<std::size_t>(width);
    int off = 0;
    for (const DerivedVariable& v : vars) {
      v.project(i, dist.outcome(i), row + off);
      off += v.width;
    }
  }
  return keys;
}

struct KeyLess {
  const std::int32_t* keys;
  int width;
  bool operator()(std::size_t a, std::size_t b) const {
    const std::int32_t* ka = keys + a * static_cast<std::size_t>(width);
    const std::int32_t* kb = keys + b * static_cast<std::size_t>(width);
    return std::lexicographical_compare(ka, ka + width, kb, kb + width);
  }
};

bool key_equal(const std::int32_t* keys, int width, std::size_t a, std::size_t b) {
  return std::equal(keys + a * static_cast<std::size_t>(width),
                    keys + (a + 1) * static_cast<std::size_t>(width),
                    keys + b * static_cast<std::size_t>(width));
}

}  // namespace

double entropy(const FiniteDistribution& dist,
               const std::vector<DerivedVariable>& vars) {
  const int width = total_width(vars);
  if (dist.size() == 0) return 0.0;
  if (width == 0) return 0.0;

  std::vector<std::int32_t> keys = project_all(dist, vars, width);
  std::vector<std::size_t> order(dist.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), KeyLess{keys.data(), width});

  long double h = 0.0L;
  std::size_t i = 0;
  while (i < order.size()) {
    BigInt mass = dist.numerator(order[i]);
    std::size_t j = i + 1;
    while (j < order.size() && key_equal(keys.data(), width, order[i], order[j])) {
      mass += dist.numerator(order[j]);
      ++j;
    }
    double p = ratio_as_double(mass, dist.denominator());
    if (p > 0.0 && p < 1.0) h -= static_cast<long double>(p) * std::log2(p);
    i = j;
  }
  return static_cast<double>(h);
}

double conditional_entropy(const FiniteDistribution& dist,
                           const std::vector<DerivedVariable>& x,
                           const std::vector<DerivedVariable>& y) {
  std::vector<DerivedVariable> xy = x;
  xy.insert(xy.end(), y.begin(), y.end());
  return entropy(dist, xy) - entropy(dist, y);
}

bool check_conditional_independence(const FiniteDistribution& dist,
                                    const std::vector<DerivedVariable>& x,
                                    const std::vector<DerivedVariable>& y,
                                    const std::vector<DerivedVariable>& z) {
  const int wx = total_width(x);
  const int wy = total_width(y);
  const int wz = total_width(z);
  const int width = wz + wx + wy;
  if (dist.size() == 0 || wx == 0 || wy == 0) return true;

  // Keys laid out as [Z | X | Y] so sorting groups first by condition,
  // then by X, then by Y.
  std::vector<DerivedVariable> zxy = z;
  zxy.insert(zxy.end(), x.begin(), x.end());
  zxy.insert(zxy.end(), y.begin(), y.end());
  std::vector<std::int32_t> keys = project_all(dist, zxy, width);
  std::vector<std::size_t> order(dist.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), KeyLess{keys.data(), width});

  auto slice_equal = [&](std::size_t a, std::size_t b, int from, int len) {
    const std::int32_t* ka = keys.data() + a * static_cast<std::size_t>(width) + from;
    const std::int32_t* kb = keys.data() + b * static_cast<std::size_t>(width) + from;
    return std::equal(ka, ka + len, kb, kb + len);
  };
  auto y_slice = [&](std::size_t a) {
    const std::int32_t* k = keys.data() + a * static_cast<std::size_t>(width);
    return std::vector<std::int32_t>(k + wz + wx, k + width);
  };

  std::size_t zi = 0;
  while (zi < order.size()) {
    std::size_t zend = zi + 1;
    while (zend < order.size() && slice_equal(order[zi], order[zend], 0, wz)) ++zend;

    BigInt a_z = 0;
    // Per X value within this Z group: total mass and per-Y breakdown.
    struct XEntry {
      BigInt a_xz;
      std::vector<std::pair<std::vector<std::int32_t>, BigInt>> by_y;  // sorted
    };
    std::vector<XEntry> xs;
    std::map<std::vector<std::int32_t>, BigInt> a_yz;

    std::size_t xi = zi;
    while (xi < zend) {
      std::size_t xend = xi + 1;
      while (xend < zend && slice_equal(order[xi], order[xend], wz, wx)) ++xend;
      XEntry entry;
      entry.a_xz = 0;
      std::size_t yi = xi;
      while (yi < xend) {
        std::size_t yend = yi + 1;
        BigInt mass = dist.numerator(order[yi]);
        while (yend < xend && slice_equal(order[yi], order[yend], wz + wx, wy)) {
          mass += dist.numerator(order[yend]);
          ++yend;
        }
        auto yk = y_slice(order[yi]);
        a_yz[yk] += mass;
        entry.a_xz += mass;
        entry.by_y.emplace_back(std::move(yk), std::move(mass));
        yi = yend;
      }
      a_z += entry.a_xz;
      xs.push_back(std::move(entry));
      xi = xend;
    }

    // Exact factorization test: A(x,y,z) * A(z) must equal A(x,z) * A(y,z)
    // for every (x, y) pair seen under this z, including pairs with no
    // joint mass.
    for (const XEntry& entry : xs) {
      for (const auto& [yk, mass_yz] : a_yz) {
        auto it = std::lower_bound(
            entry.by_y.begin(), entry.by_y.end(), yk,
            [](const auto& lhs, const std::vector<std::int32_t>& rhs) {
              return lhs.first < rhs;
            });
        BigInt a_xyz = 0;
        if (it != entry.by_y.end() && it->first == yk) a_xyz = it->second;
        if (a_xyz * a_z != entry.a_xz * mass_yz) return false;
      }
    }
    zi = zend;
  }
  return true;
}

}  // namespace rainbow
