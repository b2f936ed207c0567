#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rainbow/count.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/injection.hpp"
#include "rainbow/rational.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

/// One sample of the proof's experiment: a uniform rainbow triangle Δ, a
/// uniform blue neighbor u of Δ.v_r, and a second pair (Δ′, u′) drawn from
/// the same law conditioned on {Δ′.v_r, u′} = {Δ.v_r, u} as sets. That
/// common set is the blue edge L_b.
struct Outcome {
  RainbowTriangle delta;
  Vertex u;
  RainbowTriangle delta_prime;
  Vertex u_prime;

  friend bool operator==(const Outcome&, const Outcome&) = default;
  friend std::strong_ordering operator<=>(const Outcome&, const Outcome&) = default;
};

/// Exact finite pmf over Outcomes. Probabilities are kept as integer
/// numerators over one common denominator, so marginal sums stay in
/// integer arithmetic; probability(i) reduces on demand.
class FiniteDistribution {
 public:
  /// Requires strictly increasing support, positive numerators, and
  /// numerators summing exactly to the denominator.
  FiniteDistribution(std::vector<Outcome> support, std::vector<BigInt> numerators,
                     BigInt denominator);

  std::size_t size() const { return support_.size(); }
  const Outcome& outcome(std::size_t i) const { return support_[i]; }
  const BigInt& numerator(std::size_t i) const { return numerators_[i]; }
  const BigInt& denominator() const { return denominator_; }
  Rational probability(std::size_t i) const {
    return Rational(numerators_[i], denominator_);
  }

 private:
  std::vector<Outcome> support_;
  std::vector<BigInt> numerators_;
  BigInt denominator_;
};

/// Number of outcomes build_joint would produce: sum over blue edges ell of
/// k_ell^2, where k_ell counts (triangle, blue-neighbor) pairs whose blue
/// edge is ell.
BigInt joint_support_size(const ColoredGraph& g);

/// Builds the exact joint distribution of (Δ, u, Δ′, u′).
/// Throws no_rainbow_triangle when T = 0 and support_cap_exceeded when the
/// support would exceed `support_cap` outcomes.
FiniteDistribution build_joint(const ColoredGraph& g,
                               std::uint64_t support_cap = 1'000'000);

/// A random variable: a projection of an Outcome onto `width` integer key
/// slots. Projections may consult the outcome's index within a fixed
/// distribution (used by injection-image variables).
struct DerivedVariable {
  std::string name;
  int width = 0;
  std::function<void(std::size_t idx, const Outcome&, std::int32_t* out)> project;
};

DerivedVariable var_delta();        ///< Δ as (v_r, v_g, v_b)
DerivedVariable var_u();            ///< u
DerivedVariable var_delta_prime();  ///< Δ′ as (v′_r, v′_g, v′_b)
DerivedVariable var_u_prime();      ///< u′
DerivedVariable var_v_r();          ///< Δ.v_r
DerivedVariable var_v_g();          ///< Δ.v_g
DerivedVariable var_v_b();          ///< Δ.v_b
DerivedVariable var_ell_r();        ///< red edge of Δ, the set {v_g, v_b}
DerivedVariable var_L_b();          ///< blue edge {v_r, u}

/// Injection images f_{v_r}(v_g, v_b, u, v′_r, v′_g, v′_b), one per outcome,
/// aligned with the distribution's support order. Every outcome's tuple lies
/// in S_{v_r}: the L_b matching puts v′_r in {v_r, u}.
struct InjectionImageTable {
  std::vector<TxTuple> images;
};

InjectionImageTable build_image_table(const ColoredGraph& g,
                                      const FiniteDistribution& dist);

/// Image-component variables. The table must outlive the returned variable.
DerivedVariable var_w(const InjectionImageTable& table);    ///< image coordinate a
DerivedVariable var_s1(const InjectionImageTable& table);   ///< image coordinate b1
DerivedVariable var_s2(const InjectionImageTable& table);   ///< image coordinate b2
DerivedVariable var_L_r(const InjectionImageTable& table);  ///< image red edge

/// Shannon entropy of the joint law of `vars`, in bits. Marginal
/// probabilities are summed exactly; only the logarithms are floating point.
double entropy(const FiniteDistribution& dist,
               const std::vector<DerivedVariable>& vars);

/// H(X | Y) = H(X, Y) - H(Y).
double conditional_entropy(const FiniteDistribution& dist,
                           const std::vector<DerivedVariable>& x,
                           const std::vector<DerivedVariable>& y);

/// Exact test of X ⊥ Y | Z: P(x,y|z) = P(x|z) P(y|z) at every point of the
/// induced support, in integer arithmetic with no tolerance.
bool check_conditional_independence(const FiniteDistribution& dist,
                                    const std::vector<DerivedVariable>& x,
                                    const std::vector<DerivedVariable>& y,
                                    const std::vector<DerivedVariable>& z);

}  // namespace rainbow
