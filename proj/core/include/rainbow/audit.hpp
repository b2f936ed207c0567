#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Comparison tolerance for ledger steps, in bits. Probabilities are exact;
/// only logarithms and their sums carry floating-point error, which stays
/// far below this at the supported instance sizes.
inline constexpr double kAuditToleranceBits = 1e-9;

/// One audited proof step: an entropy equality or inequality with both
/// sides evaluated. slack = rhs_bits - lhs_bits.
struct AuditStep {
  std::string id;
  std::string description;
  std::string relation;  ///< "=" or "<="
  double lhs_bits = 0.0;
  double rhs_bits = 0.0;
  double slack = 0.0;
  bool pass = false;
};

struct AuditLedger {
  std::uint64_t n = 0;  ///< vertex count
  std::uint64_t R = 0;
  std::uint64_t G = 0;
  std::uint64_t B = 0;
  std::uint64_t T = 0;
  std::vector<AuditStep> steps;
  bool overall = false;  ///< every step passed
};

/// Evaluates the full entropy argument for T^2 <= 2RGB on g, one step per
/// identity or inequality, ending with two exact conditional-independence
/// checks. Throws no_rainbow_triangle when T = 0 and support_cap_exceeded
/// when the joint distribution would be larger than support_cap.
AuditLedger audit_proof(const ColoredGraph& g,
                        std::uint64_t support_cap = 1'000'000);

}  // namespace rainbow
