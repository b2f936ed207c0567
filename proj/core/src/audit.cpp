#include "rainbow/audit.hpp"

#include <cmath>
#include <utility>

#include "rainbow/count.hpp"
#include "rainbow/distribution.hpp"

namespace rainbow {

namespace {

AuditStep equality(std::string id, std::string description, double lhs,
                   double rhs) {
  AuditStep s{std::move(id), std::move(description), "=", lhs, rhs, rhs - lhs,
              false};
  s.pass = std::abs(lhs - rhs) <= kAuditToleranceBits;
  return s;
}

AuditStep upper_bound(std::string id, std::string description, double lhs,
                      double rhs) {
  AuditStep s{std::move(id), std::move(description), "<=", lhs, rhs, rhs - lhs,
              false};
  s.pass = lhs <= rhs + kAuditToleranceBits;
  return s;
}

}  // namespace

AuditLedger audit_proof(const ColoredGraph& g, std::uint64_t support_cap) {
  AuditLedger ledger;
  ledger.n = g.vertex_count();
  ledger.R = g.color_count(Color::Red);
  ledger.G = g.color_count(Color::Green);
  ledger.B = g.color_count(Color::Blue);
  ledger.T = count_rainbow_triangles_fast(g);

  FiniteDistribution dist = build_joint(g, support_cap);
  InjectionImageTable table = build_image_table(g, dist);

  const auto delta = var_delta();
  const auto u = var_u();
  const auto delta_p = var_delta_prime();
  const auto v_r = var_v_r();
  const auto v_g = var_v_g();
  const auto v_b = var_v_b();
  const auto ell_r = var_ell_r();
  const auto L_b = var_L_b();
  const auto w = var_w(table);
  const auto s1 = var_s1(table);
  const auto s2 = var_s2(table);
  const auto L_r = var_L_r(table);

  using V = std::vector<DerivedVariable>;
  // Joint entropies, each computed once; conditionals follow by chain rule.
  const double h_delta = entropy(dist, V{delta});
  const double h_delta_u = entropy(dist, V{delta, u});
  const double h_Lb = entropy(dist, V{L_b});
  const double h_delta_Lb = entropy(dist, V{delta, L_b});
  const double h_deltap_Lb = entropy(dist, V{delta_p, L_b});
  const double h_vr = entropy(dist, V{v_r});
  const double h_u_vr = entropy(dist, V{u, v_r});
  const double h_delta_deltap_Lb = entropy(dist, V{delta, delta_p, L_b});
  const double h_delta_u_deltap = entropy(dist, V{delta, u, delta_p});
  const double h_pre_vr = entropy(dist, V{v_g, v_b, u, delta_p, v_r});
  const double h_img_vr = entropy(dist, V{w, s1, s2, L_r, v_r});
  const double h_w_vr = entropy(dist, V{w, v_r});
  const double h_s1_vr = entropy(dist, V{s1, v_r});
  const double h_s2_vr = entropy(dist, V{s2, v_r});
  const double h_Lr_vr = entropy(dist, V{L_r, v_r});
  const double h_Lr = entropy(dist, V{L_r});
  const double h_u_ellr_vr = entropy(dist, V{u, ell_r, v_r});
  const double h_ellr_vr = entropy(dist, V{ell_r, v_r});

  const double c_delta_Lb = h_delta_Lb - h_Lb;
  const double c_deltap_Lb = h_deltap_Lb - h_Lb;
  const double c_u_delta = h_delta_u - h_delta;
  const double c_u_vr = h_u_vr - h_vr;
  const double c_dd_Lb = h_delta_deltap_Lb - h_Lb;
  const double c_pre_vr = h_pre_vr - h_vr;
  const double c_img_vr = h_img_vr - h_vr;
  const double c_w_vr = h_w_vr - h_vr;
  const double c_s1_vr = h_s1_vr - h_vr;
  const double c_s2_vr = h_s2_vr - h_vr;
  const double c_Lr_vr = h_Lr_vr - h_vr;
  const double c_u_ellr_vr = h_u_ellr_vr - h_vr;
  const double c_ellr_vr = h_ellr_vr - h_vr;

  const double log2_T = std::log2(static_cast<double>(ledger.T));
  const double log2_R = std::log2(static_cast<double>(ledger.R));
  const double log2_G = std::log2(static_cast<double>(ledger.G));
  const double log2_B = std::log2(static_cast<double>(ledger.B));

  auto& steps = ledger.steps;
  steps.push_back(equality(
      "A", "H(delta|L_b) = H(delta'|L_b): both draws follow the same law given L_b",
      c_delta_Lb, c_deltap_Lb));
  steps.push_back(equality(
      "B", "H(delta,u) = H(L_b) + H(delta|L_b): chain rule, (delta,u) determines L_b",
      h_delta_u, h_Lb + c_delta_Lb));
  steps.push_back(equality("C", "H(delta,u) = H(delta) + H(u|delta): chain rule",
                           h_delta_u, h_delta + c_u_delta));
  steps.push_back(equality(
      "D", "H(u|delta) = H(u|v_r): u depends on delta only through v_r",
      c_u_delta, c_u_vr));
  steps.push_back(equality(
      "E", "H(delta) = H(delta'|L_b) + H(L_b) - H(u|v_r): combine B, C, D with A",
      h_delta, c_deltap_Lb + h_Lb - c_u_vr));
  steps.push_back(equality(
      "F1",
      "2H(delta) = H(delta,delta'|L_b) + 2H(L_b) - 2H(u|v_r): doubling E via "
      "conditional independence of the draws",
      2 * h_delta, c_dd_Lb + 2 * h_Lb - 2 * c_u_vr));
  steps.push_back(equality(
      "F2",
      "2H(delta) = H(delta,u,delta') + H(L_b) - 2H(u|v_r): fold one H(L_b) back "
      "into the joint by the chain rule",
      2 * h_delta, h_delta_u_deltap + h_Lb - 2 * c_u_vr));
  steps.push_back(equality(
      "G",
      "H(v_g,v_b,u,delta'|v_r) = H(w,s1,s2,L_r|v_r): the injection renames "
      "outcomes bijectively within each v_r fiber",
      c_pre_vr, c_img_vr));
  steps.push_back(upper_bound(
      "H",
      "H(w,s1,s2,L_r|v_r) <= H(w|v_r) + H(s1|v_r) + H(s2|v_r) + H(L_r|v_r): "
      "conditional subadditivity",
      c_img_vr, c_w_vr + c_s1_vr + c_s2_vr + c_Lr_vr));
  steps.push_back(upper_bound(
      "I1",
      "H(s1|v_r) <= H(u|v_r): s1 ranges over blue neighbors of v_r, where "
      "u is uniform",
      c_s1_vr, c_u_vr));
  steps.push_back(upper_bound(
      "I2",
      "H(s2|v_r) <= H(u|v_r): s2 ranges over blue neighbors of v_r, where "
      "u is uniform",
      c_s2_vr, c_u_vr));
  steps.push_back(upper_bound(
      "J", "H(L_r|v_r) <= H(L_r): conditioning cannot increase entropy",
      c_Lr_vr, h_Lr));
  steps.push_back(upper_bound(
      "K",
      "2H(delta) <= H(v_r,w) + H(L_r) + H(L_b): combine F2, G, H, I1, I2, J",
      2 * h_delta, h_w_vr + h_Lr + h_Lb));
  steps.push_back(upper_bound(
      "L1", "H(v_r,w) <= log2(2G): (v_r,w) is an oriented green edge", h_w_vr,
      1.0 + log2_G));
  steps.push_back(upper_bound("L2", "H(L_r) <= log2(R): L_r is a red edge",
                              h_Lr, log2_R));
  steps.push_back(upper_bound("L3", "H(L_b) <= log2(B): L_b is a blue edge",
                              h_Lb, log2_B));
  steps.push_back(upper_bound(
      "M", "log2(T^2) <= log2(2RGB): the bound itself", 2 * log2_T,
      1.0 + log2_R + log2_G + log2_B));
  steps.push_back(equality(
      "N", "H(delta) = log2(T): delta is uniform over rainbow triangles",
      h_delta, log2_T));

  {
    bool exact = check_conditional_independence(dist, V{delta}, V{delta_p}, V{L_b});
    AuditStep s = equality(
        "CI1",
        "delta and delta' are conditionally independent given L_b (exact "
        "rational test)",
        c_dd_Lb, c_delta_Lb + c_deltap_Lb);
    s.pass = s.pass && exact;
    steps.push_back(std::move(s));
  }
  {
    bool exact = check_conditional_independence(dist, V{u}, V{ell_r}, V{v_r});
    AuditStep s = equality(
        "CI2",
        "u and ell_r are conditionally independent given v_r (exact rational "
        "test)",
        c_u_ellr_vr, c_u_vr + c_ellr_vr);
    s.pass = s.pass && exact;
    steps.push_back(std::move(s));
  }

  ledger.overall = true;
  for (const AuditStep& s : steps) ledger.overall = ledger.overall && s.pass;
  return ledger;
}

}  // namespace rainbow
