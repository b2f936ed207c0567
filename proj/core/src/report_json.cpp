#include "rainbow/report_json.hpp"

#include <sstream>

#include "rainbow/edge_list.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

namespace {

/// Shortest round-trip rendering, identical to the JSON output.
std::string num(double x) { return OrderedJson(x).dump(); }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

OrderedJson to_json(const BoundReport& rep) {
  OrderedJson j;
  j["T"] = rep.T;
  j["R"] = rep.R;
  j["G"] = rep.G;
  j["B"] = rep.B;
  j["lhs"] = rep.lhs.str();
  j["rhs"] = rep.rhs.str();
  j["holds"] = rep.holds;
  j["ratio"] = decimal_string(rep.ratio);
  j["ratio_frac"] = fraction_string(rep.ratio);
  return j;
}

OrderedJson to_json(const InjectionReport& rep) {
  OrderedJson j;
  j["x"] = rep.x;
  j["s_size"] = rep.s_size;
  j["t_size"] = rep.t_size;
  j["well_defined"] = rep.well_defined;
  j["injective"] = rep.injective;
  j["roundtrip_ok"] = rep.roundtrip_ok;
  j["ok"] = rep.ok;
  return j;
}

OrderedJson to_json(const AuditStep& step) {
  OrderedJson j;
  j["id"] = step.id;
  j["description"] = step.description;
  j["relation"] = step.relation;
  j["lhs_bits"] = step.lhs_bits;
  j["rhs_bits"] = step.rhs_bits;
  j["slack"] = step.slack;
  j["pass"] = step.pass;
  return j;
}

OrderedJson to_json(const AuditLedger& ledger) {
  OrderedJson j;
  j["n"] = ledger.n;
  j["R"] = ledger.R;
  j["G"] = ledger.G;
  j["B"] = ledger.B;
  j["T"] = ledger.T;
  j["steps"] = OrderedJson::array();
  for (const AuditStep& s : ledger.steps) j["steps"].push_back(to_json(s));
  j["overall"] = ledger.overall;
  return j;
}

OrderedJson to_json(const SearchResult& result) {
  OrderedJson j;
  j["method"] = search_method_name(result.method);
  j["seed"] = result.seed;
  j["instances_examined"] = result.instances_examined;
  j["best_ratio"] = fraction_string(result.best_ratio);
  j["best_ratio_decimal"] = decimal_string(result.best_ratio);
  j["best_instances"] = OrderedJson::array();
  for (const ColoredGraph& g : result.best_instances) {
    j["best_instances"].push_back(serialize_edge_list(g));
  }
  return j;
}

OrderedJson to_json(const TightnessReport& rep) {
  OrderedJson j;
  j["bound"] = to_json(rep.bound);
  j["ledger"] = to_json(rep.ledger);
  return j;
}

std::string text_summary(const BoundReport& rep) {
  std::ostringstream out;
  out << "T = " << rep.T << ", R = " << rep.R << ", G = " << rep.G
      << ", B = " << rep.B << "\n";
  out << "T^2 = " << rep.lhs.str() << "\n";
  out << "2RGB = " << rep.rhs.str() << "\n";
  out << "holds = " << yes_no(rep.holds) << "\n";
  out << "ratio = " << decimal_string(rep.ratio) << " ("
      << fraction_string(rep.ratio) << ")\n";
  return out.str();
}

std::string text_summary(const std::vector<InjectionReport>& reps) {
  std::ostringstream out;
  out << "x\t|S_x|\t|T_x|\twell_defined\tinjective\troundtrip\tok\n";
  bool all_ok = true;
  for (const InjectionReport& r : reps) {
    out << r.x << "\t" << r.s_size << "\t" << r.t_size << "\t"
        << yes_no(r.well_defined) << "\t" << yes_no(r.injective) << "\t"
        << yes_no(r.roundtrip_ok) << "\t" << yes_no(r.ok) << "\n";
    all_ok = all_ok && r.ok;
  }
  out << "all ok = " << yes_no(all_ok) << "\n";
  return out.str();
}

std::string text_summary(const AuditLedger& ledger) {
  std::ostringstream out;
  out << "n = " << ledger.n << ", R = " << ledger.R << ", G = " << ledger.G
      << ", B = " << ledger.B << ", T = " << ledger.T << "\n";
  for (const AuditStep& s : ledger.steps) {
    out << s.id << "\t" << s.relation << "\tlhs " << num(s.lhs_bits)
        << "\trhs " << num(s.rhs_bits) << "\tslack " << num(s.slack) << "\t"
        << (s.pass ? "pass" : "FAIL") << "\t" << s.description << "\n";
  }
  out << "overall = " << (ledger.overall ? "pass" : "FAIL") << "\n";
  return out.str();
}

std::string text_summary(const SearchResult& result) {
  std::ostringstream out;
  out << "method = " << search_method_name(result.method) << "\n";
  if (result.method == SearchMethod::HillClimb) {
    out << "seed = " << result.seed << "\n";
  }
  out << "instances examined = " << result.instances_examined << "\n";
  out << "best ratio = " << decimal_string(result.best_ratio) << " ("
      << fraction_string(result.best_ratio) << ")\n";
  out << "best instances = " << result.best_instances.size() << "\n";
  for (const ColoredGraph& g : result.best_instances) {
    out << "--\n" << serialize_edge_list(g);
  }
  return out.str();
}

std::string text_summary(const TightnessReport& rep) {
  return text_summary(rep.bound) + text_summary(rep.ledger);
}

std::string ledger_csv(const AuditLedger& ledger) {
  std::ostringstream out;
  out << "id,description,relation,lhs_bits,rhs_bits,slack,pass\n";
  for (const AuditStep& s : ledger.steps) {
    out << s.id << "," << csv_quote(s.description) << "," << csv_quote(s.relation)
        << "," << num(s.lhs_bits) << "," << num(s.rhs_bits) << ","
        << num(s.slack) << "," << (s.pass ? "true" : "false") << "\n";
  }
  return out.str();
}

std::string mapping_csv(const std::vector<MappingRow>& rows) {
  std::ostringstream out;
  out << "x,x1,x2,y,z,z1,z2,a,b1,b2,e_u,e_v\n";
  for (const auto& [x, s, t] : rows) {
    out << x << "," << s.x1 << "," << s.x2 << "," << s.y << "," << s.z << ","
        << s.z1 << "," << s.z2 << "," << t.a << "," << t.b1 << "," << t.b2
        << "," << t.e_u << "," << t.e_v << "\n";
  }
  return out.str();
}

}  // namespace rainbow
