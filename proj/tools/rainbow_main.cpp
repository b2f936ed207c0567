#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rainbow/audit.hpp"
#include "rainbow/count.hpp"
#include "rainbow/edge_list.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/injection.hpp"
#include "rainbow/report_json.hpp"
#include "rainbow/search.hpp"
#include "rainbow/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;

rainbow::ColoredGraph load_graph(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return rainbow::parse_edge_list(buf.str());
  }
  std::ifstream in(path);
  if (!in) {
    rainbow::raise(rainbow::Errc::parse_error, "cannot open file: " + path);
  }
  return rainbow::parse_edge_list(in);
}

std::array<double, 3> parse_bias(const std::string& text) {
  std::array<double, 3> bias{};
  std::istringstream in(text);
  std::string part;
  int i = 0;
  while (std::getline(in, part, ',')) {
    if (i >= 3) rainbow::raise(rainbow::Errc::bad_argument, "bias needs 3 values");
    try {
      bias[static_cast<std::size_t>(i++)] = std::stod(part);
    } catch (const std::exception&) {
      rainbow::raise(rainbow::Errc::bad_argument, "bias values must be numbers");
    }
  }
  if (i != 3) rainbow::raise(rainbow::Errc::bad_argument, "bias needs 3 values");
  return bias;
}

void require_format(const std::string& format,
                    const std::vector<std::string>& allowed) {
  for (const std::string& f : allowed) {
    if (format == f) return;
  }
  std::string msg = "unsupported format for this command: " + format;
  rainbow::raise(rainbow::Errc::bad_argument, msg);
}

void emit(const rainbow::OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for the rainbow-triangle bound T^2 <= 2RGB on "
               "edge-3-colored simple graphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t support_cap = 1'000'000;
  std::uint64_t n_cap = 2000;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "edge-list file, or - for stdin");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "worker thread count")
        ->check(CLI::PositiveNumber);
  };
  auto add_support_cap = [&](CLI::App* cmd) {
    cmd->add_option("--support-cap", support_cap,
                    "largest joint-distribution support accepted")
        ->envname("RAINBOW_SUPPORT_CAP");
  };

  CLI::App* cmd_count = app.add_subcommand("count", "count rainbow triangles");
  bool with_oracle = false;
  add_input(cmd_count);
  add_format(cmd_count);
  add_threads(cmd_count);
  cmd_count->add_flag("--oracle", with_oracle,
                      "cross-check against the brute-force oracle");
  cmd_count->add_option("--n-cap", n_cap, "largest n the oracle accepts")
      ->envname("RAINBOW_N_CAP");

  CLI::App* cmd_bound = app.add_subcommand("bound", "check T^2 <= 2RGB");
  add_input(cmd_bound);
  add_format(cmd_bound);
  add_threads(cmd_bound);

  CLI::App* cmd_inject =
      app.add_subcommand("inject-verify", "verify the injection S_x -> T_x");
  std::int64_t vertex = -1;
  std::string dump_mapping;
  add_input(cmd_inject);
  add_format(cmd_inject);
  add_threads(cmd_inject);
  cmd_inject->add_option("--vertex", vertex, "restrict to one base vertex");
  cmd_inject->add_option("--dump-mapping", dump_mapping,
                         "write the full s -> f_x(s) table as CSV to this file");

  CLI::App* cmd_audit =
      app.add_subcommand("entropy-audit", "audit the entropy proof step by step");
  std::string ledger_csv_path;
  add_input(cmd_audit);
  add_format(cmd_audit);
  add_support_cap(cmd_audit);
  cmd_audit->add_option("--ledger-csv", ledger_csv_path,
                        "also write the ledger as CSV to this file");

  CLI::App* cmd_search = app.add_subcommand("search", "hunt for extremal instances");
  std::int64_t exhaustive_n = -1;
  bool use_hill_climb = false;
  rainbow::HillClimbParams hc;
  std::string bias_text = "1,1,1";
  bool seed_given = false;
  add_format(cmd_search);
  add_threads(cmd_search);
  cmd_search->add_option("--exhaustive", exhaustive_n,
                         "sweep all instances with this many vertices");
  cmd_search->add_flag("--hill-climb", use_hill_climb, "randomized local search");
  cmd_search->add_option("--n", hc.n, "hill-climb vertex count");
  cmd_search->add_option("--p", hc.p, "hill-climb edge density");
  cmd_search->add_option("--bias", bias_text, "red,green,blue color weights");
  cmd_search->add_option("--steps", hc.steps, "hill-climb move proposals");
  cmd_search->add_option("--seed", hc.seed, "hill-climb RNG seed")
      ->each([&](const std::string&) { seed_given = true; });

  CLI::App* cmd_gen = app.add_subcommand("gen", "generate a random instance");
  rainbow::GenParams gen;
  std::string gen_bias_text = "1,1,1";
  cmd_gen->add_option("--n", gen.n, "vertex count")->required();
  cmd_gen->add_option("--p", gen.p, "edge probability");
  cmd_gen->add_option("--bias", gen_bias_text, "red,green,blue color weights");
  cmd_gen->add_option("--seed", gen.seed, "RNG seed")->required();

  CLI::App* cmd_tight =
      app.add_subcommand("tightness", "bound report plus audit slacks");
  add_input(cmd_tight);
  add_format(cmd_tight);
  add_support_cap(cmd_tight);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(cmd_count)) {
      require_format(format, {"json", "text"});
      rainbow::ColoredGraph g = load_graph(input);
      std::uint64_t fast = rainbow::count_rainbow_triangles_fast(g, threads);
      std::optional<std::uint64_t> oracle;
      if (with_oracle) {
        oracle = rainbow::count_rainbow_triangles_oracle(g, n_cap);
      }
      bool match = !oracle || *oracle == fast;
      if (format == "json") {
        rainbow::OrderedJson j;
        j["T"] = fast;
        if (oracle) {
          j["oracle_T"] = *oracle;
          j["match"] = match;
        }
        emit(j);
      } else {
        std::cout << "T = " << fast << "\n";
        if (oracle) {
          std::cout << "oracle T = " << *oracle << "\n"
                    << "match = " << (match ? "yes" : "no") << "\n";
        }
      }
      return match ? kExitOk : kExitChecksFailed;
    }

    if (app.got_subcommand(cmd_bound)) {
      require_format(format, {"json", "text"});
      rainbow::BoundReport rep =
          rainbow::verify_bound(load_graph(input), threads);
      if (format == "json") emit(rainbow::to_json(rep));
      else std::cout << rainbow::text_summary(rep);
      return rep.holds ? kExitOk : kExitChecksFailed;
    }

    if (app.got_subcommand(cmd_inject)) {
      rainbow::ColoredGraph g = load_graph(input);
      std::vector<rainbow::InjectionReport> reports;
      std::vector<rainbow::MappingRow> rows;
      const bool want_rows = !dump_mapping.empty() || format == "csv";
      if (vertex >= 0) {
        auto x = static_cast<rainbow::Vertex>(vertex);
        std::vector<std::pair<rainbow::SxTuple, rainbow::TxTuple>> pairs;
        reports.push_back(
            rainbow::verify_injection(g, x, want_rows ? &pairs : nullptr));
        for (auto& [s, t] : pairs) rows.emplace_back(x, s, t);
      } else {
        reports = rainbow::verify_injection_all(g, threads);
        if (want_rows) {
          for (rainbow::Vertex x = 0; x < g.vertex_count(); ++x) {
            std::vector<std::pair<rainbow::SxTuple, rainbow::TxTuple>> pairs;
            rainbow::verify_injection(g, x, &pairs);
            for (auto& [s, t] : pairs) rows.emplace_back(x, s, t);
          }
        }
      }
      bool all_ok = true;
      for (const auto& r : reports) all_ok = all_ok && r.ok;
      if (!dump_mapping.empty()) {
        std::ofstream out(dump_mapping);
        if (!out) {
          rainbow::raise(rainbow::Errc::bad_argument,
                         "cannot write file: " + dump_mapping);
        }
        out << rainbow::mapping_csv(rows);
      }
      if (format == "json") {
        rainbow::OrderedJson j;
        j["reports"] = rainbow::OrderedJson::array();
        for (const auto& r : reports) j["reports"].push_back(rainbow::to_json(r));
        j["all_ok"] = all_ok;
        emit(j);
      } else if (format == "csv") {
        std::cout << rainbow::mapping_csv(rows);
      } else {
        std::cout << rainbow::text_summary(reports);
      }
      return all_ok ? kExitOk : kExitChecksFailed;
    }

    if (app.got_subcommand(cmd_audit)) {
      rainbow::AuditLedger ledger =
          rainbow::audit_proof(load_graph(input), support_cap);
      if (!ledger_csv_path.empty()) {
        std::ofstream out(ledger_csv_path);
        if (!out) {
          rainbow::raise(rainbow::Errc::bad_argument,
                         "cannot write file: " + ledger_csv_path);
        }
        out << rainbow::ledger_csv(ledger);
      }
      if (format == "json") emit(rainbow::to_json(ledger));
      else if (format == "csv") std::cout << rainbow::ledger_csv(ledger);
      else std::cout << rainbow::text_summary(ledger);
      return ledger.overall ? kExitOk : kExitChecksFailed;
    }

    if (app.got_subcommand(cmd_search)) {
      require_format(format, {"json", "text"});
      if ((exhaustive_n >= 0) == use_hill_climb) {
        rainbow::raise(rainbow::Errc::bad_argument,
                       "choose exactly one of --exhaustive N or --hill-climb");
      }
      rainbow::SearchResult result;
      if (exhaustive_n >= 0) {
        result = rainbow::exhaustive_search(
            static_cast<rainbow::Vertex>(exhaustive_n), threads);
      } else {
        if (!seed_given) {
          rainbow::raise(rainbow::Errc::bad_argument,
                         "--hill-climb requires --seed");
        }
        hc.color_bias = parse_bias(bias_text);
        result = rainbow::hill_climb(hc);
      }
      if (format == "json") emit(rainbow::to_json(result));
      else std::cout << rainbow::text_summary(result);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_gen)) {
      gen.color_bias = parse_bias(gen_bias_text);
      std::cout << rainbow::serialize_edge_list(
          rainbow::random_colored_graph(gen));
      return kExitOk;
    }

    if (app.got_subcommand(cmd_tight)) {
      require_format(format, {"json", "text"});
      rainbow::TightnessReport rep =
          rainbow::tightness_report(load_graph(input), support_cap);
      if (format == "json") emit(rainbow::to_json(rep));
      else std::cout << rainbow::text_summary(rep);
      return rep.bound.holds && rep.ledger.overall ? kExitOk : kExitChecksFailed;
    }
  } catch (const rainbow::Error& e) {
    std::cerr << "error (" << rainbow::errc_name(e.code()) << "): " << e.what()
              << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitChecksFailed;
  }
  return kExitUsage;
}
