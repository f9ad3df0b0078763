#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orbitcalc/algebra_io.hpp"
#include "orbitcalc/errors.hpp"
#include "report.hpp"

using nlohmann::json;
using namespace orbitcalc;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string algebra;
  std::vector<int> weight;
  std::string weights_file;
  std::vector<std::string> checks;
  std::string output;
  std::string format = "text";
};

// ORBITCALC_TOL is "residual" or "residual,rank_rel".
Tolerance tolerance_from_env() {
  Tolerance tol = kDefaultTolerance;
  const char* env = std::getenv("ORBITCALC_TOL");
  if (env == nullptr || *env == '\0') return tol;
  std::string text(env);
  const auto comma = text.find(',');
  try {
    size_t used = 0;
    const std::string first = text.substr(0, comma);
    tol.residual = std::stod(first, &used);
    if (used != first.size()) throw std::invalid_argument(first);
    if (comma != std::string::npos) {
      const std::string second = text.substr(comma + 1);
      tol.rank_rel = std::stod(second, &used);
      if (used != second.size()) throw std::invalid_argument(second);
    }
  } catch (const std::exception&) {
    throw UsageError("ORBITCALC_TOL must be 'residual' or 'residual,rank', got '" + text + "'");
  }
  if (!(tol.residual > 0.0) || !(tol.rank_rel > 0.0))
    throw UsageError("ORBITCALC_TOL values must be positive");
  return tol;
}

std::vector<std::vector<int>> read_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open weights file " + path);
  std::vector<std::vector<int>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<int> w;
    std::string tok;
    while (ss >> tok) {
      try {
        size_t used = 0;
        w.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw UsageError(path + ":" + std::to_string(lineno) + ": bad label '" + tok + "'");
      }
    }
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

LieAlgebra load(const std::string& spec) {
  if (std::filesystem::exists(spec)) return io::load_algebra(spec);
  return algebras::by_name(spec);
}

std::set<cli::Check> default_checks(const std::string& command) {
  if (command == "roots") return {cli::Check::Roots, cli::Check::Triples};
  if (command == "irrep") return {cli::Check::Irrep};
  if (command == "orbit") return {cli::Check::Orbit, cli::Check::Struk};
  return {cli::Check::Cotangent};
}

void print_text(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  auto scalar_array = [](const json& a) {
    for (const auto& x : a)
      if (x.is_object() || (x.is_array() && !x.empty() && x.front().is_structured())) return false;
    return true;
  };
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      print_text(os, value, indent + 2);
    } else if (value.is_array() && !scalar_array(value)) {
      os << pad << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          os << pad << "  -\n";
          print_text(os, item, indent + 4);
        } else {
          os << pad << "  - " << item.dump() << "\n";
        }
      }
    } else {
      os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

int run(const RunConfig& cfg) {
  const Tolerance tol = tolerance_from_env();

  std::set<cli::Check> checks;
  if (cfg.checks.empty()) {
    checks = default_checks(cfg.command);
  } else {
    for (const auto& name : cfg.checks) {
      const auto c = cli::parse_check(name);
      if (!c) throw UsageError("unknown check '" + name + "'");
      checks.insert(*c);
    }
  }

  std::vector<std::vector<int>> weights;
  if (!cfg.weight.empty()) weights.push_back(cfg.weight);
  if (!cfg.weights_file.empty()) {
    const auto more = read_weights(cfg.weights_file);
    weights.insert(weights.end(), more.begin(), more.end());
  }
  const bool needs_weight = checks.count(cli::Check::Irrep) || checks.count(cli::Check::Orbit) ||
                            checks.count(cli::Check::Struk) || checks.count(cli::Check::Cotangent);
  if (needs_weight && weights.empty()) throw UsageError("--weight or --weights-file is required");

  LieAlgebra algebra = [&] {
    try {
      return load(cfg.algebra);
    } catch (const SpecError& e) {
      throw UsageError(e.what());
    }
  }();
  const RootSystem rs = analyze(std::move(algebra), tol);

  json jchecks = json::array();
  for (auto c : checks) jchecks.push_back(cli::check_name(c));
  json config{{"command", cfg.command},
              {"algebra", cfg.algebra},
              {"weights", weights},
              {"checks", jchecks},
              {"format", cfg.format},
              {"tolerance", {{"residual", tol.residual}, {"rank_rel", tol.rank_rel}}}};

  cli::Ledger total;
  json results = json::array();
  if (checks.count(cli::Check::Roots) || checks.count(cli::Check::Triples)) {
    cli::Ledger ledger;
    json entry{{"algebra", rs.algebra.label()}};
    if (checks.count(cli::Check::Roots)) entry["roots"] = cli::roots_section(rs, tol, ledger);
    if (checks.count(cli::Check::Triples)) entry["triples"] = cli::triples_section(rs, tol, ledger);
    entry["verdict"] = ledger.passed() ? "pass" : "fail";
    total.merge(ledger);
    results.push_back(entry);
  }
  std::set<cli::Check> weighted = checks;
  weighted.erase(cli::Check::Roots);
  weighted.erase(cli::Check::Triples);
  if (!weighted.empty()) {
    for (const auto& w : weights) {
      cli::Ledger ledger;
      json entry;
      try {
        entry = cli::weight_case(rs, w, weighted, tol, ledger);
      } catch (const InvalidWeight& e) {
        throw UsageError(e.what());
      } catch (const Error& e) {
        entry = {{"weight", w}, {"error", e.what()}};
        ledger.require(false);
      }
      entry["verdict"] = ledger.passed() ? "pass" : "fail";
      total.merge(ledger);
      results.push_back(entry);
    }
  }

  json doc{{"config", config},
           {"results", results},
           {"residuals", total.residuals()},
           {"verdict", total.passed() ? "pass" : "fail"},
           {"version", ORBITCALC_VERSION}};

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw UsageError("cannot write " + cfg.output);
  }
  std::ostream& os = cfg.output.empty() ? std::cout : file;
  if (cfg.format == "json") {
    os << doc.dump(2) << "\n";
  } else {
    os << "orbitcalc " << ORBITCALC_VERSION << "  " << cfg.command << "  " << cfg.algebra << "\n";
    for (const auto& r : results) {
      os << "\n";
      print_text(os, r, 0);
    }
    os << "\nresiduals:\n";
    print_text(os, doc["residuals"], 2);
    os << "\nverdict: " << doc["verdict"].get<std::string>() << "\n";
  }
  return total.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root data, highest-weight irreps, coadjoint orbits and first-order calculi"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"roots", "root counts, simple roots and sl2 triple residuals"},
      {"irrep", "irrep dimension and weight table against the Weyl and Freudenthal oracles"},
      {"orbit", "momentum functional, Z, stabilizer split and its root description"},
      {"verify", "span of the derivation range against g_lambda; exit 0 iff it matches"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--algebra,-a", cfg.algebra, "built-in name (su3, so5, su2+su2) or JSON spec path")
        ->required();
    sub->add_option("--weight,-w", cfg.weight, "Dynkin labels of the highest weight")->expected(1, -1);
    sub->add_option("--weights-file", cfg.weights_file, "file with one weight per line");
    sub->add_option("--checks", cfg.checks, "roots,triples,irrep,orbit,struk,cotangent")->delimiter(',');
    sub->add_option("--output,-o", cfg.output, "write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "orbitcalc: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "orbitcalc: " << e.what() << "\n";
    return kFail;
  }
}
