#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbitcalc/root_system.hpp"

namespace orbitcalc::cli {

enum class Check { Roots, Triples, Irrep, Orbit, Struk, Cotangent };

std::optional<Check> parse_check(const std::string& name);
std::string check_name(Check c);

/// Running maximum of every named residual, plus the overall verdict.
class Ledger {
 public:
  void residual(const std::string& name, double value);
  void require(bool ok) { pass_ = pass_ && ok; }
  void merge(const Ledger& other);
  bool passed() const { return pass_; }
  nlohmann::json residuals() const;

 private:
  std::map<std::string, double> residuals_;
  bool pass_ = true;
};

nlohmann::json roots_section(const RootSystem& rs, const Tolerance& tol, Ledger& ledger);
nlohmann::json triples_section(const RootSystem& rs, const Tolerance& tol, Ledger& ledger);

/// Sections that depend on a highest weight.  `labels` is validated against
/// the rank; errors propagate to the caller.
nlohmann::json weight_case(const RootSystem& rs, const std::vector<int>& labels,
                           const std::set<Check>& checks, const Tolerance& tol, Ledger& ledger);

}  // namespace orbitcalc::cli
