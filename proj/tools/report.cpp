#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orbitcalc/calculus.hpp"
#include "orbitcalc/irrep.hpp"
#include "orbitcalc/oracles.hpp"
#include "orbitcalc/orbit.hpp"

namespace orbitcalc::cli {

using nlohmann::json;

std::optional<Check> parse_check(const std::string& name) {
  static const std::map<std::string, Check> names{
      {"roots", Check::Roots}, {"triples", Check::Triples},     {"irrep", Check::Irrep},
      {"orbit", Check::Orbit}, {"struk", Check::Struk}, {"cotangent", Check::Cotangent}};
  const auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string check_name(Check c) {
  switch (c) {
    case Check::Roots: return "roots";
    case Check::Triples: return "triples";
    case Check::Irrep: return "irrep";
    case Check::Orbit: return "orbit";
    case Check::Struk: return "struk";
    case Check::Cotangent: return "cotangent";
  }
  return "?";
}

void Ledger::residual(const std::string& name, double value) {
  // Residuals in the report must be finite and nonnegative; anything else fails the run.
  if (!std::isfinite(value) || value < 0.0) {
    pass_ = false;
    value = std::numeric_limits<double>::max();
  }
  auto [it, inserted] = residuals_.emplace(name, value);
  if (!inserted) it->second = std::max(it->second, value);
}

void Ledger::merge(const Ledger& other) {
  for (const auto& [k, v] : other.residuals_) residual(k, v);
  require(other.pass_);
}

json Ledger::residuals() const {
  json out = json::object();
  for (const auto& [k, v] : residuals_) out[k] = v;
  return out;
}

namespace {

json to_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json to_json(const Eigen::MatrixXi& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

std::string pass_word(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

json roots_section(const RootSystem& rs, const Tolerance& tol, Ledger& ledger) {
  const RootDatum& rd = rs.roots;
  json out;

  const AlgebraReport ar = check_algebra(rs.algebra, tol);
  json checks = json::object();
  for (const auto& item : ar.items) {
    checks[item.name] = {{"passed", item.passed}, {"residual", item.residual}};
    if (!item.detail.empty()) checks[item.name]["detail"] = item.detail;
    ledger.residual("algebra." + item.name, item.residual);
  }
  out["algebra_checks"] = checks;

  out["dim"] = rs.algebra.dim();
  out["rank"] = rd.rank();
  out["roots"] = rd.size();
  out["positive_roots"] = rd.positive.size();
  out["simple_roots"] = rd.simple.size();
  json positives = json::array();
  for (const auto& c : rd.simple_coordinates) positives.push_back(c);
  out["positive_simple_coordinates"] = positives;
  out["cartan_matrix"] = to_json(rs.cartan_matrix);

  const auto oracle_roots = oracles::positive_roots_from_cartan(rs.cartan_matrix);
  auto sorted = rd.simple_coordinates;
  std::sort(sorted.begin(), sorted.end());
  const bool count_ok = oracle_roots == sorted;
  const bool cartan_ok = oracles::cartan_matrix(rd, rs.kil) == rs.cartan_matrix;
  out["oracle_positive_roots"] = oracle_roots.size();
  out["oracle_match"] = count_ok && cartan_ok;

  const bool ok = ar.all_passed() && static_cast<int>(rd.simple.size()) == rd.rank() &&
                  rd.size() == 2 * static_cast<int>(rd.positive.size()) && count_ok && cartan_ok;
  out["verdict"] = pass_word(ok);
  ledger.require(ok);
  return out;
}

json triples_section(const RootSystem& rs, const Tolerance& tol, Ledger& ledger) {
  json out = json::array();
  bool ok = true;
  for (const auto& t : rs.triples) {
    const TripleResiduals r = triple_residuals(rs.algebra, rs.roots, t);
    ledger.residual("triple.e_f_minus_h", r.e_f_minus_h);
    ledger.residual("triple.h_e", r.h_e);
    ledger.residual("triple.h_f", r.h_f);
    ledger.residual("triple.f_star", r.f_star);
    ledger.residual("triple.h_in_ih", r.h_in_ih);
    ok = ok && r.max() < tol.residual;
    const auto p = std::find(rs.roots.positive.begin(), rs.roots.positive.end(), t.root) -
                   rs.roots.positive.begin();
    out.push_back({{"root", rs.roots.simple_coordinates[static_cast<size_t>(p)]},
                   {"max_residual", r.max()}});
  }
  ledger.require(ok);
  return {{"triples", out}, {"verdict", pass_word(ok)}};
}

namespace {

json irrep_section(const RootSystem& rs, const Irrep& irrep, const Tolerance& tol, Ledger& ledger) {
  const HighestWeight& hw = irrep.highest_weight;
  const long weyl = oracles::weyl_dimension(rs.roots, rs.kil, hw);
  const auto oracle = oracles::freudenthal_multiplicities(rs.roots, rs.kil, hw);

  std::map<std::vector<int>, int> computed;
  json table = json::array();
  for (const auto& ws : irrep.weights) {
    computed[ws.dynkin] += ws.multiplicity();
    const auto it = oracle.find(ws.dynkin);
    table.push_back({{"dynkin", ws.dynkin},
                     {"multiplicity", ws.multiplicity()},
                     {"oracle", it == oracle.end() ? 0 : it->second}});
  }
  const double hom = homomorphism_residual(irrep.rep, rs.algebra);
  const double unit = unitarity_residual(irrep.rep);
  const int top = highest_weight_space_dim(irrep.rep, rs, tol);
  ledger.residual("irrep.homomorphism", hom);
  ledger.residual("irrep.unitarity", unit);

  const bool ok = weyl == irrep.dim() && computed == oracle && top == 1 && hom < 1e-8 &&
                  unit < tol.residual;
  ledger.require(ok);
  return {{"dimension", irrep.dim()},
          {"weyl_dimension", weyl},
          {"tensor_factors", {irrep.defining_factors, irrep.conjugate_factors}},
          {"highest_weight_space_dim", top},
          {"weights", table},
          {"multiplicities_match", computed == oracle},
          {"verdict", pass_word(ok)}};
}

json orbit_section(const RootSystem& rs, const Irrep& irrep, const MomentumFunctional& lambda,
                   const Tolerance& tol, Ledger& ledger) {
  const MomentumChecks mc = check_momentum(rs, irrep, lambda);
  double label_err = 0.0;
  double lowering_err = 0.0;
  for (size_t j = 0; j < mc.labels.size(); ++j) {
    label_err = std::max(label_err, std::abs(mc.labels[j] - irrep.highest_weight.dynkin_labels[j]));
    lowering_err = std::max(lowering_err, std::abs(mc.labels[j] - mc.lowering_norms[j]));
  }
  ledger.residual("orbit.label", label_err);
  ledger.residual("orbit.lowering_norm", lowering_err);
  ledger.residual("orbit.raising", mc.raising_residual);
  ledger.residual("orbit.imaginary", mc.imaginary_residual);
  ledger.residual("orbit.integrality", mc.max_positive_label_residual);

  const RealVector z = z_diamond(lambda, rs.kil);
  const OrbitData od = stabilizer_split(rs.algebra, z, rs.kil, tol);
  const bool ok = label_err < tol.integrality && lowering_err < tol.integrality &&
                  mc.raising_residual < tol.residual && mc.imaginary_residual < tol.residual &&
                  mc.max_positive_label_residual < tol.integrality;
  ledger.require(ok);
  return {{"lambda", to_json(lambda.values)},
          {"labels", mc.labels},
          {"lowering_norms", mc.lowering_norms},
          {"z_diamond", to_json(z)},
          {"dim_k", od.k_basis.cols()},
          {"dim_m", od.m_basis.cols()},
          {"verdict", pass_word(ok)}};
}

json struk_section(const RootSystem& rs, const MomentumFunctional& lambda, const Tolerance& tol,
                   Ledger& ledger) {
  const OrbitData od = stabilizer_split(rs.algebra, z_diamond(lambda, rs.kil), rs.kil, tol);
  const StrukReport sr = verify_struk(od, rs, lambda, tol);
  ledger.residual("struk.k_distance", sr.k_distance);
  ledger.residual("struk.m_distance", sr.m_distance);
  ledger.residual("struk.kk", sr.kk_residual);
  ledger.residual("struk.km", sr.km_residual);
  ledger.residual("struk.h_in_k", sr.h_in_k_residual);
  ledger.residual("struk.z_commutes", sr.z_commutes_residual);
  ledger.residual("struk.kil_orthogonality", sr.kil_orthogonality);
  ledger.require(sr.passed);

  json lemma = json::array();
  for (const auto& c : sr.lemma)
    lemma.push_back({{"label", c.label},
                     {"e_distance", c.e_distance},
                     {"f_distance", c.f_distance},
                     {"holds", c.holds()}});
  json stab = json::array();
  for (int r : sr.stabilizer_roots) {
    const auto p = std::find(rs.roots.positive.begin(), rs.roots.positive.end(), r) -
                   rs.roots.positive.begin();
    stab.push_back(rs.roots.simple_coordinates[static_cast<size_t>(p)]);
  }
  return {{"dim_k", sr.dim_k},
          {"dim_m", sr.dim_m},
          {"k_distance", sr.k_distance},
          {"m_distance", sr.m_distance},
          {"stabilizer_roots", stab},
          {"lemma", lemma},
          {"verdict", pass_word(sr.passed)}};
}

json cotangent_section(const RootSystem& rs, const HighestWeight& hw, const Tolerance& tol,
                       Ledger& ledger) {
  TheoremOptions opts;
  opts.tol = tol;
  const CotangentReport rep = verify_main_theorem(rs, hw, opts);
  ledger.residual("cotangent.annihilator_distance", rep.q.annihilator_distance);
  ledger.residual("cotangent.g_o_residual", rep.q.g_o_residual);
  ledger.residual("cotangent.leibniz", rep.leibniz_residual);
  ledger.residual("cotangent.d_on_g_o", rep.d_on_g_o_residual);
  ledger.residual("cotangent.ideal", rep.ideal.ideal_residual);
  ledger.residual("cotangent.ideal_commute", rep.ideal.commute_residual);
  ledger.require(rep.verdict);

  json witnesses = json::array();
  for (const auto& w : rep.witnesses) {
    ledger.residual("cotangent.witness_span", w.span_residual);
    json j{{"root", w.root},
           {"kind", w.kind == WitnessKind::CartanDirection ? "cartan" : "lowering"},
           {"span_residual", w.span_residual},
           {"cartan_residual", w.cartan_residual},
           {"root_vector_residual", w.root_vector_residual},
           {"passed", w.passed}};
    if (w.kind == WitnessKind::LoweringDirection) j["f_alpha_value"] = complex_json(w.target_value);
    witnesses.push_back(j);
  }

  json out{{"dim_g", rep.dim_g},
           {"dim_g_lambda", rep.dim_g_lambda},
           {"dim_g_o", rep.dim_g_o},
           {"N", rep.dim_h},
           {"dim_Q", rep.q.dim_q},
           {"dim_Q_tight", rep.q.dim_q_tight},
           {"dim_Q_loose", rep.q.dim_q_loose},
           {"rank_stable", rep.q.rank_stable()},
           {"functionals", rep.q.functionals},
           {"dim_bimodule", rep.dim_bimodule ? json(*rep.dim_bimodule) : json(nullptr)},
           {"witnesses", witnesses},
           {"witnesses_passed", rep.witnesses_passed()},
           {"trivial", rep.trivial},
           {"verdict", pass_word(rep.verdict)}};
  if (rep.trivial) out["note"] = "trivial weight: g_lambda = 0, statement holds vacuously";
  return out;
}

}  // namespace

json weight_case(const RootSystem& rs, const std::vector<int>& labels, const std::set<Check>& checks,
                 const Tolerance& tol, Ledger& ledger) {
  const HighestWeight hw{labels};
  hw.validate(rs.roots.rank());
  json out{{"weight", labels}};

  const bool need_irrep = checks.count(Check::Irrep) || checks.count(Check::Orbit) ||
                          checks.count(Check::Struk);
  if (need_irrep) {
    IrrepOptions io;
    io.tol = tol;
    const Irrep irrep = build_irrep(rs, hw, io);
    const MomentumFunctional lambda = momentum(irrep);
    if (checks.count(Check::Irrep)) out["irrep"] = irrep_section(rs, irrep, tol, ledger);
    if (checks.count(Check::Orbit)) out["orbit"] = orbit_section(rs, irrep, lambda, tol, ledger);
    if (checks.count(Check::Struk)) out["struk"] = struk_section(rs, lambda, tol, ledger);
  }
  if (checks.count(Check::Cotangent)) out["cotangent"] = cotangent_section(rs, hw, tol, ledger);
  return out;
}

}  // namespace orbitcalc::cli
