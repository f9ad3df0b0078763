#include "orbitcalc/algebra_io.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "orbitcalc/errors.hpp"

namespace orbitcalc::io {

using nlohmann::json;

namespace {

const std::set<std::string> kFields{"label", "dim", "structure_constants", "defining_rep"};

Matrix matrix_from_json(const json& m, size_t index) {
  if (!m.is_array() || m.empty())
    throw SpecError("defining_rep[" + std::to_string(index) + "] must be a nonempty array");
  const auto count = m.size();
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(count))));
  if (static_cast<size_t>(n * n) != count)
    throw SpecError("defining_rep[" + std::to_string(index) + "] has " + std::to_string(count) +
                    " entries, not a square count");
  Matrix out(n, n);
  for (size_t e = 0; e < count; ++e) {
    const json& z = m[e];
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
      throw SpecError("defining_rep entries must be [re, im] number pairs");
    const auto r = static_cast<Eigen::Index>(e) / n;
    const auto c = static_cast<Eigen::Index>(e) % n;
    out(r, c) = cplx{z[0].get<double>(), z[1].get<double>()};
  }
  return out;
}

}  // namespace

LieAlgebra algebra_from_json(const json& doc) {
  if (!doc.is_object()) throw SpecError("algebra spec must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!kFields.count(key)) throw SpecError("unknown field '" + key + "' in algebra spec");
  for (const auto& key : kFields)
    if (!doc.contains(key)) throw SpecError("missing field '" + key + "' in algebra spec");

  if (!doc["label"].is_string()) throw SpecError("'label' must be a string");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long>() <= 0)
    throw SpecError("'dim' must be a positive integer");
  const int dim = doc["dim"].get<int>();

  const json& sc = doc["structure_constants"];
  if (!sc.is_array()) throw SpecError("'structure_constants' must be an array");
  std::vector<LieAlgebra::Triplet> triplets;
  for (const auto& t : sc) {
    if (!t.is_array() || t.size() != 4 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || !t[2].is_number_integer() || !t[3].is_number())
      throw SpecError("structure constants must be [i, j, k, value] with integer indices");
    triplets.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<double>()});
  }

  const json& rep = doc["defining_rep"];
  if (!rep.is_array()) throw SpecError("'defining_rep' must be an array");
  std::vector<Matrix> mats;
  for (size_t i = 0; i < rep.size(); ++i) mats.push_back(matrix_from_json(rep[i], i));
  if (static_cast<int>(mats.size()) != dim)
    throw SpecError("'defining_rep' must hold exactly 'dim' matrices");

  std::vector<std::string> labels;
  for (int i = 0; i < dim; ++i) labels.push_back("X" + std::to_string(i));
  return LieAlgebra(doc["label"].get<std::string>(), std::move(labels), triplets, std::move(mats));
}

LieAlgebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open algebra spec " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw SpecError("algebra spec " + path.string() + " is not valid JSON: " + e.what());
  }
  return algebra_from_json(doc);
}

json algebra_to_json(const LieAlgebra& a) {
  json sc = json::array();
  for (const auto& t : a.structure_triplets()) sc.push_back({t.i, t.j, t.k, t.value});
  json rep = json::array();
  for (const auto& m : a.defining_rep()) {
    json flat = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) flat.push_back({m(r, c).real(), m(r, c).imag()});
    rep.push_back(std::move(flat));
  }
  return json{{"label", a.label()}, {"dim", a.dim()}, {"structure_constants", sc},
              {"defining_rep", rep}};
}

}  // namespace orbitcalc::io
