#ifndef KLRC_SERIALIZE_HPP
#define KLRC_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "criterion.hpp"
#include "representation.hpp"
#include "tableaux.hpp"
#include "witness.hpp"

namespace klrc::io {

using json = nlohmann::json;

// Objects use std::map-backed nlohmann::json, so keys are emitted sorted and
// dump() is byte-stable.

inline json to_json(const LieRank& r) { return r.to_string(); }
inline LieRank rank_from_json(const json& j) { return parse_rank(j.get<std::string>()); }

inline json to_json(const Multicharge& k) { return k.to_string(); }
inline Multicharge multicharge_from_json(const json& j) { return parse_multicharge(j.get<std::string>()); }

inline json to_json(const Multipartition& m) { return m.to_string(); }
inline Multipartition multipartition_from_json(const json& j) { return parse_multipartition(j.get<std::string>()); }

inline json to_json(const ResidueSequence& i) { return json(std::vector<int>(i.begin(), i.end())); }
inline ResidueSequence residues_from_json(const json& j) { return j.get<std::vector<int>>(); }

inline json to_json(const Tableau& t) { return json(t.rows()); }
inline Tableau tableau_from_json(const json& j) { return Tableau(j.get<Tableau::Rows>()); }

/// A weight as the sorted multiset of its fundamental-weight indices.
inline json to_json(const WeightVector& w) {
  std::vector<int> out;
  for (const auto& [i, m] : w.multiplicities())
    for (int k = 0; k < m; ++k) out.push_back(i);
  return out;
}
inline WeightVector weight_from_json(const json& j) {
  std::map<Residue, int> m;
  for (int i : j.get<std::vector<int>>()) {
    if (i < 0) throw std::invalid_argument("weight: negative residue");
    ++m[i];
  }
  return WeightVector(std::move(m));
}

template <class Field>
json to_json(const Matrix<Field>& m) {
  json rows = json::array();
  for (std::size_t a = 0; a < m.rows(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < m.cols(); ++b) row.push_back(Field::to_string(m(a, b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Field>
Matrix<Field> matrix_from_json(const json& j, const Field& f, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) throw std::invalid_argument("matrix: expected " + std::to_string(dim) + " rows");
  Matrix<Field> m(f, dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    if (!j[a].is_array() || j[a].size() != dim) throw std::invalid_argument("matrix: expected " + std::to_string(dim) + " columns");
    for (std::size_t b = 0; b < dim; ++b) m(a, b) = f.parse(j[a][b].get<std::string>());
  }
  return m;
}

template <class Field>
json vector_to_json(const std::vector<typename Field::value_type>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(Field::to_string(x));
  return out;
}

template <class Field>
json to_json(const Representation<Field>& rep) {
  json j;
  j["field"] = rep.field.descriptor();
  j["ell"] = to_json(rep.rank);
  j["weight"] = to_json(rep.weight);
  j["n"] = rep.n;
  j["dimension"] = rep.dim;
  j["labels"] = rep.labels;
  json idem = json::array();
  for (const auto& [i, m] : rep.idempotents) idem.push_back({{"i", to_json(i)}, {"matrix", to_json(m)}});
  j["idempotents"] = std::move(idem);
  json xs = json::array(), ps = json::array();
  for (const auto& m : rep.x) xs.push_back(to_json(m));
  for (const auto& m : rep.psi) ps.push_back(to_json(m));
  j["x"] = std::move(xs);
  j["psi"] = std::move(ps);
  return j;
}

/// The field descriptor must match `f`.
template <class Field>
Representation<Field> representation_from_json(const json& j, const Field& f) {
  if (j.at("field").get<std::string>() != f.descriptor())
    throw std::invalid_argument("representation: field '" + j.at("field").get<std::string>() + "' does not match " + f.descriptor());
  const auto dim = j.at("dimension").get<std::size_t>();
  const int n = j.at("n").get<int>();
  Representation<Field> rep(f, rank_from_json(j.at("ell")), weight_from_json(j.at("weight")), n, dim);
  for (const auto& e : j.at("idempotents")) {
    auto i = residues_from_json(e.at("i"));
    if (!rep.idempotents.emplace(i, matrix_from_json(e.at("matrix"), f, dim)).second)
      throw std::invalid_argument("representation: duplicate idempotent e(" + to_string(i) + ")");
  }
  const auto& xs = j.at("x");
  const auto& ps = j.at("psi");
  if (xs.size() != static_cast<std::size_t>(n) || ps.size() != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("representation: wrong number of generator matrices");
  for (int r = 1; r <= n; ++r) rep.x_matrix(r) = matrix_from_json(xs[static_cast<std::size_t>(r - 1)], f, dim);
  for (int r = 1; r < n; ++r) rep.psi_matrix(r) = matrix_from_json(ps[static_cast<std::size_t>(r - 1)], f, dim);
  if (j.contains("labels")) rep.labels = j.at("labels").get<std::vector<std::string>>();
  rep.validate();
  return rep;
}

/// Reads the field descriptor from the document and dispatches.
inline AnyField field_of(const json& j) { return parse_field(j.at("field").get<std::string>()); }

inline json to_json(const CriterionWitness& w) {
  json j;
  switch (w.kind) {
    case CriterionWitness::Kind::WindowPairing:
      j["condition"] = "ss1";
      j["residue"] = w.index;
      j["pairing"] = w.value;
      break;
    case CriterionWitness::Kind::ChargeTooSmall:
    case CriterionWitness::Kind::ChargeTooLarge:
      j["condition"] = "ss2";
      j["component"] = w.index;
      j["charge_bar"] = w.value;
      j["side"] = w.kind == CriterionWitness::Kind::ChargeTooSmall ? "lower" : "upper";
      break;
  }
  j["description"] = w.describe();
  return j;
}

inline json to_json(const SemisimplicityReport& r, const Multicharge& kappa, int n, const LieRank& rank) {
  json j;
  j["ell"] = to_json(rank);
  j["charge"] = to_json(kappa);
  j["n"] = n;
  j["ss1"] = r.ss1;
  j["ss2"] = r.ss2;
  j["verdict"] = r.verdict;
  j["outside_theorem_range"] = r.outside_theorem_range;
  json ws = json::array();
  for (const auto& w : r.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

template <class Field>
json to_json(const WitnessCertificate<Field>& c) {
  json j;
  j["kind"] = to_string(c.plan.kind);
  j["component"] = c.plan.component;
  if (c.plan.other_component) j["other_component"] = c.plan.other_component;
  if (c.plan.module_charge) j["module_charge"] = to_json(*c.plan.module_charge);
  if (c.shape) j["shape"] = to_json(*c.shape);
  if (c.least_dominant) j["least_dominant"] = to_json(*c.least_dominant);
  j["submodule_vector"] = vector_to_json<Field>(c.sub_vector);
  j["module_verified"] = c.module_verified;
  j["line_invariant"] = c.line_invariant;
  j["killed_by_generators"] = c.killed_by_generators;
  j["invariant_line_families"] = c.invariant_line_families;
  j["no_retraction"] = c.no_retraction;
  j["retraction_system"] = {{"coefficient_rank", c.retraction_coefficient_rank}, {"augmented_rank", c.retraction_augmented_rank}};
  j["certified"] = c.certified();
  j["notes"] = c.notes;
  if (c.rep) j["module"] = to_json(*c.rep);
  return j;
}

}  // namespace klrc::io

#endif  // KLRC_SERIALIZE_HPP
