#ifndef KLRC_WITNESS_HPP
#define KLRC_WITNESS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "criterion.hpp"
#include "exactla.hpp"
#include "repmodels.hpp"
#include "specht.hpp"

namespace klrc {

enum class WitnessKind { Boundary, Repeat, Ss2Fail, Ss1Fail };

inline std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Boundary: return "boundary";
    case WitnessKind::Repeat: return "repeat";
    case WitnessKind::Ss2Fail: return "ss2fail";
    case WitnessKind::Ss1Fail: return "ss1fail";
  }
  return {};
}

inline WitnessKind parse_witness_kind(const std::string& s) {
  if (s == "boundary") return WitnessKind::Boundary;
  if (s == "repeat") return WitnessKind::Repeat;
  if (s == "ss2fail") return WitnessKind::Ss2Fail;
  if (s == "ss1fail") return WitnessKind::Ss1Fail;
  throw std::invalid_argument("unknown witness kind '" + s + "'");
}

/// Which non-semisimplicity argument applies, and with which data.
struct WitnessPlan {
  WitnessKind kind;
  int component = 0;        // j
  int other_component = 0;  // j' for ss1fail
  /// Specht shapes to try in order (ss2fail, ss1fail); empty otherwise.
  std::vector<Multipartition> shapes;
  /// Multicharge the Specht module is built over (kappa-bar or kappa-hat).
  std::optional<Multicharge> module_charge;
};

namespace detail {

inline Multipartition place(int level, const std::vector<std::pair<int, Partition>>& comps) {
  std::vector<Partition> out(static_cast<std::size_t>(level));
  for (const auto& [j, p] : comps) out[static_cast<std::size_t>(j - 1)] = p;
  return Multipartition(std::move(out));
}

inline Partition hook(int arm_row, int leg) {
  Partition p{arm_row};
  for (int k = 0; k < leg; ++k) p.push_back(1);
  return p;
}

}  // namespace detail

/// Routing order: boundary charge, repeated charge, (SS2) failure, (SS1) failure.
/// Returns nullopt when the algebra is semisimple.
inline std::optional<WitnessPlan> route_witness(const Multicharge& kappa, int n, const LieRank& rank) {
  if (n < 2) throw std::invalid_argument("route_witness: n must be at least 2");
  if (is_semisimple(kappa, n, rank).verdict) return std::nullopt;
  const auto bar = kappa.bar(rank);
  const int l = kappa.level();
  for (int j = 1; j <= l; ++j)
    if (detail::is_end(bar[static_cast<std::size_t>(j - 1)], rank)) return WitnessPlan{WitnessKind::Boundary, j, 0, {}, std::nullopt};

  const auto ss2 = ss2_check(kappa, n, rank);
  if (ss2.holds) {
    for (int j = 1; j <= l; ++j)
      for (int j2 = 1; j2 <= l; ++j2)
        if (j2 != j && bar[static_cast<std::size_t>(j - 1)] == bar[static_cast<std::size_t>(j2 - 1)])
          return WitnessPlan{WitnessKind::Repeat, j, j2, {}, std::nullopt};
  } else {
    const auto& w = ss2.witnesses.front();
    const int j = w.index;
    const int c = bar[static_cast<std::size_t>(j - 1)];
    WitnessPlan plan{WitnessKind::Ss2Fail, j, 0, {}, std::nullopt};
    if (w.kind == CriterionWitness::Kind::ChargeTooSmall) {
      plan.shapes.push_back(detail::place(l, {{j, detail::hook(n - 2 * c, 2 * c)}}));
      plan.module_charge = kappa.folded(rank);
    } else {
      const int d = rank.ell() - c;
      // Reflected hook along the column first, then the literal row-first reading.
      plan.shapes.push_back(detail::place(l, {{j, detail::hook(n - 2 * d, 2 * d)}}));
      auto literal = detail::place(l, {{j, detail::hook(2 * d, n - 2 * d)}});
      if (literal != plan.shapes.front()) plan.shapes.push_back(literal);
      plan.module_charge = kappa.reflected(rank);
    }
    return plan;
  }

  // (SS1) fails with distinct charges: the closest pair i < i + k.
  int best_k = 0, bj = 0, bj2 = 0;
  for (int j = 1; j <= l; ++j)
    for (int j2 = 1; j2 <= l; ++j2) {
      const int k = bar[static_cast<std::size_t>(j2 - 1)] - bar[static_cast<std::size_t>(j - 1)];
      if (k >= 1 && k <= n - 1 && (best_k == 0 || k < best_k)) {
        best_k = k;
        bj = j;
        bj2 = j2;
      }
    }
  if (best_k == 0) throw std::logic_error("route_witness: no routing applies");
  WitnessPlan plan{WitnessKind::Ss1Fail, bj, bj2, {}, kappa.folded(rank)};
  if (bj < bj2)
    plan.shapes.push_back(detail::place(l, {{bj, Partition(static_cast<std::size_t>(n - best_k), 1)}, {bj2, Partition(static_cast<std::size_t>(best_k), 1)}}));
  else
    plan.shapes.push_back(detail::place(l, {{bj, {best_k}}, {bj2, {n - best_k}}}));
  return plan;
}

template <class Field>
struct WitnessCertificate {
  WitnessPlan plan;
  std::optional<Representation<Field>> rep;
  std::optional<Multipartition> shape;  // Specht shape actually used
  std::optional<Tableau> least_dominant;
  std::vector<typename Field::value_type> sub_vector;
  bool module_verified = false;
  bool line_invariant = false;
  bool killed_by_generators = false;
  std::size_t invariant_line_families = 0;
  bool no_retraction = false;
  std::size_t retraction_coefficient_rank = 0;
  std::size_t retraction_augmented_rank = 0;
  std::vector<std::string> notes;
  bool certified() const { return module_verified && line_invariant && killed_by_generators && no_retraction; }
};

namespace detail {

template <class Field>
void certify_line(WitnessCertificate<Field>& cert, const Representation<Field>& rep, std::size_t basis_index) {
  std::vector<typename Field::value_type> v(rep.dim, rep.field.zero());
  v[basis_index] = rep.field.one();
  cert.sub_vector = v;
  cert.module_verified = verify_representation(rep).ok();
  auto sub = invariant_closure(rep, {v});
  cert.line_invariant = sub.dim() == 1;
  bool killed = true;
  for (int r = 1; r <= rep.n; ++r)
    for (std::size_t a = 0; a < rep.dim; ++a) killed = killed && Field::is_zero(rep.x_matrix(r)(a, basis_index));
  for (int r = 1; r < rep.n; ++r)
    for (std::size_t a = 0; a < rep.dim; ++a) killed = killed && Field::is_zero(rep.psi_matrix(r)(a, basis_index));
  cert.killed_by_generators = killed;
  cert.invariant_line_families = invariant_lines(rep).size();
  if (cert.line_invariant) {
    auto ret = equivariant_retraction_exists(rep, sub);
    cert.no_retraction = !ret.exists;
    cert.retraction_coefficient_rank = ret.coefficient_rank;
    cert.retraction_augmented_rank = ret.augmented_rank;
  }
}

}  // namespace detail

/// Builds the module prescribed by `plan` and certifies that it has a
/// one-dimensional submodule without an equivariant retraction.
template <class Field>
WitnessCertificate<Field> certify_witness(const WitnessPlan& plan, const Multicharge& kappa, int n, const LieRank& rank, const Field& field) {
  WitnessCertificate<Field> cert{plan, std::nullopt, std::nullopt, std::nullopt, {}, false, false, false, 0, false, 0, 0, {}};
  if (plan.kind == WitnessKind::Boundary || plan.kind == WitnessKind::Repeat) {
    auto rep = plan.kind == WitnessKind::Boundary ? build_boundary_uniserial(kappa, plan.component, n, rank, field)
                                                  : build_repeat_uniserial(kappa, plan.component, n, rank, field);
    detail::certify_line(cert, rep, 0);
    cert.rep = std::move(rep);
    return cert;
  }
  for (const auto& lambda : plan.shapes) {
    try {
      auto m = build_specht(lambda, *plan.module_charge, rank, field);
      auto t = least_dominant(m.tableaux);
      if (!t) {
        cert.notes.push_back(lambda.to_string() + ": least dominant standard tableau is not unique");
        continue;
      }
      const auto idx = static_cast<std::size_t>(std::find(m.tableaux.begin(), m.tableaux.end(), *t) - m.tableaux.begin());
      WitnessCertificate<Field> trial = cert;
      detail::certify_line(trial, m.rep, idx);
      trial.shape = lambda;
      trial.least_dominant = *t;
      trial.rep = std::move(m.rep);
      if (trial.certified()) return trial;
      cert.notes.push_back(lambda.to_string() + ": span(v^t) for the least dominant t is not a non-split submodule");
    } catch (const SpechtError& e) {
      cert.notes.push_back(lambda.to_string() + ": " + e.what());
    }
  }
  return cert;
}

/// Witness for an explicitly requested argument. Throws std::invalid_argument
/// when the hypotheses of that argument are not met by (kappa, n).
template <class Field>
WitnessCertificate<Field> nonsplit_witness(WitnessKind kind, const Multicharge& kappa, int n, const LieRank& rank, const Field& field) {
  auto plan = route_witness(kappa, n, rank);
  if (!plan) throw std::invalid_argument("nonsplit_witness: the algebra is semisimple for these parameters");
  if (plan->kind != kind)
    throw std::invalid_argument("nonsplit_witness: hypotheses for '" + to_string(kind) + "' do not hold; these parameters route to '" +
                                to_string(plan->kind) + "'");
  return certify_witness(*plan, kappa, n, rank, field);
}

}  // namespace klrc

#endif  // KLRC_WITNESS_HPP
