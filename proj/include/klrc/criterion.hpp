#ifndef KLRC_CRITERION_HPP
#define KLRC_CRITERION_HPP

#include <string>
#include <vector>

#include "root_data.hpp"

namespace klrc {

/// One reason the algebra fails to be semisimple.
struct CriterionWitness {
  enum class Kind { WindowPairing, ChargeTooSmall, ChargeTooLarge };
  Kind kind;
  /// Residue i for WindowPairing; 1-based component j otherwise.
  int index;
  /// <Lambda, alpha^vee_{i,n}> for WindowPairing; kappa-bar_j otherwise.
  int value;

  std::string describe() const {
    switch (kind) {
      case Kind::WindowPairing:
        return "ss1: <Lambda, alpha_{" + std::to_string(index) + ",n}> = " + std::to_string(value) + " > 1";
      case Kind::ChargeTooSmall:
        return "ss2: kappa-bar_" + std::to_string(index) + " = " + std::to_string(value) + " < (n-1)/2";
      case Kind::ChargeTooLarge:
        return "ss2: kappa-bar_" + std::to_string(index) + " = " + std::to_string(value) + " > ell - (n-1)/2";
    }
    return {};
  }
  friend bool operator==(const CriterionWitness& a, const CriterionWitness& b) {
    return a.kind == b.kind && a.index == b.index && a.value == b.value;
  }
};

struct ConditionCheck {
  bool holds = true;
  std::vector<CriterionWitness> witnesses;
};

struct SemisimplicityReport {
  bool ss1 = true;
  bool ss2 = true;
  bool verdict = true;
  /// n = 1 lies outside the range n > 1 covered by the theorem.
  bool outside_theorem_range = false;
  std::vector<CriterionWitness> witnesses;
};

/// (SS1): <Lambda, alpha^vee_{i,n}> <= 1 for every residue i.
inline ConditionCheck ss1_check(const WeightVector& w, int n, const LieRank& rank) {
  if (n < 1) throw std::invalid_argument("ss1_check: n must be positive");
  ConditionCheck out;
  std::vector<Residue> starts;
  if (rank.is_finite()) {
    for (Residue i = 0; i <= rank.ell(); ++i) starts.push_back(i);
  } else {
    // Windows that miss every charge contribute nothing; only windows starting
    // at most n-1 below some charge can reach the bound.
    int top = 0;
    for (const auto& [i, m] : w.multiplicities()) top = std::max(top, i);
    for (Residue i = 0; i <= top; ++i) starts.push_back(i);
  }
  for (Residue i : starts) {
    int pairing = interval_coroot_pairing(w, i, n, rank);
    if (pairing > 1) {
      out.holds = false;
      out.witnesses.push_back({CriterionWitness::Kind::WindowPairing, i, pairing});
    }
  }
  return out;
}

/// (SS2): (n-1)/2 <= kappa-bar_j <= ell - (n-1)/2 for every j, compared as
/// 2*kappa-bar_j against n-1 so no rounding occurs.
inline ConditionCheck ss2_check(const Multicharge& kappa, int n, const LieRank& rank) {
  if (n < 1) throw std::invalid_argument("ss2_check: n must be positive");
  ConditionCheck out;
  auto bar = kappa.bar(rank);
  for (std::size_t j = 0; j < bar.size(); ++j) {
    const long twice = 2L * bar[j];
    if (twice < n - 1) {
      out.holds = false;
      out.witnesses.push_back({CriterionWitness::Kind::ChargeTooSmall, static_cast<int>(j) + 1, bar[j]});
    } else if (rank.is_finite() && twice > 2L * rank.ell() - (n - 1)) {
      out.holds = false;
      out.witnesses.push_back({CriterionWitness::Kind::ChargeTooLarge, static_cast<int>(j) + 1, bar[j]});
    }
  }
  return out;
}

/// Semisimplicity verdict for R^Lambda_n with Lambda = Lambda_kappa.
inline SemisimplicityReport is_semisimple(const Multicharge& kappa, int n, const LieRank& rank) {
  if (n < 1) throw std::invalid_argument("is_semisimple: n must be positive");
  SemisimplicityReport report;
  if (n == 1) {
    // R^Lambda_1 is the product of the k[x_1]/(x_1^{m_i}) e(i): semisimple iff
    // every m_i <= 1, which is exactly (SS1) with windows of length 1. (SS2)
    // is vacuous.
    report.outside_theorem_range = true;
  }
  auto c1 = ss1_check(kappa.weight(rank), n, rank);
  auto c2 = ss2_check(kappa, n, rank);
  report.ss1 = c1.holds;
  report.ss2 = c2.holds;
  report.verdict = c1.holds && c2.holds;
  report.witnesses = c1.witnesses;
  report.witnesses.insert(report.witnesses.end(), c2.witnesses.begin(), c2.witnesses.end());
  return report;
}

}  // namespace klrc

#endif  // KLRC_CRITERION_HPP
