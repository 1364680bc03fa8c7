#ifndef KLRC_ROOT_DATA_HPP
#define KLRC_ROOT_DATA_HPP

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace klrc {

/// Rank of the Cartan datum: C^(1)_ell for finite ell >= 2, or C_infinity.
class LieRank {
public:
  static LieRank finite(int ell) {
    if (ell < 2) throw std::invalid_argument("LieRank: ell must be at least 2");
    return LieRank(ell);
  }
  static LieRank infinite() { return LieRank(std::nullopt); }

  bool is_finite() const { return ell_.has_value(); }
  /// Throws for the infinite rank.
  int ell() const {
    if (!ell_) throw std::logic_error("LieRank: ell is infinite");
    return *ell_;
  }
  /// Number of residues (ell + 1), or nullopt for C_infinity.
  std::optional<int> index_count() const {
    if (!ell_) return std::nullopt;
    return *ell_ + 1;
  }
  bool contains(int i) const { return i >= 0 && (!ell_ || i <= *ell_); }

  std::string to_string() const { return ell_ ? std::to_string(*ell_) : "inf"; }
  friend bool operator==(const LieRank& a, const LieRank& b) { return a.ell_ == b.ell_; }
  friend bool operator!=(const LieRank& a, const LieRank& b) { return !(a == b); }

private:
  explicit LieRank(std::optional<int> ell) : ell_(ell) {}
  std::optional<int> ell_;
};

inline LieRank parse_rank(const std::string& s) {
  if (s == "inf" || s == "infinity") return LieRank::infinite();
  std::size_t used = 0;
  int ell = 0;
  try {
    ell = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument("malformed rank '" + s + "'");
  return LieRank::finite(ell);
}

using Residue = int;
using ResidueSequence = std::vector<Residue>;

inline std::string to_string(const ResidueSequence& i) {
  std::string out;
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(i[k]);
  }
  return out;
}

/// The folding map Z -> I: reduction mod 2*ell followed by k -> min(k, 2*ell - k);
/// absolute value when ell is infinite.
inline Residue bar_residue(std::int64_t k, const LieRank& rank) {
  if (!rank.is_finite()) return static_cast<Residue>(k < 0 ? -k : k);
  const std::int64_t period = 2 * static_cast<std::int64_t>(rank.ell());
  std::int64_t m = k % period;
  if (m < 0) m += period;
  return static_cast<Residue>(m <= rank.ell() ? m : period - m);
}

/// Dominant weight as a multiset of fundamental weights: Lambda = sum_i m_i Lambda_i.
class WeightVector {
public:
  WeightVector() = default;
  explicit WeightVector(std::map<Residue, int> multiplicities) : mult_(std::move(multiplicities)) {
    for (auto it = mult_.begin(); it != mult_.end();) {
      if (it->second < 0) throw std::invalid_argument("WeightVector: negative multiplicity");
      it = it->second == 0 ? mult_.erase(it) : std::next(it);
    }
  }
  static WeightVector of(std::initializer_list<Residue> residues) {
    std::map<Residue, int> m;
    for (auto r : residues) ++m[r];
    return WeightVector(std::move(m));
  }

  int multiplicity(Residue i) const {
    auto it = mult_.find(i);
    return it == mult_.end() ? 0 : it->second;
  }
  int level() const {
    int l = 0;
    for (const auto& [i, m] : mult_) l += m;
    return l;
  }
  const std::map<Residue, int>& multiplicities() const { return mult_; }

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.mult_ == b.mult_; }

private:
  std::map<Residue, int> mult_;
};

/// <Lambda, alpha_i^vee>.
inline int weight_pairing(const WeightVector& w, Residue i) { return w.multiplicity(i); }

/// <Lambda, alpha_i^vee + ... + alpha_{i+k-1}^vee>, indices cyclic mod ell+1.
/// For finite rank a window of length k >= ell+1 wraps and counts residues repeatedly.
inline int interval_coroot_pairing(const WeightVector& w, Residue i, int k, const LieRank& rank) {
  if (k < 1) throw std::invalid_argument("interval_coroot_pairing: k must be positive");
  int total = 0;
  for (int step = 0; step < k; ++step) {
    Residue j = i + step;
    if (rank.is_finite()) j %= rank.ell() + 1;
    total += w.multiplicity(j);
  }
  return total;
}

/// (alpha_i, alpha_j) for C^(1)_ell with short roots of squared length 2.
inline int bilinear_form(Residue i, Residue j, const LieRank& rank) {
  auto is_end = [&](Residue r) { return r == 0 || (rank.is_finite() && r == rank.ell()); };
  if (i == j) return is_end(i) ? 4 : 2;
  if (std::abs(i - j) != 1) return 0;
  return (is_end(i) || is_end(j)) ? -2 : -1;
}

/// Multicharge kappa in Z^l.
class Multicharge {
public:
  Multicharge() = default;
  explicit Multicharge(std::vector<std::int64_t> charges) : charges_(std::move(charges)) {
    if (charges_.empty()) throw std::invalid_argument("Multicharge: level must be at least 1");
  }

  int level() const { return static_cast<int>(charges_.size()); }
  const std::vector<std::int64_t>& charges() const { return charges_; }
  std::int64_t operator[](std::size_t j) const { return charges_.at(j); }

  /// kappa-bar: the charges folded into I.
  std::vector<Residue> bar(const LieRank& rank) const {
    std::vector<Residue> out;
    for (auto k : charges_) out.push_back(bar_residue(k, rank));
    return out;
  }
  /// kappa-bar as a multicharge.
  Multicharge folded(const LieRank& rank) const {
    std::vector<std::int64_t> out;
    for (auto k : charges_) out.push_back(bar_residue(k, rank));
    return Multicharge(std::move(out));
  }
  /// kappa-hat = (2 ell - kappa-bar_1, ...): same weight, reflected residue pattern.
  Multicharge reflected(const LieRank& rank) const {
    std::vector<std::int64_t> out;
    for (auto k : charges_) out.push_back(2 * static_cast<std::int64_t>(rank.ell()) - bar_residue(k, rank));
    return Multicharge(std::move(out));
  }
  WeightVector weight(const LieRank& rank) const {
    std::map<Residue, int> m;
    for (auto k : charges_) ++m[bar_residue(k, rank)];
    return WeightVector(std::move(m));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < charges_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(charges_[k]);
    }
    return out;
  }
  friend bool operator==(const Multicharge& a, const Multicharge& b) { return a.charges_ == b.charges_; }

private:
  std::vector<std::int64_t> charges_;
};

inline Multicharge parse_multicharge(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long k = 0;
    try {
      k = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw std::invalid_argument("malformed multicharge '" + s + "'");
    out.push_back(k);
  }
  if (out.empty() || (!s.empty() && s.back() == ','))
    throw std::invalid_argument("malformed multicharge '" + s + "'");
  return Multicharge(std::move(out));
}

/// One generator of the quiver Hecke algebra. Idempotent indices refer to a
/// caller-side table of residue sequences; x and psi indices are 1-based.
enum class GeneratorKind { Idempotent, X, Psi };

struct Generator {
  GeneratorKind kind;
  int index;

  static Generator e(int slot) { return {GeneratorKind::Idempotent, slot}; }
  static Generator x(int r) { return {GeneratorKind::X, r}; }
  static Generator psi(int r) { return {GeneratorKind::Psi, r}; }
  friend bool operator==(const Generator& a, const Generator& b) { return a.kind == b.kind && a.index == b.index; }
};

/// Degree of g e(i). The psi degree is -(alpha_{i_r}, alpha_{i_{r+1}}), which is
/// the sign that makes the x-psi relations with a delta term homogeneous.
inline int generator_degree(const Generator& g, const ResidueSequence& i, const LieRank& rank) {
  switch (g.kind) {
    case GeneratorKind::Idempotent:
      return 0;
    case GeneratorKind::X:
      return bilinear_form(i.at(g.index - 1), i.at(g.index - 1), rank);
    case GeneratorKind::Psi:
      return -bilinear_form(i.at(g.index - 1), i.at(g.index), rank);
  }
  return 0;
}

}  // namespace klrc

#endif  // KLRC_ROOT_DATA_HPP
