#ifndef KLRC_SPECHT_HPP
#define KLRC_SPECHT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactla.hpp"
#include "presentation.hpp"
#include "tableaux.hpp"

namespace klrc {

class SpechtError : public std::runtime_error {
public:
  enum class Kind { NotGarnirSimple, ClosureBoundExceeded, NonTermination, DimensionDeficit };
  SpechtError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// True iff for every Garnir node A no row-strict tableau strictly dominating
/// g^A shares its residue sequence, so that g^A = psi_{w^{g^A}}.
inline bool garnir_simple(const Multipartition& lambda, const Multicharge& kappa, const LieRank& rank) {
  const auto nodes = garnir_nodes(lambda);
  if (nodes.empty()) return true;
  const auto row_strict = enumerate_row_strict(lambda);
  for (const auto& a : nodes) {
    const auto g = garnir_tableau(lambda, a);
    const auto ig = residue_sequence(g, kappa, rank);
    for (const auto& t : row_strict)
      if (residue_sequence(t, kappa, rank) == ig && tableau_strictly_dominates(t, g)) return false;
  }
  return true;
}

struct SpechtOptions {
  /// Build even when garnir_simple fails (relation (iv) then uses psi_{w^{g^A}} only).
  bool allow_nonsimple = false;
  /// Cap on generator applications during the closure; 0 selects 50 * n * max(n!, |Std|).
  std::size_t max_applications = 0;
};

template <class Field>
struct SpechtModule {
  Representation<Field> rep;
  Multipartition shape;
  Multicharge charge;
  std::vector<Tableau> tableaux;  // basis order: v^t for t in this list
  std::size_t ambient_dimension = 0;
  std::size_t relation_dimension = 0;
};

namespace detail {

/// The R_n-module F = R_n e(i) / sum_r R_n x_r e(i), with basis
/// c_w = psi_{red(w)} e(i) for w in S_n, red(w) the preferred reduced word.
/// The action is computed by induction on length with memoization.
template <class Field>
class FreeSpechtAmbient {
public:
  using value_type = typename Field::value_type;
  using SVec = std::map<std::size_t, value_type>;

  FreeSpechtAmbient(const ResidueSequence& top, const LieRank& rank, const Field& field)
      : n_(static_cast<int>(top.size())), rank_(rank), field_(field) {
    const std::size_t count = factorial(n_);
    perms_.reserve(count);
    for (std::size_t k = 0; k < count; ++k) perms_.push_back(Permutation::from_index(n_, k));
    left_.assign(count, std::vector<std::size_t>(static_cast<std::size_t>(n_), 0));
    descent_.resize(count);
    weights_.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
      const auto& w = perms_[k];
      for (int r = 1; r < n_; ++r) left_[k][static_cast<std::size_t>(r)] = w.left_simple(r).index();
      descent_[k] = w.smallest_left_descent();
      ResidueSequence wt(top.size());
      for (int p = 1; p <= n_; ++p) wt[static_cast<std::size_t>(w(p) - 1)] = top[static_cast<std::size_t>(p - 1)];
      weights_[k] = std::move(wt);
    }
    psi_memo_.assign(static_cast<std::size_t>(n_), std::vector<std::optional<SVec>>(count));
    x_memo_.assign(static_cast<std::size_t>(n_) + 1, std::vector<std::optional<SVec>>(count));
    psi_busy_.assign(static_cast<std::size_t>(n_), std::vector<bool>(count, false));
  }

  std::size_t size() const { return perms_.size(); }
  const Permutation& perm(std::size_t k) const { return perms_[k]; }
  const ResidueSequence& weight(std::size_t k) const { return weights_[k]; }
  std::size_t left(int r, std::size_t k) const { return left_[k][static_cast<std::size_t>(r)]; }

  SVec unit(std::size_t k) const { return {{k, field_.one()}}; }

  void axpy(SVec& y, const value_type& a, const SVec& x) const {
    if (Field::is_zero(a)) return;
    for (const auto& [k, v] : x) {
      auto it = y.find(k);
      if (it == y.end()) y.emplace(k, a * v);
      else {
        it->second += a * v;
        if (Field::is_zero(it->second)) y.erase(it);
      }
    }
  }

  /// psi_r c_w.
  const SVec& psi(int r, std::size_t w) {
    auto& slot = psi_memo_[static_cast<std::size_t>(r - 1)][w];
    if (slot) return *slot;
    if (psi_busy_[static_cast<std::size_t>(r - 1)][w])
      throw SpechtError(SpechtError::Kind::NonTermination, "Specht enumeration: re-entrant psi action");
    psi_busy_[static_cast<std::size_t>(r - 1)][w] = true;
    SVec out = compute_psi(r, w);
    psi_busy_[static_cast<std::size_t>(r - 1)][w] = false;
    slot = std::move(out);
    return *slot;
  }

  /// x_s c_w.
  const SVec& x(int s, std::size_t w) {
    auto& slot = x_memo_[static_cast<std::size_t>(s)][w];
    if (slot) return *slot;
    slot = compute_x(s, w);
    return *slot;
  }

  SVec apply_psi(int r, const SVec& v) {
    SVec out;
    for (const auto& [k, c] : v) axpy(out, c, psi(r, k));
    return out;
  }
  SVec apply_x(int s, const SVec& v) {
    SVec out;
    for (const auto& [k, c] : v) axpy(out, c, x(s, k));
    return out;
  }
  SVec apply_polynomial(const XPolynomial& p, std::size_t w) {
    SVec out;
    for (const auto& m : p) {
      SVec term = unit(w);
      for (int a : m.xs) term = apply_x(a, term);
      axpy(out, field_.from_int(m.coefficient), term);
    }
    return out;
  }

private:
  SVec compute_psi(int r, std::size_t w) {
    const std::size_t v = left(r, w);
    if (perms_[w].is_left_descent(r)) {
      // c_w = psi_r c_v + (lower terms); psi_r^2 c_v = Q c_v.
      SVec out = apply_polynomial(quadratic_polynomial(weights_[v], r, rank_), v);
      SVec lower = psi(r, v);
      axpy(lower, -field_.one(), unit(w));
      axpy(out, -field_.one(), apply_psi(r, lower));
      return out;
    }
    const int m = descent_[v];
    if (m == r) return unit(v);
    if (std::abs(m - r) > 1) {
      const std::size_t y = left(m, w);
      SVec out = apply_psi(m, psi(r, y));
      SVec lower = psi(m, y);
      axpy(lower, -field_.one(), unit(w));
      axpy(out, -field_.one(), apply_psi(r, lower));
      return out;
    }
    // Adjacent descents: w = s_m s_r y and a braid move at c = min(r, m).
    const std::size_t y = left(r, left(m, w));
    SVec out = apply_psi(m, apply_psi(r, psi(m, y)));
    const int c = std::min(r, m);
    const std::int64_t sign = r == m + 1 ? 1 : -1;
    axpy(out, field_.from_int(sign), apply_polynomial(braid_polynomial(weights_[y], c, rank_), y));
    SVec lower = apply_psi(m, psi(r, y));
    axpy(lower, -field_.one(), unit(w));
    axpy(out, -field_.one(), apply_psi(r, lower));
    return out;
  }

  SVec compute_x(int s, std::size_t w) {
    const int a = descent_[w];
    if (a == 0) return {};
    const std::size_t v = left(a, w);  // c_w = psi_a c_v exactly
    const auto& j = weights_[v];
    const bool delta = j[static_cast<std::size_t>(a - 1)] == j[static_cast<std::size_t>(a)];
    if (s != a && s != a + 1) return apply_psi(a, x(s, v));
    if (s == a) {
      SVec out = apply_psi(a, x(a + 1, v));
      if (delta) axpy(out, -field_.one(), unit(v));
      return out;
    }
    SVec out = apply_psi(a, x(a, v));
    if (delta) axpy(out, field_.one(), unit(v));
    return out;
  }

  int n_;
  LieRank rank_;
  Field field_;
  std::vector<Permutation> perms_;
  std::vector<std::vector<std::size_t>> left_;
  std::vector<int> descent_;
  std::vector<ResidueSequence> weights_;
  std::vector<std::vector<std::optional<SVec>>> psi_memo_;
  std::vector<std::vector<std::optional<SVec>>> x_memo_;
  std::vector<std::vector<bool>> psi_busy_;
};

}  // namespace detail

/// S^lambda as the quotient of the ambient module by the submodule generated
/// by the Specht relations (iii), (iv) and the cyclotomic relations, written
/// in the basis v^t = psi_{w^t} z (t standard).
template <class Field>
SpechtModule<Field> build_specht(const Multipartition& lambda, const Multicharge& kappa, const LieRank& rank, const Field& field,
                                 const SpechtOptions& opts = {}) {
  using value_type = typename Field::value_type;
  const int n = lambda.size();
  if (n < 1) throw std::invalid_argument("build_specht: empty shape");
  if (n > 8) throw std::invalid_argument("build_specht: n above 8 is beyond the enumeration scale");
  if (lambda.level() != kappa.level()) throw std::invalid_argument("build_specht: level of shape and multicharge differ");
  if (!opts.allow_nonsimple && !garnir_simple(lambda, kappa, rank))
    throw SpechtError(SpechtError::Kind::NotGarnirSimple, "build_specht: a Garnir element has lower-order terms for this shape");

  const auto tabs = enumerate_standard(lambda);
  const Tableau init = initial_tableau(lambda);
  const auto top = residue_sequence(init, kappa, rank);
  const WeightVector weight = kappa.weight(rank);
  detail::FreeSpechtAmbient<Field> amb(top, rank, field);
  using SVec = typename detail::FreeSpechtAmbient<Field>::SVec;

  // Weight spaces of the ambient module.
  std::map<ResidueSequence, std::vector<std::size_t>> members;
  std::vector<std::size_t> local(amb.size());
  for (std::size_t k = 0; k < amb.size(); ++k) {
    auto& list = members[amb.weight(k)];
    local[k] = list.size();
    list.push_back(k);
  }
  std::map<ResidueSequence, Subspace<Field>> rel;
  for (const auto& [i, list] : members) rel.emplace(i, Subspace<Field>(field, list.size()));
  auto to_local = [&](const SVec& v, const ResidueSequence& i) {
    std::vector<value_type> out(members.at(i).size(), field.zero());
    for (const auto& [k, c] : v) {
      if (amb.weight(k) != i) throw std::logic_error("build_specht: inhomogeneous vector");
      out[local[k]] = c;
    }
    return out;
  };

  std::deque<SVec> queue;
  auto add = [&](const SVec& v) {
    if (v.empty()) return;
    const auto& i = amb.weight(v.begin()->first);
    if (rel.at(i).add(to_local(v, i))) queue.push_back(v);
  };
  // (iii) psi_r z = 0 for r, r+1 in one row of t^lambda.
  for (int r = 1; r < n; ++r) {
    auto a = init.node_of(r), b = init.node_of(r + 1);
    if (a.comp == b.comp && a.row == b.row) add(amb.psi(r, 0));
  }
  // (iv) g^A z = psi_{w^{g^A}} z.
  for (const auto& a : garnir_nodes(lambda)) add(amb.unit(tableau_word(garnir_tableau(lambda, a)).permutation.index()));
  // Cyclotomic relations applied to every basis vector.
  for (std::size_t k = 0; k < amb.size(); ++k) {
    SVec v = amb.unit(k);
    for (int p = 0; p < weight_pairing(weight, amb.weight(k)[0]); ++p) v = amb.apply_x(1, v);
    add(v);
  }

  const std::size_t cap = opts.max_applications ? opts.max_applications
                                                 : 50 * static_cast<std::size_t>(n) * std::max(amb.size(), tabs.size());
  std::size_t applications = 0;
  while (!queue.empty()) {
    SVec v = std::move(queue.front());
    queue.pop_front();
    for (int r = 1; r <= n; ++r) add(amb.apply_x(r, v));
    for (int r = 1; r < n; ++r) add(amb.apply_psi(r, v));
    applications += static_cast<std::size_t>(2 * n - 1);
    if (applications > cap)
      throw SpechtError(SpechtError::Kind::NonTermination, "build_specht: generator application cap " + std::to_string(cap) + " reached");
  }

  std::size_t rel_dim = 0;
  for (const auto& [i, s] : rel) rel_dim += s.dim();
  const std::size_t quotient_dim = amb.size() - rel_dim;
  if (quotient_dim > tabs.size())
    throw SpechtError(SpechtError::Kind::ClosureBoundExceeded,
                      "build_specht: quotient has dimension " + std::to_string(quotient_dim) + " > |Std| = " + std::to_string(tabs.size()));

  // Per weight: the relation basis followed by the v^t of that weight.
  std::vector<std::size_t> word_index;
  for (const auto& t : tabs) word_index.push_back(tableau_word(t).permutation.index());
  std::map<ResidueSequence, std::vector<std::size_t>> by_weight;  // tableau positions
  for (std::size_t k = 0; k < tabs.size(); ++k) by_weight[amb.weight(word_index[k])].push_back(k);
  for (const auto& [i, ks] : by_weight) {
    Subspace<Field> s = rel.at(i);
    for (auto k : ks)
      if (!s.add(to_local(amb.unit(word_index[k]), i)))
        throw SpechtError(SpechtError::Kind::DimensionDeficit,
                          "build_specht: v^t are linearly dependent at weight (" + to_string(i) + ")");
  }
  if (quotient_dim != tabs.size())
    throw SpechtError(SpechtError::Kind::DimensionDeficit,
                      "build_specht: quotient has dimension " + std::to_string(quotient_dim) + " < |Std| = " + std::to_string(tabs.size()));

  // Coordinates of a homogeneous ambient vector in the v^t basis.
  std::map<ResidueSequence, Matrix<Field>> systems;
  for (const auto& [i, ks] : by_weight) {
    const auto& r = rel.at(i);
    Matrix<Field> a(field, members.at(i).size(), r.dim() + ks.size());
    for (std::size_t c = 0; c < r.dim(); ++c)
      for (std::size_t row = 0; row < a.rows(); ++row) a(row, c) = r.basis()(c, row);
    for (std::size_t c = 0; c < ks.size(); ++c) a(local[word_index[ks[c]]], r.dim() + c) = field.one();
    systems.emplace(i, std::move(a));
  }
  auto coordinates = [&](const SVec& v, std::vector<value_type>& column) {
    if (v.empty()) return;
    const auto& i = amb.weight(v.begin()->first);
    auto sys = systems.find(i);
    if (sys == systems.end()) {
      if (!rel.at(i).contains(to_local(v, i))) throw std::logic_error("build_specht: vector outside the quotient");
      return;
    }
    auto sol = solve(sys->second, to_local(v, i));
    if (!sol.consistent()) throw std::logic_error("build_specht: coordinate system inconsistent");
    const auto& ks = by_weight.at(i);
    const std::size_t off = rel.at(i).dim();
    for (std::size_t c = 0; c < ks.size(); ++c) column[ks[c]] = (*sol.solution)[off + c];
  };

  const std::size_t d = tabs.size();
  Representation<Field> rep(field, rank, weight, n, d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto& i = amb.weight(word_index[k]);
    auto it = rep.idempotents.find(i);
    if (it == rep.idempotents.end()) it = rep.idempotents.emplace(i, Matrix<Field>(field, d, d)).first;
    it->second(k, k) = field.one();
    rep.labels.push_back(tabs[k].to_string());
  }
  for (std::size_t k = 0; k < d; ++k) {
    for (int r = 1; r <= n; ++r) {
      std::vector<value_type> col(d, field.zero());
      coordinates(amb.x(r, word_index[k]), col);
      for (std::size_t row = 0; row < d; ++row) rep.x_matrix(r)(row, k) = col[row];
    }
    for (int r = 1; r < n; ++r) {
      std::vector<value_type> col(d, field.zero());
      coordinates(amb.psi(r, word_index[k]), col);
      for (std::size_t row = 0; row < d; ++row) rep.psi_matrix(r)(row, k) = col[row];
    }
  }
  return {std::move(rep), lambda, kappa, tabs, amb.size(), rel_dim};
}

/// Checks that x_r v^t only involves v^s with s strictly dominating t and
/// i^s = i^t, and that psi_r v^t only involves v^s with s strictly dominating
/// t and i^s = s_r i^t, except when s_r t is standard and s_r w^t is longer
/// than w^t. Returns one message per offending coefficient.
template <class Field>
std::vector<std::string> triangularity_failures(const SpechtModule<Field>& m) {
  std::vector<std::string> out;
  const auto& tabs = m.tableaux;
  const LieRank& rank = m.rep.rank;
  std::vector<ResidueSequence> res;
  std::map<Tableau, std::size_t> pos;
  for (std::size_t k = 0; k < tabs.size(); ++k) {
    res.push_back(residue_sequence(tabs[k], m.charge, rank));
    pos[tabs[k]] = k;
  }
  for (std::size_t t = 0; t < tabs.size(); ++t) {
    for (int r = 1; r <= m.rep.n; ++r)
      for (std::size_t s = 0; s < tabs.size(); ++s) {
        if (Field::is_zero(m.rep.x_matrix(r)(s, t))) continue;
        if (res[s] != res[t] || !tableau_strictly_dominates(tabs[s], tabs[t]))
          out.push_back("x_" + std::to_string(r) + " v^" + tabs[t].to_string() + " involves v^" + tabs[s].to_string());
      }
    const auto wt = tableau_word(tabs[t]).permutation;
    for (int r = 1; r < m.rep.n; ++r) {
      const auto swapped = tabs[t].swapped(r);
      if (pos.count(swapped) && wt.left_simple(r).length() == wt.length() + 1) continue;
      const auto target = swap_places(res[t], r);
      for (std::size_t s = 0; s < tabs.size(); ++s) {
        if (Field::is_zero(m.rep.psi_matrix(r)(s, t))) continue;
        if (res[s] != target || !tableau_strictly_dominates(tabs[s], tabs[t]))
          out.push_back("psi_" + std::to_string(r) + " v^" + tabs[t].to_string() + " involves v^" + tabs[s].to_string());
      }
    }
  }
  return out;
}

}  // namespace klrc

#endif  // KLRC_SPECHT_HPP
