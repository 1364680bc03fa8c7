#ifndef KLRC_REPMODELS_HPP
#define KLRC_REPMODELS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "criterion.hpp"
#include "exactla.hpp"
#include "presentation.hpp"
#include "tableaux.hpp"

namespace klrc {

/// The irreducible module on {v^t : t standard}: x_r = 0, psi_r v^t = v^{s_r t}
/// when s_r t is standard and 0 otherwise. Refused unless (SS1) and (SS2) hold.
template <class Field>
Representation<Field> build_irreducible(const Multipartition& lambda, const Multicharge& kappa, const LieRank& rank, const Field& field) {
  const int n = lambda.size();
  if (n < 1) throw std::invalid_argument("build_irreducible: empty shape");
  if (lambda.level() != kappa.level()) throw std::invalid_argument("build_irreducible: level of shape and multicharge differ");
  if (!is_semisimple(kappa, n, rank).verdict)
    throw std::domain_error("build_irreducible: (SS1) and (SS2) do not both hold for this multicharge and n");
  const auto tabs = enumerate_standard(lambda);
  std::map<Tableau, std::size_t> index;
  for (std::size_t k = 0; k < tabs.size(); ++k) index[tabs[k]] = k;

  Representation<Field> rep(field, rank, kappa.weight(rank), n, tabs.size());
  for (std::size_t k = 0; k < tabs.size(); ++k) {
    auto i = residue_sequence(tabs[k], kappa, rank);
    auto it = rep.idempotents.find(i);
    if (it == rep.idempotents.end()) it = rep.idempotents.emplace(i, Matrix<Field>(field, tabs.size(), tabs.size())).first;
    it->second(k, k) = field.one();
    for (int r = 1; r < n; ++r) {
      auto s = tabs[k].swapped(r);
      auto found = index.find(s);
      if (found != index.end()) rep.psi_matrix(r)(found->second, k) = field.one();
    }
    rep.labels.push_back(tabs[k].to_string());
  }
  return rep;
}

/// The block-diagonal sum of the irreducibles for every shape of size n.
template <class Field>
struct DirectSum {
  Representation<Field> rep;
  std::vector<Multipartition> shapes;
  std::vector<std::vector<Tableau>> tableaux;  // per shape, in basis order
  std::vector<std::size_t> offsets;             // first basis index of each block
};

template <class Field>
DirectSum<Field> build_direct_sum(int n, const Multicharge& kappa, const LieRank& rank, const Field& field) {
  std::vector<Representation<Field>> parts;
  DirectSum<Field> out{Representation<Field>(field, rank, kappa.weight(rank), n, 0), {}, {}, {}};
  std::size_t total = 0;
  for (const auto& lambda : enumerate_multipartitions(n, kappa.level())) {
    parts.push_back(build_irreducible(lambda, kappa, rank, field));
    out.shapes.push_back(lambda);
    out.tableaux.push_back(enumerate_standard(lambda));
    out.offsets.push_back(total);
    total += parts.back().dim;
  }
  Representation<Field> sum(field, rank, kappa.weight(rank), n, total);
  auto place = [&](Matrix<Field>& dst, const Matrix<Field>& src, std::size_t off) {
    for (std::size_t a = 0; a < src.rows(); ++a)
      for (std::size_t b = 0; b < src.cols(); ++b) dst(off + a, off + b) = src(a, b);
  };
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto off = out.offsets[p];
    for (const auto& [i, m] : parts[p].idempotents) {
      auto it = sum.idempotents.find(i);
      if (it == sum.idempotents.end()) it = sum.idempotents.emplace(i, Matrix<Field>(field, total, total)).first;
      place(it->second, m, off);
    }
    for (int r = 1; r <= n; ++r) place(sum.x_matrix(r), parts[p].x_matrix(r), off);
    for (int r = 1; r < n; ++r) place(sum.psi_matrix(r), parts[p].psi_matrix(r), off);
    for (const auto& l : parts[p].labels) sum.labels.push_back(out.shapes[p].to_string() + " : " + l);
  }
  out.rep = std::move(sum);
  return out;
}

struct MatrixUnitReport {
  /// Sum over shapes of |Std(lambda)|^2.
  std::size_t algebra_dimension = 0;
  std::size_t units = 0;
  bool elementary = true;      // each e_{st} is the elementary matrix at (s, t) of its block
  bool multiplication = true;  // e_{st} e_{uv} = delta_{tu} e_{sv}
  std::vector<std::string> failures;
  bool ok() const { return elementary && multiplication; }
};

namespace detail {

template <class Field>
Matrix<Field> psi_word(const Representation<Field>& rep, const std::vector<int>& word) {
  Matrix<Field> m = Matrix<Field>::identity(rep.field, rep.dim);
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = rep.psi_matrix(*it) * m;
  return m;
}

}  // namespace detail

/// Evaluates e_{st} = psi_{w^s} e(i^lambda) psi_{(w^t)^{-1}} in the direct sum
/// of the irreducibles and checks the matrix-unit laws.
template <class Field>
MatrixUnitReport matrix_units(int n, const Multicharge& kappa, const LieRank& rank, const Field& field) {
  auto ds = build_direct_sum(n, kappa, rank, field);
  const auto& rep = ds.rep;
  struct Unit {
    std::size_t block, s, t;
    std::vector<std::tuple<std::size_t, std::size_t, typename Field::value_type>> entries;
  };
  std::vector<Unit> units;
  MatrixUnitReport report;
  for (std::size_t b = 0; b < ds.shapes.size(); ++b) {
    const auto& tabs = ds.tableaux[b];
    report.algebra_dimension += tabs.size() * tabs.size();
    const auto il = residue_sequence(initial_tableau(ds.shapes[b]), kappa, rank);
    std::vector<Matrix<Field>> left, right;
    for (const auto& t : tabs) {
      auto w = tableau_word(t);
      left.push_back(detail::psi_word(rep, w.word));
      right.push_back(detail::psi_word(rep, w.permutation.inverse().reduced_word()));
    }
    const auto& e = rep.idempotent(il);
    for (std::size_t s = 0; s < tabs.size(); ++s) {
      auto le = left[s] * e;
      for (std::size_t t = 0; t < tabs.size(); ++t) {
        auto m = le * right[t];
        Unit u{b, s, t, {}};
        for (std::size_t a = 0; a < rep.dim; ++a)
          for (std::size_t c = 0; c < rep.dim; ++c)
            if (!Field::is_zero(m(a, c))) u.entries.emplace_back(a, c, m(a, c));
        const std::size_t row = ds.offsets[b] + s, col = ds.offsets[b] + t;
        bool elem = u.entries.size() == 1 && std::get<0>(u.entries[0]) == row && std::get<1>(u.entries[0]) == col &&
                    std::get<2>(u.entries[0]) == field.one();
        if (!elem) {
          report.elementary = false;
          report.failures.push_back("e_{st} not elementary: block " + ds.shapes[b].to_string() + " s=" + std::to_string(s) + " t=" + std::to_string(t));
        }
        units.push_back(std::move(u));
      }
    }
  }
  report.units = units.size();
  // Products of sparse matrices, compared with the predicted unit.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> where;
  for (std::size_t k = 0; k < units.size(); ++k) where[{units[k].block, units[k].s, units[k].t}] = k;
  for (const auto& p : units)
    for (const auto& q : units) {
      std::map<std::pair<std::size_t, std::size_t>, typename Field::value_type> prod;
      for (const auto& [a, c, v] : p.entries)
        for (const auto& [c2, d, w] : q.entries)
          if (c == c2) {
            auto it = prod.find({a, d});
            if (it == prod.end()) prod.emplace(std::make_pair(a, d), v * w);
            else it->second += v * w;
          }
      std::erase_if(prod, [](const auto& kv) { return Field::is_zero(kv.second); });
      std::map<std::pair<std::size_t, std::size_t>, typename Field::value_type> expect;
      if (p.block == q.block && p.t == q.s)
        for (const auto& [a, c, v] : units[where[{p.block, p.s, q.t}]].entries) expect.emplace(std::make_pair(a, c), v);
      if (prod != expect) {
        report.multiplication = false;
        if (report.failures.size() < 20)
          report.failures.push_back("matrix-unit law fails for block pair (" + std::to_string(p.block) + "," + std::to_string(q.block) + ")");
      }
    }
  return report;
}

namespace detail {

inline void check_component(const Multicharge& kappa, int j) {
  if (j < 1 || j > kappa.level()) throw std::invalid_argument("component index out of range");
}

inline Multipartition single_row(int level, int j, int n) {
  std::vector<Partition> comps(static_cast<std::size_t>(level));
  comps[static_cast<std::size_t>(j - 1)] = {n};
  return Multipartition(std::move(comps));
}

template <class Field>
Representation<Field> two_dimensional(const Multicharge& kappa, int j, int n, const LieRank& rank, const Field& field,
                                      const std::vector<int>& x_on_v) {
  auto lambda = single_row(kappa.level(), j, n);
  auto i = residue_sequence(initial_tableau(lambda), kappa, rank);
  Representation<Field> rep(field, rank, kappa.weight(rank), n, 2);
  rep.idempotents.emplace(i, Matrix<Field>::identity(field, 2));
  for (int r = 1; r <= n; ++r) rep.x_matrix(r)(0, 1) = field.from_int(x_on_v[static_cast<std::size_t>(r - 1)]);
  rep.labels = {"u", "v"};
  return rep;
}

}  // namespace detail

/// Two-dimensional uniserial module on {u, v} for a charge folded to 0 or ell.
/// x_m v = 0 for m = 1 mod ell; otherwise with m = 2k ell + r, 1 <= r <= 2 ell:
/// x_m v = (-1)^r u for 2 <= r <= ell and (-1)^{r+1} u for ell+2 <= r <= 2 ell.
template <class Field>
Representation<Field> build_boundary_uniserial(const Multicharge& kappa, int j, int n, const LieRank& rank, const Field& field) {
  detail::check_component(kappa, j);
  if (n < 2) throw std::invalid_argument("build_boundary_uniserial: n must be at least 2");
  const Residue c = kappa.bar(rank)[static_cast<std::size_t>(j - 1)];
  if (!detail::is_end(c, rank)) throw std::invalid_argument("build_boundary_uniserial: charge does not fold to 0 or ell");
  std::vector<int> coeff;
  for (int m = 1; m <= n; ++m) {
    if (!rank.is_finite()) {
      coeff.push_back(m == 1 ? 0 : (m % 2 == 0 ? 1 : -1));
      continue;
    }
    const int ell = rank.ell();
    if ((m - 1) % ell == 0) {
      coeff.push_back(0);
      continue;
    }
    const int r = (m - 1) % (2 * ell) + 1;
    if (r <= ell) coeff.push_back(r % 2 == 0 ? 1 : -1);
    else coeff.push_back(r % 2 == 0 ? -1 : 1);
  }
  return detail::two_dimensional(kappa, j, n, rank, field, coeff);
}

/// Two-dimensional uniserial module for a repeated charge: with
/// p = ell - kappa-bar_j + 1, x_r v = (-1)^{r+1} u for r < p, 0 at r = p and
/// (-1)^r u for r > p.
template <class Field>
Representation<Field> build_repeat_uniserial(const Multicharge& kappa, int j, int n, const LieRank& rank, const Field& field) {
  detail::check_component(kappa, j);
  if (n < 2) throw std::invalid_argument("build_repeat_uniserial: n must be at least 2");
  if (!ss2_check(kappa, n, rank).holds) throw std::invalid_argument("build_repeat_uniserial: (SS2) fails");
  const auto bar = kappa.bar(rank);
  const Residue c = bar[static_cast<std::size_t>(j - 1)];
  if (std::count(bar.begin(), bar.end(), c) < 2) throw std::invalid_argument("build_repeat_uniserial: charge is not repeated");
  const long p = rank.is_finite() ? rank.ell() - c + 1 : static_cast<long>(n) + 1;
  std::vector<int> coeff;
  for (int r = 1; r <= n; ++r) {
    if (r < p) coeff.push_back(r % 2 == 1 ? 1 : -1);
    else if (r == p) coeff.push_back(0);
    else coeff.push_back(r % 2 == 0 ? 1 : -1);
  }
  return detail::two_dimensional(kappa, j, n, rank, field, coeff);
}

template <class Field>
struct OneDimensionalResult {
  std::optional<Representation<Field>> rep;
  std::vector<std::string> violations;
};

/// The candidate with e(i) = 1 and every x, psi = 0; accepted only if it is a module.
template <class Field>
OneDimensionalResult<Field> build_one_dimensional(const ResidueSequence& i, const WeightVector& w, const LieRank& rank, const Field& field) {
  if (i.empty()) throw std::invalid_argument("build_one_dimensional: empty residue sequence");
  Representation<Field> rep(field, rank, w, static_cast<int>(i.size()), 1);
  rep.idempotents.emplace(i, Matrix<Field>::identity(field, 1));
  rep.labels = {"v"};
  auto report = verify_representation(rep);
  OneDimensionalResult<Field> out;
  if (report.ok()) out.rep = std::move(rep);
  for (const auto& v : report.violations) out.violations.push_back(v.description);
  return out;
}

/// Decides irreducibility. Exact when every weight space is at most
/// one-dimensional; otherwise a proper submodule is searched for among the
/// invariant lines and the closures of weight vectors, and std::domain_error
/// reports an undecided case.
template <class Field>
bool is_irreducible(const Representation<Field>& rep) {
  if (!verify_representation(rep).ok()) throw std::invalid_argument("is_irreducible: representation fails the defining relations");
  if (rep.dim == 0) return false;
  if (rep.dim == 1) return true;
  if (!invariant_lines(rep).empty()) return false;
  bool small = true;
  for (const auto& [i, e] : rep.idempotents) {
    auto basis = detail::image_basis(e);
    if (basis.size() > 1) small = false;
    for (const auto& v : basis)
      if (invariant_closure(rep, {v}).dim() < rep.dim) return false;
  }
  if (small) return true;
  throw std::domain_error("is_irreducible: undecided (a weight space has dimension above one)");
}

}  // namespace klrc

#endif  // KLRC_REPMODELS_HPP
