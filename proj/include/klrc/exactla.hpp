#ifndef KLRC_EXACTLA_HPP
#define KLRC_EXACTLA_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "representation.hpp"

namespace klrc {

/// Smallest subspace containing `seed` and stable under every generator.
template <class Field>
Subspace<Field> invariant_closure(const Representation<Field>& rep, const std::vector<std::vector<typename Field::value_type>>& seed) {
  Subspace<Field> sub(rep.field, rep.dim);
  std::deque<std::vector<typename Field::value_type>> queue;
  for (const auto& v : seed)
    if (sub.add(v)) queue.push_back(v);
  const auto gens = rep.generators();
  while (!queue.empty()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    for (const auto* g : gens) {
      auto w = (*g) * v;
      if (sub.add(w)) queue.push_back(std::move(w));
    }
  }
  return sub;
}

template <class Field>
bool is_invariant(const Representation<Field>& rep, const Subspace<Field>& sub) {
  for (const auto* g : rep.generators())
    for (const auto& v : sub.basis_vectors())
      if (!sub.contains((*g) * v)) return false;
  return true;
}

namespace detail {

template <class Field>
bool is_nilpotent(const Matrix<Field>& m) {
  Matrix<Field> p = m;
  for (std::size_t k = 1; k < m.rows() && !p.is_zero(); ++k) p = p * m;
  return p.is_zero();
}

/// Columns spanning the image of an idempotent.
template <class Field>
std::vector<std::vector<typename Field::value_type>> image_basis(const Matrix<Field>& e) {
  auto ech = rref(e.transpose());
  std::vector<std::vector<typename Field::value_type>> out;
  for (std::size_t k = 0; k < ech.rank(); ++k) out.push_back(ech.reduced.row(k));
  return out;
}

}  // namespace detail

/// The one-dimensional invariant subspaces, grouped by weight. A line
/// span(v) is invariant iff v lies in a single weight space e(i)V and is
/// killed by every x_r and every psi_r: a psi_r with i_r != i_{r+1} moves v
/// to another weight space, and the x_r and the remaining psi_r act
/// nilpotently on e(i)V (checked), so no other eigenvalue can occur. Each
/// returned subspace K is such a common kernel: every line inside K is
/// invariant.
template <class Field>
std::vector<Subspace<Field>> invariant_lines(const Representation<Field>& rep) {
  std::vector<Subspace<Field>> out;
  for (const auto& [i, e] : rep.idempotents) {
    auto basis = detail::image_basis(e);
    if (basis.empty()) continue;
    const std::size_t d = basis.size();
    std::vector<const Matrix<Field>*> ops;
    for (int r = 1; r <= rep.n; ++r) {
      ops.push_back(&rep.x_matrix(r));
      if (!detail::is_nilpotent(rep.x_matrix(r) * e)) throw std::domain_error("invariant_lines: x is not nilpotent on a weight space");
    }
    for (int r = 1; r < rep.n; ++r) {
      ops.push_back(&rep.psi_matrix(r));
      if (i[static_cast<std::size_t>(r - 1)] == i[static_cast<std::size_t>(r)] && !detail::is_nilpotent(rep.psi_matrix(r) * e))
        throw std::domain_error("invariant_lines: psi is not nilpotent on a weight space");
    }
    Matrix<Field> stacked(rep.field, ops.size() * rep.dim, d);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t o = 0; o < ops.size(); ++o) {
        auto img = (*ops[o]) * basis[k];
        for (std::size_t row = 0; row < rep.dim; ++row) stacked(o * rep.dim + row, k) = img[row];
      }
    }
    auto kernel = nullspace(stacked);
    if (kernel.cols() == 0) continue;
    Subspace<Field> k_sub(rep.field, rep.dim);
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
      std::vector<typename Field::value_type> v(rep.dim, rep.field.zero());
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t row = 0; row < rep.dim; ++row) v[row] += kernel(k, c) * basis[k][row];
      k_sub.add(v);
    }
    out.push_back(std::move(k_sub));
  }
  return out;
}

/// Outcome of the search for a module map sigma: V -> U with sigma|_U = id.
template <class Field>
struct RetractionResult {
  bool exists = false;
  /// sigma as a dim x dim matrix with image in U; ker sigma is a complement.
  std::optional<Matrix<Field>> sigma;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t coefficient_rank = 0;
  std::size_t augmented_rank = 0;
};

/// Solves T g = A_g T for every generator g and T B = I, where B holds a
/// basis of U as columns and g B = B A_g. Then sigma = B T.
template <class Field>
RetractionResult<Field> equivariant_retraction_exists(const Representation<Field>& rep, const Subspace<Field>& sub) {
  if (sub.ambient() != rep.dim) throw std::invalid_argument("equivariant_retraction_exists: ambient dimension mismatch");
  if (!is_invariant(rep, sub)) throw std::invalid_argument("equivariant_retraction_exists: subspace is not invariant");
  const auto& f = rep.field;
  const std::size_t n = rep.dim, k = sub.dim();
  const auto& pivots = sub.pivots();
  Matrix<Field> b = sub.basis().transpose();  // n x k
  const auto gens = rep.generators();

  RetractionResult<Field> res;
  res.unknowns = k * n;
  res.equations = gens.size() * k * n + k * k;
  Matrix<Field> a(f, res.equations, res.unknowns);
  std::vector<typename Field::value_type> rhs(res.equations, f.zero());
  auto unknown = [&](std::size_t row, std::size_t col) { return row * n + col; };
  std::size_t eq = 0;
  for (const auto* g : gens) {
    // A_g: coordinates of g b_e in the echelon basis are its pivot entries.
    Matrix<Field> ag(f, k, k);
    for (std::size_t e = 0; e < k; ++e) {
      auto img = (*g) * b.column(e);
      for (std::size_t d = 0; d < k; ++d) ag(d, e) = img[pivots[d]];
    }
    for (std::size_t row = 0; row < k; ++row)
      for (std::size_t c = 0; c < n; ++c, ++eq) {
        for (std::size_t m = 0; m < n; ++m)
          if (!Field::is_zero((*g)(m, c))) a(eq, unknown(row, m)) += (*g)(m, c);
        for (std::size_t d = 0; d < k; ++d)
          if (!Field::is_zero(ag(row, d))) a(eq, unknown(d, c)) -= ag(row, d);
      }
  }
  for (std::size_t row = 0; row < k; ++row)
    for (std::size_t e = 0; e < k; ++e, ++eq) {
      for (std::size_t m = 0; m < n; ++m)
        if (!Field::is_zero(b(m, e))) a(eq, unknown(row, m)) += b(m, e);
      rhs[eq] = row == e ? f.one() : f.zero();
    }
  auto sol = solve(a, rhs);
  res.coefficient_rank = sol.coefficient_rank;
  res.augmented_rank = sol.augmented_rank;
  if (!sol.consistent()) return res;
  Matrix<Field> t(f, k, n);
  for (std::size_t row = 0; row < k; ++row)
    for (std::size_t c = 0; c < n; ++c) t(row, c) = (*sol.solution)[unknown(row, c)];
  res.exists = true;
  res.sigma = b * t;
  return res;
}

}  // namespace klrc

#endif  // KLRC_EXACTLA_HPP
