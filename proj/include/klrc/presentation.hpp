#ifndef KLRC_PRESENTATION_HPP
#define KLRC_PRESENTATION_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "representation.hpp"
#include "root_data.hpp"

namespace klrc {

/// One letter of a generator word. `seq` is used by idempotent letters only.
struct Letter {
  GeneratorKind kind;
  int index = 0;
  ResidueSequence seq;

  static Letter e(ResidueSequence i) { return {GeneratorKind::Idempotent, 0, std::move(i)}; }
  static Letter x(int r) { return {GeneratorKind::X, r, {}}; }
  static Letter psi(int r) { return {GeneratorKind::Psi, r, {}}; }

  std::string to_string() const {
    switch (kind) {
      case GeneratorKind::Idempotent: return "e(" + klrc::to_string(seq) + ")";
      case GeneratorKind::X: return "x" + std::to_string(index);
      case GeneratorKind::Psi: return "psi" + std::to_string(index);
    }
    return {};
  }
};

/// coefficient * letters[0] * letters[1] * ... ; the empty word is the identity.
struct GenWord {
  std::int64_t coefficient = 1;
  std::vector<Letter> letters;
};

/// sum(terms) = 0. Apart from the completeness instance every term ends in
/// the same idempotent e(i).
struct RelationInstance {
  std::string family;
  int r = 0;
  int s = 0;
  ResidueSequence i;
  std::vector<GenWord> terms;

  std::string describe() const {
    std::string out = family;
    if (r) out += " r=" + std::to_string(r);
    if (s) out += " s=" + std::to_string(s);
    if (!i.empty()) out += " i=(" + to_string(i) + ")";
    return out;
  }
};

/// Finite set of residue sequences on which relations are instantiated.
class Support {
public:
  Support() = default;
  explicit Support(std::set<ResidueSequence> sequences) : seqs_(std::move(sequences)) {
    std::size_t len = seqs_.empty() ? 0 : seqs_.begin()->size();
    for (const auto& i : seqs_)
      if (i.size() != len) throw std::invalid_argument("Support: sequences of different lengths");
  }
  /// The closure under all place permutations s_r.
  static Support orbit_closure(const std::vector<ResidueSequence>& seeds) {
    std::set<ResidueSequence> seen;
    std::vector<ResidueSequence> stack(seeds.begin(), seeds.end());
    while (!stack.empty()) {
      auto i = std::move(stack.back());
      stack.pop_back();
      if (!seen.insert(i).second) continue;
      for (int r = 1; r < static_cast<int>(i.size()); ++r) {
        auto j = swap_places(i, r);
        if (!seen.count(j)) stack.push_back(std::move(j));
      }
    }
    return Support(std::move(seen));
  }

  const std::set<ResidueSequence>& sequences() const { return seqs_; }
  bool contains(const ResidueSequence& i) const { return seqs_.count(i) > 0; }
  std::size_t size() const { return seqs_.size(); }
  bool is_closed() const {
    for (const auto& i : seqs_)
      for (int r = 1; r < static_cast<int>(i.size()); ++r)
        if (!seqs_.count(swap_places(i, r))) return false;
    return true;
  }

private:
  std::set<ResidueSequence> seqs_;
};

/// Polynomial in the x generators: sum of coefficient * x_{a_1} ... x_{a_k}.
struct XMonomial {
  std::int64_t coefficient;
  std::vector<int> xs;
};
using XPolynomial = std::vector<XMonomial>;

namespace detail {
inline bool adjacent(Residue a, Residue b) { return a - b == 1 || b - a == 1; }
inline bool is_end(Residue a, const LieRank& rank) { return a == 0 || (rank.is_finite() && a == rank.ell()); }
}  // namespace detail

/// Q with psi_r^2 e(i) = Q e(i).
inline XPolynomial quadratic_polynomial(const ResidueSequence& i, int r, const LieRank& rank) {
  const Residue a = i.at(static_cast<std::size_t>(r - 1));
  const Residue b = i.at(static_cast<std::size_t>(r));
  const bool fin = rank.is_finite();
  const int ell = fin ? rank.ell() : -1;
  if (a == b) return {};
  if ((a == 0 && b == 1) || (fin && a == ell && b == ell - 1)) return {{1, {r}}, {1, {r + 1, r + 1}}};
  if ((a == 1 && b == 0) || (fin && a == ell - 1 && b == ell)) return {{1, {r, r}}, {1, {r + 1}}};
  if (detail::adjacent(a, b) && !detail::is_end(a, rank) && !detail::is_end(b, rank)) return {{1, {r}}, {1, {r + 1}}};
  if (detail::adjacent(a, b)) throw std::logic_error("quadratic_polynomial: unclassified adjacent pair");
  return {{1, {}}};
}

/// E with (psi_{r+1} psi_r psi_{r+1} - psi_r psi_{r+1} psi_r) e(i) = E e(i).
inline XPolynomial braid_polynomial(const ResidueSequence& i, int r, const LieRank& rank) {
  const Residue a = i.at(static_cast<std::size_t>(r - 1));
  const Residue b = i.at(static_cast<std::size_t>(r));
  const Residue c = i.at(static_cast<std::size_t>(r + 1));
  const bool fin = rank.is_finite();
  const int ell = fin ? rank.ell() : -1;
  if ((a == 1 && b == 0 && c == 1) || (fin && a == ell - 1 && b == ell && c == ell - 1)) return {{1, {r}}, {1, {r + 2}}};
  if (a == c && detail::adjacent(a, b) && !detail::is_end(b, rank)) return {{1, {}}};
  return {};
}

namespace detail {

inline GenWord word(std::int64_t c, std::vector<Letter> letters, const ResidueSequence& i) {
  letters.push_back(Letter::e(i));
  return {c, std::move(letters)};
}

inline void append_polynomial(std::vector<GenWord>& terms, const XPolynomial& p, std::int64_t sign, const ResidueSequence& i) {
  for (const auto& m : p) {
    std::vector<Letter> ls;
    for (int a : m.xs) ls.push_back(Letter::x(a));
    terms.push_back(word(sign * m.coefficient, std::move(ls), i));
  }
}

}  // namespace detail

/// Every defining relation of R^Lambda_n instantiated on `support`, in the
/// right-ended form R e(i) = 0. Pairwise orthogonality of the idempotents is
/// not listed separately: idempotency, the completeness instance and rank
/// additivity (checked alongside completeness) imply it over any field.
inline std::vector<RelationInstance> instantiate_relations(int n, const WeightVector& w, const LieRank& rank, const Support& support) {
  if (!support.is_closed()) throw std::invalid_argument("instantiate_relations: support is not closed under place permutations");
  for (const auto& i : support.sequences()) {
    if (static_cast<int>(i.size()) != n) throw std::invalid_argument("instantiate_relations: support sequence of wrong length");
    for (auto r : i)
      if (!rank.contains(r)) throw std::invalid_argument("instantiate_relations: residue out of range");
  }
  using detail::word;
  std::vector<RelationInstance> out;
  {
    RelationInstance c{"completeness", 0, 0, {}, {}};
    for (const auto& i : support.sequences()) c.terms.push_back({1, {Letter::e(i)}});
    c.terms.push_back({-1, {}});
    out.push_back(std::move(c));
  }
  for (const auto& i : support.sequences()) {
    out.push_back({"idempotent", 0, 0, i, {word(1, {Letter::e(i)}, i), word(-1, {}, i)}});
    {
      RelationInstance c{"cyclotomic", 0, 0, i, {}};
      std::vector<Letter> ls(static_cast<std::size_t>(weight_pairing(w, i[0])), Letter::x(1));
      c.terms.push_back(word(1, std::move(ls), i));
      out.push_back(std::move(c));
    }
    for (int r = 1; r <= n; ++r) {
      out.push_back({"x-idempotent", r, 0, i, {word(1, {Letter::x(r)}, i), word(-1, {Letter::e(i), Letter::x(r)}, i)}});
      for (int s = r + 1; s <= n; ++s)
        out.push_back({"x-commute", r, s, i, {word(1, {Letter::x(r), Letter::x(s)}, i), word(-1, {Letter::x(s), Letter::x(r)}, i)}});
    }
    for (int r = 1; r < n; ++r) {
      const auto si = swap_places(i, r);
      const std::int64_t delta = i[static_cast<std::size_t>(r - 1)] == i[static_cast<std::size_t>(r)] ? 1 : 0;
      out.push_back({"psi-idempotent", r, 0, i, {word(1, {Letter::psi(r)}, i), word(-1, {Letter::e(si), Letter::psi(r)}, i)}});
      for (int s = 1; s <= n; ++s) {
        if (s == r || s == r + 1) continue;
        out.push_back({"x-psi-commute", r, s, i, {word(1, {Letter::x(s), Letter::psi(r)}, i), word(-1, {Letter::psi(r), Letter::x(s)}, i)}});
      }
      {
        RelationInstance c{"x-psi-left", r, 0, i, {word(1, {Letter::x(r), Letter::psi(r)}, i), word(-1, {Letter::psi(r), Letter::x(r + 1)}, i)}};
        if (delta) c.terms.push_back(word(1, {}, i));
        out.push_back(std::move(c));
      }
      {
        RelationInstance c{"x-psi-right", r, 0, i, {word(1, {Letter::x(r + 1), Letter::psi(r)}, i), word(-1, {Letter::psi(r), Letter::x(r)}, i)}};
        if (delta) c.terms.push_back(word(-1, {}, i));
        out.push_back(std::move(c));
      }
      for (int s = r + 2; s < n; ++s)
        out.push_back({"psi-commute", r, s, i, {word(1, {Letter::psi(r), Letter::psi(s)}, i), word(-1, {Letter::psi(s), Letter::psi(r)}, i)}});
      {
        RelationInstance c{"quadratic", r, 0, i, {word(1, {Letter::psi(r), Letter::psi(r)}, i)}};
        detail::append_polynomial(c.terms, quadratic_polynomial(i, r, rank), -1, i);
        out.push_back(std::move(c));
      }
      if (r + 1 < n) {
        RelationInstance c{"braid", r, 0, i,
                           {word(1, {Letter::psi(r + 1), Letter::psi(r), Letter::psi(r + 1)}, i),
                            word(-1, {Letter::psi(r), Letter::psi(r + 1), Letter::psi(r)}, i)}};
        detail::append_polynomial(c.terms, braid_polynomial(i, r, rank), -1, i);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

/// Degree of a right-ended word, or nullopt if an idempotent letter does not
/// match the running residue sequence (the word is then zero in R_n).
inline std::optional<int> word_degree(const GenWord& w, const LieRank& rank) {
  if (w.letters.empty()) return 0;
  const Letter& last = w.letters.back();
  if (last.kind != GeneratorKind::Idempotent) return std::nullopt;
  ResidueSequence cur = last.seq;
  int deg = 0;
  for (auto it = w.letters.rbegin() + 1; it != w.letters.rend(); ++it) {
    switch (it->kind) {
      case GeneratorKind::Idempotent:
        if (it->seq != cur) return std::nullopt;
        break;
      case GeneratorKind::X:
        deg += generator_degree(Generator::x(it->index), cur, rank);
        break;
      case GeneratorKind::Psi:
        deg += generator_degree(Generator::psi(it->index), cur, rank);
        cur = swap_places(cur, it->index);
        break;
    }
  }
  return deg;
}

struct HomogeneityReport {
  bool homogeneous = true;
  std::vector<std::size_t> offending;  // indices into the relation list
};

/// Every nonzero term of every relation has the same degree.
inline HomogeneityReport homogeneity_check(const std::vector<RelationInstance>& rels, const LieRank& rank) {
  HomogeneityReport rep;
  for (std::size_t k = 0; k < rels.size(); ++k) {
    std::optional<int> seen;
    bool ok = true;
    for (const auto& t : rels[k].terms) {
      auto d = word_degree(t, rank);
      if (!d) continue;
      if (seen && *seen != *d) ok = false;
      seen = d;
    }
    if (!ok) {
      rep.homogeneous = false;
      rep.offending.push_back(k);
    }
  }
  return rep;
}

struct Violation {
  std::size_t relation;  // index into the relation list, or npos for support/rank bookkeeping
  std::string description;
};

struct VerificationReport {
  std::size_t checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Evaluates one word on `rep`, right to left.
template <class Field>
Matrix<Field> evaluate_word(const GenWord& w, const Representation<Field>& rep) {
  Matrix<Field> m = Matrix<Field>::identity(rep.field, rep.dim);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    switch (it->kind) {
      case GeneratorKind::Idempotent: m = rep.idempotent(it->seq) * m; break;
      case GeneratorKind::X: m = rep.x_matrix(it->index) * m; break;
      case GeneratorKind::Psi: m = rep.psi_matrix(it->index) * m; break;
    }
  }
  return rep.field.from_int(w.coefficient) * m;
}

/// Checks every relation as an exact matrix identity.
template <class Field>
VerificationReport verify_representation(const Representation<Field>& rep, const std::vector<RelationInstance>& rels) {
  rep.validate();
  VerificationReport report;
  std::set<ResidueSequence> listed;
  for (const auto& rel : rels)
    if (rel.family == "idempotent") listed.insert(rel.i);
  for (const auto& i : rep.support())
    if (!listed.count(i))
      report.violations.push_back({static_cast<std::size_t>(-1), "support: e(" + to_string(i) + ") acts but is not covered by the relations"});

  for (std::size_t k = 0; k < rels.size(); ++k) {
    const auto& rel = rels[k];
    ++report.checked;
    if (rel.family != "completeness" && rep.idempotent(rel.i).is_zero()) continue;
    Matrix<Field> total(rep.field, rep.dim, rep.dim);
    for (const auto& t : rel.terms) total += evaluate_word(t, rep);
    if (!total.is_zero()) report.violations.push_back({k, rel.describe()});
    if (rel.family == "completeness") {
      std::size_t ranks = 0;
      for (const auto& [i, m] : rep.idempotents) ranks += klrc::rank(m);
      if (ranks != rep.dim)
        report.violations.push_back({k, "completeness: idempotent ranks sum to " + std::to_string(ranks) + ", not " + std::to_string(rep.dim)});
    }
  }
  return report;
}

/// Instantiates relations on the orbit closure of the representation's own
/// support and checks them.
template <class Field>
VerificationReport verify_representation(const Representation<Field>& rep) {
  auto support = Support::orbit_closure(rep.support());
  return verify_representation(rep, instantiate_relations(rep.n, rep.weight, rep.rank, support));
}

}  // namespace klrc

#endif  // KLRC_PRESENTATION_HPP
