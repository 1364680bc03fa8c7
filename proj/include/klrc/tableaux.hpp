#ifndef KLRC_TABLEAUX_HPP
#define KLRC_TABLEAUX_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "root_data.hpp"

namespace klrc {

using Partition = std::vector<int>;

/// Node (row, col, comp) of a Young diagram, all 1-based.
struct Node {
  int row;
  int col;
  int comp;
  friend bool operator==(const Node& a, const Node& b) {
    return a.row == b.row && a.col == b.col && a.comp == b.comp;
  }
  friend bool operator<(const Node& a, const Node& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
  }
};

/// l-multipartition. Components are normalized: parts positive and weakly
/// decreasing, trailing zeros removed.
class Multipartition {
public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw std::invalid_argument("Multipartition: level must be at least 1");
    for (auto& p : comps_) {
      while (!p.empty() && p.back() == 0) p.pop_back();
      for (std::size_t r = 0; r < p.size(); ++r) {
        if (p[r] <= 0) throw std::invalid_argument("Multipartition: parts must be positive");
        if (r && p[r] > p[r - 1]) throw std::invalid_argument("Multipartition: parts must be weakly decreasing");
      }
    }
  }
  static Multipartition empty(int level) { return Multipartition(std::vector<Partition>(static_cast<std::size_t>(level))); }

  int level() const { return static_cast<int>(comps_.size()); }
  int size() const {
    int n = 0;
    for (const auto& p : comps_)
      for (int v : p) n += v;
    return n;
  }
  const std::vector<Partition>& components() const { return comps_; }
  const Partition& component(int t) const { return comps_.at(static_cast<std::size_t>(t - 1)); }
  /// lambda^{(comp)}_row, zero past the last row.
  int part(int comp, int row) const {
    const auto& p = component(comp);
    return row <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(row - 1)] : 0;
  }
  bool contains(const Node& a) const {
    return a.comp >= 1 && a.comp <= level() && a.row >= 1 && a.col >= 1 && a.col <= part(a.comp, a.row);
  }

  /// Nodes in the order t^lambda fills them.
  std::vector<Node> nodes() const {
    std::vector<Node> out;
    for (int t = 1; t <= level(); ++t)
      for (int r = 1; r <= static_cast<int>(component(t).size()); ++r)
        for (int c = 1; c <= part(t, r); ++c) out.push_back({r, c, t});
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t t = 0; t < comps_.size(); ++t) {
      if (t) out += '|';
      if (comps_[t].empty()) {
        out += '-';
        continue;
      }
      for (std::size_t r = 0; r < comps_[t].size(); ++r) {
        if (r) out += ',';
        out += std::to_string(comps_[t][r]);
      }
    }
    return out;
  }

  friend bool operator==(const Multipartition& a, const Multipartition& b) { return a.comps_ == b.comps_; }
  friend bool operator!=(const Multipartition& a, const Multipartition& b) { return !(a == b); }
  friend bool operator<(const Multipartition& a, const Multipartition& b) { return a.comps_ < b.comps_; }

private:
  std::vector<Partition> comps_;
};

/// Parses "8,3,2|5,3,1"; an empty component is written "-".
inline Multipartition parse_multipartition(const std::string& s) {
  std::vector<Partition> comps;
  std::stringstream ss(s);
  std::string comp;
  while (std::getline(ss, comp, '|')) {
    Partition p;
    if (comp != "-" && !comp.empty()) {
      std::stringstream cs(comp);
      std::string part;
      while (std::getline(cs, part, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(part, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (part.empty() || used != part.size()) throw std::invalid_argument("malformed multipartition '" + s + "'");
        p.push_back(v);
      }
    } else if (comp.empty()) {
      throw std::invalid_argument("malformed multipartition '" + s + "'");
    }
    comps.push_back(std::move(p));
  }
  if (comps.empty() || s.back() == '|') throw std::invalid_argument("malformed multipartition '" + s + "'");
  return Multipartition(std::move(comps));
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

/// Row lengths of a filling restricted to entries <= m, per component. The
/// result may be a composition when the filling is only row-strict.
template <class Tab>
std::vector<std::vector<int>> restricted_rows(const Tab& t, int m) {
  std::vector<std::vector<int>> rows;
  for (const auto& comp : t.rows()) {
    std::vector<int> lens;
    for (const auto& row : comp) lens.push_back(static_cast<int>(std::count_if(row.begin(), row.end(), [m](int v) { return v <= m; })));
    while (!lens.empty() && lens.back() == 0) lens.pop_back();
    rows.push_back(std::move(lens));
  }
  return rows;
}

/// Cumulative-sum dominance on (possibly composition-valued) row data.
inline bool dominates_rows(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  long before_a = 0, before_b = 0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    std::size_t len = std::max(a[t].size(), b[t].size());
    long sa = before_a, sb = before_b;
    for (std::size_t r = 0; r < len; ++r) {
      sa += r < a[t].size() ? a[t][r] : 0;
      sb += r < b[t].size() ? b[t][r] : 0;
      if (sa < sb) return false;
    }
    before_a = sa;
    before_b = sb;
  }
  return true;
}

/// Lexicographic key whose descending order extends dominance.
inline std::vector<int> dominance_key(const std::vector<std::vector<int>>& rows, int n) {
  std::vector<int> key;
  for (const auto& comp : rows) {
    int total = 0;
    for (int v : comp) total += v;
    key.push_back(total);
    for (int r = 0; r < n; ++r) key.push_back(r < static_cast<int>(comp.size()) ? comp[static_cast<std::size_t>(r)] : 0);
  }
  return key;
}

}  // namespace detail

/// All partitions of n in descending lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

/// Dominance order on multipartitions of the same size and level.
inline bool dominates(const Multipartition& lambda, const Multipartition& mu) {
  if (lambda.size() != mu.size() || lambda.level() != mu.level())
    throw std::invalid_argument("dominates: multipartitions differ in size or level");
  return detail::dominates_rows(lambda.components(), mu.components());
}

/// All l-multipartitions of n, ordered by descending (|lambda^(1)|, lambda^(1),
/// |lambda^(2)|, ...), which is a linear extension of dominance.
inline std::vector<Multipartition> enumerate_multipartitions(int n, int level) {
  if (n < 0 || level < 1) throw std::invalid_argument("enumerate_multipartitions: need n >= 0 and l >= 1");
  std::vector<Multipartition> out;
  std::vector<Partition> comps(static_cast<std::size_t>(level));
  std::function<void(int, int)> rec = [&](int t, int remaining) {
    if (t == level - 1) {
      for (const auto& p : enumerate_partitions(remaining)) {
        comps[static_cast<std::size_t>(t)] = p;
        out.emplace_back(comps);
      }
      return;
    }
    for (int size = remaining; size >= 0; --size)
      for (const auto& p : enumerate_partitions(size)) {
        comps[static_cast<std::size_t>(t)] = p;
        rec(t + 1, remaining - size);
      }
  };
  rec(0, n);
  return out;
}

/// Addable nodes, row-reading order within each component.
inline std::vector<Node> addable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int t = 1; t <= lambda.level(); ++t) {
    int rows = static_cast<int>(lambda.component(t).size());
    for (int r = 1; r <= rows + 1; ++r)
      if (r == 1 || lambda.part(t, r - 1) > lambda.part(t, r)) out.push_back({r, lambda.part(t, r) + 1, t});
  }
  return out;
}

/// Removable nodes, row-reading order within each component.
inline std::vector<Node> removable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int t = 1; t <= lambda.level(); ++t) {
    int rows = static_cast<int>(lambda.component(t).size());
    for (int r = 1; r <= rows; ++r)
      if (lambda.part(t, r) > lambda.part(t, r + 1)) out.push_back({r, lambda.part(t, r), t});
  }
  return out;
}

inline Residue residue(const Node& a, const Multicharge& kappa, const LieRank& rank) {
  return bar_residue(kappa[static_cast<std::size_t>(a.comp - 1)] + a.col - a.row, rank);
}

/// A filling of [lambda] by 1..n, stored as rows per component.
class Tableau {
public:
  using Rows = std::vector<std::vector<std::vector<int>>>;

  Tableau() = default;
  /// Validates that `rows` has the shape of a multipartition and is a bijection onto 1..n.
  explicit Tableau(Rows rows) : rows_(std::move(rows)) {
    std::vector<Partition> comps;
    for (auto& comp : rows_) {
      while (!comp.empty() && comp.back().empty()) comp.pop_back();
      Partition p;
      for (const auto& row : comp) p.push_back(static_cast<int>(row.size()));
      comps.push_back(std::move(p));
    }
    shape_ = Multipartition(std::move(comps));
    const int n = shape_.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& comp : rows_)
      for (const auto& row : comp)
        for (int v : row) {
          if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("Tableau: filling is not a bijection onto 1..n");
          seen[static_cast<std::size_t>(v)] = true;
        }
  }

  const Multipartition& shape() const { return shape_; }
  const Rows& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  int at(const Node& a) const {
    return rows_.at(static_cast<std::size_t>(a.comp - 1)).at(static_cast<std::size_t>(a.row - 1)).at(static_cast<std::size_t>(a.col - 1));
  }
  /// t^{-1}(k).
  Node node_of(int k) const {
    for (std::size_t t = 0; t < rows_.size(); ++t)
      for (std::size_t r = 0; r < rows_[t].size(); ++r)
        for (std::size_t c = 0; c < rows_[t][r].size(); ++c)
          if (rows_[t][r][c] == k) return {static_cast<int>(r) + 1, static_cast<int>(c) + 1, static_cast<int>(t) + 1};
    throw std::out_of_range("Tableau: entry not present");
  }

  bool is_row_strict() const {
    for (const auto& comp : rows_)
      for (const auto& row : comp)
        for (std::size_t c = 1; c < row.size(); ++c)
          if (row[c - 1] > row[c]) return false;
    return true;
  }
  bool is_standard() const {
    if (!is_row_strict()) return false;
    for (const auto& comp : rows_)
      for (std::size_t r = 1; r < comp.size(); ++r)
        for (std::size_t c = 0; c < comp[r].size(); ++c)
          if (comp[r - 1][c] > comp[r][c]) return false;
    return true;
  }

  /// w t: replace each entry k by w(k).
  Tableau permuted(const Permutation& w) const {
    Tableau out = *this;
    for (auto& comp : out.rows_)
      for (auto& row : comp)
        for (auto& v : row) v = w(v);
    return out;
  }
  /// s_r t: exchange the entries r and r+1.
  Tableau swapped(int r) const {
    Tableau out = *this;
    for (auto& comp : out.rows_)
      for (auto& row : comp)
        for (auto& v : row) {
          if (v == r) v = r + 1;
          else if (v == r + 1) v = r;
        }
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      if (t) out += " | ";
      if (rows_[t].empty()) out += "-";
      for (std::size_t r = 0; r < rows_[t].size(); ++r) {
        if (r) out += " / ";
        for (std::size_t c = 0; c < rows_[t][r].size(); ++c) {
          if (c) out += ',';
          out += std::to_string(rows_[t][r][c]);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
  friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows_ < b.rows_; }

private:
  Rows rows_;
  Multipartition shape_;
};

/// t^lambda: rows left to right, top to bottom, component 1 first.
inline Tableau initial_tableau(const Multipartition& lambda) {
  Tableau::Rows rows(static_cast<std::size_t>(lambda.level()));
  int next = 1;
  for (int t = 1; t <= lambda.level(); ++t)
    for (int part : lambda.component(t)) {
      std::vector<int> row;
      for (int c = 0; c < part; ++c) row.push_back(next++);
      rows[static_cast<std::size_t>(t - 1)].push_back(std::move(row));
    }
  return Tableau(std::move(rows));
}

/// s dominates t iff shape(s restricted to 1..m) dominates shape(t restricted to 1..m) for all m.
inline bool tableau_dominates(const Tableau& s, const Tableau& t) {
  if (s.shape() != t.shape()) throw std::invalid_argument("tableau_dominates: shapes differ");
  for (int m = 1; m <= s.size(); ++m)
    if (!detail::dominates_rows(detail::restricted_rows(s, m), detail::restricted_rows(t, m))) return false;
  return true;
}

inline bool tableau_strictly_dominates(const Tableau& s, const Tableau& t) {
  return s != t && tableau_dominates(s, t);
}

namespace detail {

inline std::vector<int> tableau_order_key(const Tableau& t) {
  std::vector<int> key;
  for (int m = 1; m <= t.size(); ++m) {
    auto k = dominance_key(restricted_rows(t, m), t.size());
    key.insert(key.end(), k.begin(), k.end());
  }
  return key;
}

inline void sort_by_dominance(std::vector<Tableau>& ts) {
  std::vector<std::pair<std::vector<int>, Tableau>> keyed;
  for (auto& t : ts) keyed.emplace_back(tableau_order_key(t), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  ts.clear();
  for (auto& [k, t] : keyed) ts.push_back(std::move(t));
}

}  // namespace detail

/// Std(lambda), most dominant first (t^lambda leads).
inline std::vector<Tableau> enumerate_standard(const Multipartition& lambda) {
  const int n = lambda.size();
  std::vector<Tableau> out;
  Tableau::Rows rows(static_cast<std::size_t>(lambda.level()));
  for (int t = 1; t <= lambda.level(); ++t) rows[static_cast<std::size_t>(t - 1)].resize(lambda.component(t).size());
  // Place 1..n one at a time into nodes whose left and upper neighbours are filled.
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.emplace_back(rows);
      return;
    }
    for (int t = 1; t <= lambda.level(); ++t) {
      auto& comp = rows[static_cast<std::size_t>(t - 1)];
      for (std::size_t r = 0; r < comp.size(); ++r) {
        const int filled = static_cast<int>(comp[r].size());
        if (filled >= lambda.part(t, static_cast<int>(r) + 1)) continue;
        if (r > 0 && static_cast<int>(comp[r - 1].size()) <= filled) continue;
        comp[r].push_back(k);
        rec(k + 1);
        comp[r].pop_back();
      }
    }
  };
  rec(1);
  detail::sort_by_dominance(out);
  return out;
}

/// All row-strict lambda-tableaux.
inline std::vector<Tableau> enumerate_row_strict(const Multipartition& lambda) {
  const int n = lambda.size();
  std::vector<Tableau> out;
  Tableau::Rows rows(static_cast<std::size_t>(lambda.level()));
  for (int t = 1; t <= lambda.level(); ++t) rows[static_cast<std::size_t>(t - 1)].resize(lambda.component(t).size());
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.emplace_back(rows);
      return;
    }
    for (int t = 1; t <= lambda.level(); ++t) {
      auto& comp = rows[static_cast<std::size_t>(t - 1)];
      for (std::size_t r = 0; r < comp.size(); ++r) {
        if (static_cast<int>(comp[r].size()) >= lambda.part(t, static_cast<int>(r) + 1)) continue;
        comp[r].push_back(k);
        rec(k + 1);
        comp[r].pop_back();
      }
    }
  };
  rec(1);
  return out;
}

/// i^t = (res t^{-1}(1), ..., res t^{-1}(n)).
inline ResidueSequence residue_sequence(const Tableau& t, const Multicharge& kappa, const LieRank& rank) {
  ResidueSequence seq(static_cast<std::size_t>(t.size()));
  for (std::size_t c = 0; c < t.rows().size(); ++c)
    for (std::size_t r = 0; r < t.rows()[c].size(); ++r)
      for (std::size_t col = 0; col < t.rows()[c][r].size(); ++col) {
        Node a{static_cast<int>(r) + 1, static_cast<int>(col) + 1, static_cast<int>(c) + 1};
        seq[static_cast<std::size_t>(t.rows()[c][r][col] - 1)] = residue(a, kappa, rank);
      }
  return seq;
}

/// w^t (with w^t t^lambda = t) and its preferred reduced word.
struct TableauWord {
  Permutation permutation;
  std::vector<int> word;
};

inline TableauWord tableau_word(const Tableau& t) {
  const Tableau init = initial_tableau(t.shape());
  std::vector<int> image(static_cast<std::size_t>(t.size()));
  for (const auto& a : t.shape().nodes()) image[static_cast<std::size_t>(init.at(a) - 1)] = t.at(a);
  Permutation w(std::move(image));
  return {w, w.reduced_word()};
}

/// Garnir nodes: (r, c, t) with (r+1, c, t) also in [lambda].
inline std::vector<Node> garnir_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (const auto& a : lambda.nodes())
    if (lambda.contains({a.row + 1, a.col, a.comp})) out.push_back(a);
  return out;
}

inline bool is_garnir_node(const Multipartition& lambda, const Node& a) {
  return lambda.contains(a) && lambda.contains({a.row + 1, a.col, a.comp});
}

/// The Garnir belt B^A: (r, c..lambda_r) together with (r+1, 1..c).
inline std::vector<Node> garnir_belt(const Multipartition& lambda, const Node& a) {
  if (!is_garnir_node(lambda, a)) throw std::invalid_argument("garnir_belt: not a Garnir node");
  std::vector<Node> belt;
  for (int c = a.col; c <= lambda.part(a.comp, a.row); ++c) belt.push_back({a.row, c, a.comp});
  for (int c = 1; c <= a.col; ++c) belt.push_back({a.row + 1, c, a.comp});
  return belt;
}

/// g^A: agrees with t^lambda off the belt; the belt entries run along row r+1 then row r.
inline Tableau garnir_tableau(const Multipartition& lambda, const Node& a) {
  auto belt = garnir_belt(lambda, a);
  Tableau init = initial_tableau(lambda);
  std::vector<int> entries;
  for (const auto& b : belt) entries.push_back(init.at(b));
  std::sort(entries.begin(), entries.end());
  Tableau::Rows rows = init.rows();
  std::size_t k = 0;
  auto put = [&](int row, int col) {
    rows[static_cast<std::size_t>(a.comp - 1)][static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = entries[k++];
  };
  for (int c = 1; c <= a.col; ++c) put(a.row + 1, c);
  for (int c = a.col; c <= lambda.part(a.comp, a.row); ++c) put(a.row, c);
  return Tableau(std::move(rows));
}

/// The unique standard tableau dominated by every other one, if it exists.
inline std::optional<Tableau> least_dominant(const std::vector<Tableau>& tableaux) {
  for (const auto& t : tableaux) {
    bool minimum = std::all_of(tableaux.begin(), tableaux.end(), [&](const Tableau& s) { return tableau_dominates(s, t); });
    if (minimum) return t;
  }
  return std::nullopt;
}

/// Brute-force I^n_Lambda: residue sequences of all standard tableaux of all
/// shapes in the l-multipartitions of n.
inline std::set<ResidueSequence> residue_sequences_of_level(int n, const Multicharge& kappa, const LieRank& rank) {
  std::set<ResidueSequence> out;
  for (const auto& lambda : enumerate_multipartitions(n, kappa.level()))
    for (const auto& t : enumerate_standard(lambda)) out.insert(residue_sequence(t, kappa, rank));
  return out;
}

/// I^n, or for C_infinity the sequences with entries below `bound`.
inline std::vector<ResidueSequence> all_sequences(int n, const LieRank& rank, int bound = 0) {
  const int count = rank.is_finite() ? rank.ell() + 1 : bound;
  if (count <= 0) throw std::invalid_argument("all_sequences: need a residue bound for infinite rank");
  std::vector<ResidueSequence> out;
  ResidueSequence cur(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < count; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

/// Residue bound for C_infinity enumerations: max(kappa-bar) + n.
inline int residue_bound(int n, const Multicharge& kappa, const LieRank& rank) {
  int m = 0;
  for (auto k : kappa.bar(rank)) m = std::max(m, k);
  return m + n + 1;
}

/// Which form of the neighbour conditions to evaluate.
///
/// Literal: conditions (i)-(iii) as stated, with the repeated-residue rule
/// "both neighbours occur in between" except that a repeated 1 (resp. ell - 1)
/// needs only 0 (resp. ell) in between.
///
/// Amended: the repeated-residue rule also accounts for a first row or column
/// that folds at an end residue and climbs back, as happens when (SS2) holds
/// with equality. A repeated v != 0, ell is allowed when both neighbours occur
/// in between, or when the residues strictly between v and an end occur at
/// least twice and that end at least once; a repeated end residue needs its unique
/// neighbour to occur at least twice in between (the two nodes sharing a
/// diagonal).
enum class NeighbourresReading { Literal, Amended };

/// Evaluates the three neighbour conditions characterizing I^n_Lambda when
/// (SS1) and (SS2) hold.
inline bool neighbourres_check(const ResidueSequence& i, const WeightVector& w, const LieRank& rank,
                               NeighbourresReading reading = NeighbourresReading::Literal) {
  if (i.empty()) return true;
  const bool finite = rank.is_finite();
  const int ell = finite ? rank.ell() : -1;
  auto nbrs = [&](Residue r) { return std::set<Residue>{bar_residue(r - 1, rank), bar_residue(r + 1, rank)}; };
  auto is_end = [&](Residue v) { return v == 0 || (finite && v == ell); };

  // (i)
  if (weight_pairing(w, i[0]) == 0) return false;
  for (std::size_t r = 1; r < i.size(); ++r) {
    // (ii)
    if (weight_pairing(w, i[r]) == 0) {
      bool seen = false;
      for (auto nb : nbrs(i[r]))
        seen = seen || std::find(i.begin(), i.begin() + static_cast<std::ptrdiff_t>(r), nb) != i.begin() + static_cast<std::ptrdiff_t>(r);
      if (!seen) return false;
    }
    // (iii)
    for (std::size_t s = 0; s < r; ++s) {
      if (i[s] != i[r]) continue;
      std::multiset<Residue> between(i.begin() + static_cast<std::ptrdiff_t>(s) + 1, i.begin() + static_cast<std::ptrdiff_t>(r));
      const Residue v = i[r];
      bool both = true;
      for (auto nb : nbrs(v)) both = both && between.count(nb) > 0;
      if (reading == NeighbourresReading::Literal) {
        const bool is_one = v == 1;
        const bool is_ell_minus_one = finite && v == ell - 1;
        if (is_one && is_ell_minus_one) {
          if (!between.count(0) || !between.count(ell)) return false;
        } else if (is_one) {
          if (!between.count(0)) return false;
        } else if (is_ell_minus_one) {
          if (!between.count(ell)) return false;
        } else if (!both) {
          return false;
        }
      } else if (is_end(v)) {
        if (between.count(*nbrs(v).begin()) < 2) return false;
      } else if (!both) {
        // A fold at 0 passes v-1, ..., 1 twice and 0 once; likewise at ell.
        auto folds = [&](int end, int step) {
          for (int u = v + step; u != end; u += step)
            if (between.count(u) < 2) return false;
          return between.count(end) > 0;
        };
        if (!folds(0, -1) && !(finite && folds(ell, 1))) return false;
      }
    }
  }
  return true;
}

}  // namespace klrc

#endif  // KLRC_TABLEAUX_HPP
