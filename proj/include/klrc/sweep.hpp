#ifndef KLRC_SWEEP_HPP
#define KLRC_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "criterion.hpp"
#include "repmodels.hpp"
#include "serialize.hpp"
#include "witness.hpp"

namespace klrc {

// Desk-scale caps on sweep grids.
inline constexpr int kSweepMaxEll = 8;
inline constexpr int kSweepMaxLevel = 3;
inline constexpr int kSweepMaxN = 7;
inline constexpr std::size_t kSweepMaxPoints = 50000;

struct GridPoint {
  LieRank rank;
  Multicharge kappa;
  int n;
  std::string field;
};

struct GridSpec {
  std::vector<LieRank> ranks;
  std::vector<int> levels;
  std::vector<int> ns;
  std::vector<std::string> fields;
  /// Explicit charge tuples; when unset every tuple in {0..ell}^l is used
  /// ({0..max_infinite_charge}^l for C_infinity).
  std::optional<std::vector<Multicharge>> charges;
  int max_infinite_charge = 3;
};

namespace detail {

inline void charge_tuples(int level, int top, std::vector<std::int64_t>& cur, std::vector<Multicharge>& out) {
  if (static_cast<int>(cur.size()) == level) {
    out.emplace_back(cur);
    return;
  }
  for (int c = 0; c <= top; ++c) {
    cur.push_back(c);
    charge_tuples(level, top, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Grid points in canonical order: rank, level, charge tuple, n, field.
inline std::vector<GridPoint> grid_points(const GridSpec& g) {
  for (const auto& r : g.ranks)
    if (r.is_finite() && r.ell() > kSweepMaxEll) throw std::invalid_argument("sweep: ell above cap " + std::to_string(kSweepMaxEll));
  for (int l : g.levels)
    if (l < 1 || l > kSweepMaxLevel) throw std::invalid_argument("sweep: level outside 1.." + std::to_string(kSweepMaxLevel));
  for (int n : g.ns)
    if (n < 1 || n > kSweepMaxN) throw std::invalid_argument("sweep: n outside 1.." + std::to_string(kSweepMaxN));
  if (g.max_infinite_charge < 0 || g.max_infinite_charge > 2 * kSweepMaxEll)
    throw std::invalid_argument("sweep: max infinite charge outside 0.." + std::to_string(2 * kSweepMaxEll));
  for (const auto& f : g.fields) parse_field(f);

  std::vector<GridPoint> out;
  for (const auto& rank : g.ranks)
    for (int level : g.levels) {
      std::vector<Multicharge> charges;
      if (g.charges) {
        for (const auto& k : *g.charges)
          if (k.level() == level) charges.push_back(k);
      } else {
        std::vector<std::int64_t> cur;
        detail::charge_tuples(level, rank.is_finite() ? rank.ell() : g.max_infinite_charge, cur, charges);
      }
      for (const auto& kappa : charges)
        for (int n : g.ns)
          for (const auto& f : g.fields) {
            out.push_back(GridPoint{rank, kappa, n, f});
            if (out.size() > kSweepMaxPoints) throw std::invalid_argument("sweep: more than " + std::to_string(kSweepMaxPoints) + " grid points");
          }
    }
  return out;
}

namespace detail {

template <class Field>
io::json evaluate_point(const GridPoint& p, const Field& field) {
  io::json j;
  j["ell"] = p.rank.to_string();
  j["charge"] = p.kappa.to_string();
  j["n"] = p.n;
  j["field"] = p.field;
  const auto report = is_semisimple(p.kappa, p.n, p.rank);
  j["verdict"] = report.verdict;
  if (report.verdict) {
    std::size_t shapes = 0, violations = 0, expected = 0;
    for (const auto& lambda : enumerate_multipartitions(p.n, p.kappa.level())) {
      auto rep = build_irreducible(lambda, p.kappa, p.rank, field);
      violations += verify_representation(rep).violations.size();
      expected += rep.dim * rep.dim;
      ++shapes;
    }
    const auto units = matrix_units(p.n, p.kappa, p.rank, field);
    j["irreducibles"] = shapes;
    j["violations"] = violations;
    j["matrix_units"] = units.ok();
    j["algebra_dimension"] = units.algebra_dimension;
    j["ok"] = violations == 0 && units.ok() && units.algebra_dimension == expected;
  } else {
    auto plan = route_witness(p.kappa, p.n, p.rank);
    auto cert = certify_witness(*plan, p.kappa, p.n, p.rank, field);
    j["witness"] = to_string(plan->kind);
    j["component"] = plan->component;
    if (cert.shape) j["shape"] = cert.shape->to_string();
    j["module_verified"] = cert.module_verified;
    j["no_retraction"] = cert.no_retraction;
    j["certified"] = cert.certified();
    if (!cert.notes.empty()) j["notes"] = cert.notes;
    j["ok"] = cert.certified();
  }
  return j;
}

}  // namespace detail

/// One JSON record per point. Failures are recorded in the record
/// ("ok": false, "error": ...) and never abort the sweep.
inline io::json evaluate_point(const GridPoint& p) {
  try {
    return std::visit([&](const auto& f) { return detail::evaluate_point(p, f); }, parse_field(p.field));
  } catch (const std::exception& e) {
    io::json j;
    j["ell"] = p.rank.to_string();
    j["charge"] = p.kappa.to_string();
    j["n"] = p.n;
    j["field"] = p.field;
    j["ok"] = false;
    j["error"] = e.what();
    return j;
  }
}

/// Evaluates every point on a pool of `threads` workers; results come back
/// in the order of `points`.
inline std::vector<io::json> run_sweep(const std::vector<GridPoint>& points, unsigned threads) {
  std::vector<io::json> out(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < points.size(); k = next++) out[k] = evaluate_point(points[k]);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace klrc

#endif  // KLRC_SWEEP_HPP
