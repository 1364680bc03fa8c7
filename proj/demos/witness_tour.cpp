// One non-split witness for each routing case, certified over F_5.

#include <iostream>
#include <string>
#include <vector>

#include "klrc/klrc.hpp"

namespace {

struct Case {
  int ell;
  std::vector<std::int64_t> charges;
  int n;
};

}  // namespace

int main() {
  using namespace klrc;
  const PrimeField f5(5);
  const std::vector<Case> cases{{2, {0}, 3}, {3, {1, 1}, 2}, {2, {1}, 4}, {3, {2}, 5}, {4, {1, 2}, 2}};
  int failures = 0;
  for (const auto& c : cases) {
    const auto rank = LieRank::finite(c.ell);
    const Multicharge kappa(c.charges);
    const auto plan = route_witness(kappa, c.n, rank);
    auto cert = certify_witness(*plan, kappa, c.n, rank, f5);
    std::cout << "ell " << c.ell << ", kappa (" << kappa.to_string() << "), n " << c.n << ": " << to_string(plan->kind);
    if (cert.shape) std::cout << ", Specht " << cert.shape->to_string() << " at v^{" << cert.least_dominant->to_string() << "}";
    std::cout << ", dim " << cert.rep->dim << ", retraction ranks " << cert.retraction_coefficient_rank << " < "
              << cert.retraction_augmented_rank << ": " << (cert.certified() ? "non-split" : "NOT certified") << "\n";
    failures += cert.certified() ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
