// A walk through one semisimple case: ell = 3, kappa = (2), n = 3.
// Prints the criterion, each irreducible with its residue sequences, and the
// matrix-unit check.

#include <iostream>

#include "klrc/klrc.hpp"

int main() {
  using namespace klrc;
  const auto rank = LieRank::finite(3);
  const Multicharge kappa({2});
  const int n = 3;
  const RationalField q;

  const auto report = is_semisimple(kappa, n, rank);
  std::cout << "ell 3, kappa (2), n 3: " << (report.verdict ? "semisimple" : "not semisimple") << "\n\n";

  std::size_t total = 0;
  for (const auto& lambda : enumerate_multipartitions(n, kappa.level())) {
    auto rep = build_irreducible(lambda, kappa, rank, q);
    auto check = verify_representation(rep);
    total += rep.dim * rep.dim;
    std::cout << "D(" << lambda.to_string() << "): dimension " << rep.dim << ", " << check.checked << " relations, "
              << check.violations.size() << " violations\n";
    for (const auto& t : enumerate_standard(lambda))
      std::cout << "    " << t.to_string() << "    i = (" << to_string(residue_sequence(t, kappa, rank)) << ")\n";
  }

  const auto units = matrix_units(n, kappa, rank, q);
  std::cout << "\nmatrix units: " << units.units << " elements, " << (units.ok() ? "all products correct" : "FAILED") << "\n";
  std::cout << "dim R^Lambda_3 = " << units.algebra_dimension << " = sum of squares " << total << "\n";
  return units.ok() ? 0 : 1;
}
