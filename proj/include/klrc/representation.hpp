#ifndef KLRC_REPRESENTATION_HPP
#define KLRC_REPRESENTATION_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "root_data.hpp"

namespace klrc {

/// A finite-dimensional module given by one exact matrix per generator.
/// Matrices act on column vectors. e(i) is the zero matrix for every i not
/// listed in `idempotents`.
template <class Field>
struct Representation {
  using Mat = Matrix<Field>;

  Representation(Field f, LieRank r, WeightVector w, int degree, std::size_t dimension)
      : field(std::move(f)), rank(r), weight(std::move(w)), n(degree), dim(dimension) {
    if (n < 1) throw std::invalid_argument("Representation: n must be positive");
    for (int k = 0; k < n; ++k) x.push_back(Mat(field, dim, dim));
    for (int k = 0; k + 1 < n; ++k) psi.push_back(Mat(field, dim, dim));
    zero_ = Mat(field, dim, dim);
  }

  Field field;
  LieRank rank;
  WeightVector weight;
  int n;
  std::size_t dim;
  std::map<ResidueSequence, Mat> idempotents;
  std::vector<Mat> x;    // x[r-1]
  std::vector<Mat> psi;  // psi[r-1]
  std::vector<std::string> labels;

  std::vector<ResidueSequence> support() const {
    std::vector<ResidueSequence> out;
    for (const auto& [i, m] : idempotents) out.push_back(i);
    return out;
  }
  const Mat& idempotent(const ResidueSequence& i) const {
    auto it = idempotents.find(i);
    return it == idempotents.end() ? zero_ : it->second;
  }
  const Mat& x_matrix(int r) const { return x.at(static_cast<std::size_t>(r - 1)); }
  const Mat& psi_matrix(int r) const { return psi.at(static_cast<std::size_t>(r - 1)); }
  Mat& x_matrix(int r) { return x.at(static_cast<std::size_t>(r - 1)); }
  Mat& psi_matrix(int r) { return psi.at(static_cast<std::size_t>(r - 1)); }

  /// Every generator matrix: idempotents in support order, then x, then psi.
  std::vector<const Mat*> generators() const {
    std::vector<const Mat*> out;
    for (const auto& [i, m] : idempotents) out.push_back(&m);
    for (const auto& m : x) out.push_back(&m);
    for (const auto& m : psi) out.push_back(&m);
    return out;
  }

  /// Throws std::invalid_argument on shape errors.
  void validate() const {
    auto check = [&](const Mat& m, const std::string& what) {
      if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("Representation: " + what + " is not " + std::to_string(dim) + "x" + std::to_string(dim));
    };
    if (static_cast<int>(x.size()) != n || static_cast<int>(psi.size()) != n - 1)
      throw std::invalid_argument("Representation: wrong number of generator matrices");
    for (const auto& [i, m] : idempotents) {
      if (static_cast<int>(i.size()) != n) throw std::invalid_argument("Representation: support sequence of wrong length");
      for (auto r : i)
        if (!rank.contains(r)) throw std::invalid_argument("Representation: residue out of range");
      check(m, "e(" + to_string(i) + ")");
    }
    for (int r = 1; r <= n; ++r) check(x_matrix(r), "x_" + std::to_string(r));
    for (int r = 1; r < n; ++r) check(psi_matrix(r), "psi_" + std::to_string(r));
    if (!labels.empty() && labels.size() != dim) throw std::invalid_argument("Representation: label count differs from dimension");
  }

private:
  Mat zero_;
};

}  // namespace klrc

#endif  // KLRC_REPRESENTATION_HPP
