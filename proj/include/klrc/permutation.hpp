#ifndef KLRC_PERMUTATION_HPP
#define KLRC_PERMUTATION_HPP

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace klrc {

/// Permutation of {1,...,n} in one-line notation: image[k-1] = w(k).
/// Products compose as functions: (u * v)(k) = u(v(k)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n) : image_(static_cast<std::size_t>(n)) {
    std::iota(image_.begin(), image_.end(), 1);
  }
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size() + 1, false);
    for (int v : image_) {
      if (v < 1 || v > static_cast<int>(image_.size()) || seen[v])
        throw std::invalid_argument("Permutation: not a bijection");
      seen[v] = true;
    }
  }
  /// s_r as a permutation of degree n.
  static Permutation simple(int n, int r) {
    Permutation p(n);
    std::swap(p.image_[r - 1], p.image_[r]);
    return p;
  }
  /// s_{a_1} s_{a_2} ... s_{a_k}.
  static Permutation from_word(int n, const std::vector<int>& word) {
    Permutation p(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) p = simple(n, *it) * p;
    return p;
  }

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int k) const { return image_[k - 1]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t k = 0; k < image_.size(); ++k) inv[image_[k] - 1] = static_cast<int>(k) + 1;
    return Permutation(std::move(inv));
  }
  friend Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.degree() != v.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<int> out(v.image_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = u(v.image_[k]);
    Permutation p;
    p.image_ = std::move(out);
    return p;
  }
  /// s_r * w without building s_r.
  Permutation left_simple(int r) const {
    Permutation p = *this;
    for (auto& v : p.image_) {
      if (v == r) v = r + 1;
      else if (v == r + 1) v = r;
    }
    return p;
  }

  int length() const {
    int inv = 0;
    for (std::size_t a = 0; a < image_.size(); ++a)
      for (std::size_t b = a + 1; b < image_.size(); ++b)
        if (image_[a] > image_[b]) ++inv;
    return inv;
  }
  /// True iff l(s_r w) < l(w), i.e. r+1 precedes r in one-line notation.
  bool is_left_descent(int r) const {
    int pos_r = 0, pos_r1 = 0;
    for (std::size_t k = 0; k < image_.size(); ++k) {
      if (image_[k] == r) pos_r = static_cast<int>(k);
      if (image_[k] == r + 1) pos_r1 = static_cast<int>(k);
    }
    return pos_r1 < pos_r;
  }
  int smallest_left_descent() const {
    for (int r = 1; r < degree(); ++r)
      if (is_left_descent(r)) return r;
    return 0;
  }
  bool is_identity() const {
    for (std::size_t k = 0; k < image_.size(); ++k)
      if (image_[k] != static_cast<int>(k) + 1) return false;
    return true;
  }

  /// Preferred reduced expression: repeatedly strip the smallest left descent.
  /// The result a_1 ... a_k satisfies w = s_{a_1} ... s_{a_k} and the word of
  /// s_{a_1} w is a_2 ... a_k.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Permutation rest = *this;
    while (int r = rest.smallest_left_descent()) {
      word.push_back(r);
      rest = rest.left_simple(r);
    }
    return word;
  }

  /// Position of this permutation in the lexicographic order of S_n (Lehmer code).
  std::size_t index() const {
    std::size_t idx = 0;
    const std::size_t n = image_.size();
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t smaller = 0;
      for (std::size_t b = a + 1; b < n; ++b)
        if (image_[b] < image_[a]) ++smaller;
      idx = idx * (n - a) + smaller;
    }
    return idx;
  }
  static Permutation from_index(int n, std::size_t idx) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(n));
    for (int a = n - 1; a >= 0; --a) {
      std::size_t base = static_cast<std::size_t>(n - a);
      digits[a] = idx % base;
      idx /= base;
    }
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    for (int a = 0; a < n; ++a) {
      out.push_back(pool[digits[a]]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[a]));
    }
    return Permutation(std::move(out));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.image_ < b.image_; }

private:
  std::vector<int> image_;
};

inline std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

/// Place permutation s_r on a sequence (1-based r).
template <class Seq>
Seq swap_places(Seq s, int r) {
  std::swap(s.at(r - 1), s.at(r));
  return s;
}

}  // namespace klrc

#endif  // KLRC_PERMUTATION_HPP
