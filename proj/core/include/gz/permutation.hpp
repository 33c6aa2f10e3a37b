#ifndef GZ_PERMUTATION_HPP
#define GZ_PERMUTATION_HPP

#include <gz/matrix.hpp>

#include <numeric>
#include <stdexcept>
#include <vector>

namespace gz {

/// Permutation of {1, ..., n}. image(k) is 1-based; the associated matrix
/// sends e_k to e_{image(k)}.
class Permutation {
 public:
  explicit Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }
  static Permutation identity(int n) { return Permutation(n); }

  /// Cycle (c_1 c_2 ... c_m): c_1 -> c_2 -> ... -> c_m -> c_1.
  static Permutation from_cycle(const std::vector<int>& cycle, int n) {
    Permutation p(n);
    const int m = static_cast<int>(cycle.size());
    for (int t = 0; t < m; ++t) {
      const int a = cycle[t], b = cycle[(t + 1) % m];
      if (a < 1 || a > n) throw std::invalid_argument("permutation cycle: index out of range");
      p.img_[a - 1] = b;
    }
    return p;
  }

  static Permutation transposition(int a, int b, int n) { return from_cycle({a, b}, n); }

  /// image list, 1-based values.
  static Permutation from_images(std::vector<int> images) {
    Permutation p(static_cast<int>(images.size()));
    p.img_ = std::move(images);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int image(int k) const { return img_[k - 1]; }
  bool fixes(int k) const { return image(k) == k; }

  Permutation inverse() const {
    Permutation p(size());
    for (int k = 1; k <= size(); ++k) p.img_[image(k) - 1] = k;
    return p;
  }

  /// (a * b)(k) = a(b(k)).
  Permutation operator*(const Permutation& b) const {
    if (size() != b.size()) throw std::invalid_argument("permutation *: size mismatch");
    Permutation p(size());
    for (int k = 1; k <= size(); ++k) p.img_[k - 1] = image(b.image(k));
    return p;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }

  RationalMatrix matrix() const {
    RationalMatrix m(size(), size());
    for (int k = 1; k <= size(); ++k) m.at(image(k) - 1, k - 1) = 1;
    return m;
  }

 private:
  std::vector<int> img_;
};

}  // namespace gz

#endif
