#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "birev/alphabet.hpp"

namespace birev {

/// A bijection of {0, ..., n-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidTable unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<Letter> images);

  static Permutation identity(std::size_t n);
  /// The cycle (c0 c1 ... cm) on n points, c_j -> c_{j+1}.
  static Permutation cycle(std::size_t n, std::span<const Letter> points);
  static Permutation cycle(std::size_t n, std::initializer_list<Letter> points) {
    return cycle(n, std::span<const Letter>(points.begin(), points.size()));
  }
  static bool isBijection(std::span<const Letter> images);

  std::size_t size() const { return images_.size(); }
  Letter operator()(Letter x) const { return images_[x]; }
  const std::vector<Letter>& images() const { return images_; }

  /// (this * other)(x) = this(other(x)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  Permutation power(std::int64_t e) const;
  std::uint64_t order() const;
  bool isIdentity() const;

  /// Disjoint cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<Letter>> cycles() const;
  /// Cycle notation such as "(0 2 3)"; "()" for the identity.
  std::string toCycleString() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Letter> images_;
};

}  // namespace birev
