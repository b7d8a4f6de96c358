#include "birev/permutation.hpp"

#include <numeric>

#include "birev/error.hpp"

namespace birev {

Permutation::Permutation(std::vector<Letter> images) : images_(std::move(images)) {
  if (!isBijection(images_))
    throw Error(ErrorKind::InvalidTable, "image list is not a permutation");
}

bool Permutation::isBijection(std::span<const Letter> images) {
  std::vector<bool> seen(images.size(), false);
  for (Letter y : images) {
    if (y >= images.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), Letter{0});
  return p;
}

Permutation Permutation::cycle(std::size_t n, std::span<const Letter> points) {
  Permutation p = identity(n);
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j] >= n) throw Error(ErrorKind::InvalidTable, "cycle point out of range");
    p.images_[points[j]] = points[(j + 1) % points.size()];
  }
  if (!isBijection(p.images_))
    throw Error(ErrorKind::InvalidTable, "cycle repeats a point");
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) p.images_[x] = images_[other.images_[x]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) p.images_[images_[x]] = static_cast<Letter>(x);
  return p;
}

Permutation Permutation::power(std::int64_t e) const {
  // Walk each cycle by e mod its length.
  Permutation p = identity(images_.size());
  for (const auto& c : cycles()) {
    const auto len = static_cast<std::int64_t>(c.size());
    const std::int64_t shift = ((e % len) + len) % len;
    for (std::size_t j = 0; j < c.size(); ++j) {
      p.images_[c[j]] = c[(j + static_cast<std::size_t>(shift)) % c.size()];
    }
  }
  return p;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

bool Permutation::isIdentity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::vector<std::vector<Letter>> Permutation::cycles() const {
  std::vector<std::vector<Letter>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Letter> c;
    for (auto x = static_cast<Letter>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::toCycleString() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(c[j]);
    }
    s += ')';
  }
  return s;
}

}  // namespace birev
