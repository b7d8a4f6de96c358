#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace birev {

/// A permutation of {0..n-1} in image form, used for actions on the leaves
/// of a truncated tree.
using PointPerm = std::vector<std::uint32_t>;

PointPerm identityPerm(std::size_t n);
/// (lhs * rhs)(x) = lhs(rhs(x)).
PointPerm composePerm(const PointPerm& lhs, const PointPerm& rhs);
PointPerm invertPerm(const PointPerm& p);

/// All elements of <gens>, discovered breadth-first from the identity by
/// left multiplication with gens in order. Throws OrderCapExceeded.
std::vector<PointPerm> enumerateGroup(std::span<const PointPerm> gens, std::size_t n,
                                      std::size_t orderCap);

/// Orbit of `point` under <gens>, in discovery order.
std::vector<std::uint32_t> orbitOf(std::span<const PointPerm> gens, std::size_t n,
                                   std::uint32_t point);

/// Exact order of <gens> by deterministic Schreier-Sims. Throws
/// OrderCapExceeded once the order provably exceeds `orderCap`.
std::uint64_t groupOrder(std::span<const PointPerm> gens, std::size_t n, std::uint64_t orderCap);

}  // namespace birev
