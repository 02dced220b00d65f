#pragma once

#include <cstdint>
#include <vector>

namespace eigenframe {

/// A subset of Z_2^n \ {0} (n <= 5) as a bit mask: bit v is set iff v is in
/// the set.
using ConnectionMask = std::uint32_t;

std::vector<std::uint32_t> mask_elements(ConnectionMask mask);
ConnectionMask elements_mask(const std::vector<std::uint32_t>& elements);

/// Lexicographic order of the sorted element lists of two equal-size sets: a
/// precedes b iff the smallest element of the symmetric difference is in a.
bool lex_less(ConnectionMask a, ConnectionMask b);

/// Lexicographically least image of the set under GL(n, 2). The least image
/// sends some ordered independent tuple of the set to e_0, e_1, ..., so only
/// such tuples are searched, and a branch stops as soon as the images fixed so
/// far (those below 2^j) lose to the best found.
ConnectionMask canonical_form(int n, ConnectionMask mask);

/// Canonical representatives of the GL(n, 2)-orbits of spanning subsets
/// (connected Cayley graphs), ordered by size and then lexicographically.
/// Exhaustive for n <= 4; for n = 5 every orbit of size k + 1 is reached by
/// adding one element to an orbit representative of size k. Throws
/// Unsupported for n > 5.
std::vector<ConnectionMask> enumerate_orbits(int n, unsigned workers = 1);

/// Orbit representatives of all subsets (spanning or not) by augmentation.
std::vector<ConnectionMask> enumerate_all_orbits_by_augmentation(int n, unsigned workers = 1);

}  // namespace eigenframe
