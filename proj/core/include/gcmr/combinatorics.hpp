#ifndef GCMR_COMBINATORICS_HPP
#define GCMR_COMBINATORICS_HPP

#include <vector>

#include "gcmr/rational.hpp"

namespace gcmr {

// Exact n-choose-k; 0 when k < 0 or k > n.
BigInt binomial(int n, int k);

// All k-element subsets of {1..n} as sorted id lists, enumerated in
// lexicographic order ({1,2} < {1,3} < {1,4} < {2,3} < ...), which is the
// order the worked schedules and packet labels follow.
std::vector<std::vector<int>> k_subsets(int n, int k);

}  // namespace gcmr

#endif
