#pragma once

// Signed three-or-more-term Plucker relations
//
//   Delta_a Delta_b = sum_{j in a \ b} sign(j) Delta_{a \ {j} u {i}} Delta_{b \ {i} u {j}},   i in b \ a.
//
// Signs come from the exterior algebra: write b as the sequence (i, b \ {i}) and
// expand the Sylvester exchange of its first vector against each vector of a;
// every unsorted column sequence contributes the sign of its sorting permutation.

#include <span>
#include <vector>

#include "rvar/subset.hpp"

namespace rvar {

struct RelationTerm {
  KSubset left;   ///< a \ {j} u {i}
  KSubset right;  ///< b \ {i} u {j}
  int sign;       ///< +1 or -1
  int swapped;    ///< j
};

struct PluckerRelation {
  KSubset a;
  KSubset b;
  int exchanged;  ///< i
  std::vector<RelationTerm> terms;
};

/// Sign of the permutation sorting `seq` ascending; 0 when `seq` has a repeat.
int sort_sign(std::span<const int> seq);

/// Throws InvalidParameters unless i is in b \ a.
PluckerRelation plucker_relation_terms(const KSubset& a, const KSubset& b, int i);

/// Every relation over S(k,n): all ordered pairs (a, b) and every i in b \ a. Cached per (k,n).
const std::vector<PluckerRelation>& all_plucker_relations(int k, int n);

}  // namespace rvar
