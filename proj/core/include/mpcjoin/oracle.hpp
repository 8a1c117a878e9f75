#pragma once

#include <cstdint>

#include "mpcjoin/relation.hpp"

namespace mpcjoin {

/// Exact join result computed by attribute-order backtracking with candidate
/// intersection. Worst-case exponential; intended for desk-scale ground truth.
/// The empty query joins to the relation holding the single empty tuple.
Relation join_oracle(const JoinQuery& q);

/// Result cardinality by the same backtracking, without materializing.
std::uint64_t join_count(const JoinQuery& q);

/// Cartesian product of relations with pairwise disjoint schemes.
Relation cartesian_oracle(const std::vector<Relation>& rs);

}  // namespace mpcjoin
