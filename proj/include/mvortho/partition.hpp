#pragma once

#include <utility>
#include <vector>

#include "mvortho/exact.hpp"

namespace mvortho {

/// Weakly decreasing vector of nonnegative integers, fixed length n.
using Partition = std::vector<int>;

bool is_partition(const Partition& lambda);
long weight(const Partition& lambda);

/// Graded-lex comparison: first by |lambda|, ties by ascending lexicographic
/// order on the parts. Any linear extension of dominance would do; this one
/// is deterministic and cheap.
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// mu <= lambda iff every leading partial sum of mu is <= that of lambda.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// All mu with mu <= lambda in dominance order (any weight), listed in the
/// PartitionLess linear extension. Contains lambda itself.
std::vector<Partition> ideal(const Partition& lambda);

/// Subset J of {1..n} with a sign for each member. Indices are 0-based and
/// strictly increasing.
struct SignedIndexSet {
    std::vector<std::pair<int, int>> entries;  // (index, sign in {+1,-1})

    bool empty() const { return entries.empty(); }
    size_t size() const { return entries.size(); }
};

/// lambda + sum_{j in J} sign_j e_j; no partition check.
Partition shift_by(const Partition& lambda, const SignedIndexSet& eps_j);

/// All (eps J, lambda + e_{eps J}) with |J| <= r and the shifted vector still
/// a partition. Includes the empty set (lambda itself). 1 <= r <= n.
std::vector<std::pair<SignedIndexSet, Partition>> pieri_neighbors(const Partition& lambda, int r);

/// Monomial symmetric function m_lambda evaluated at the given coordinates:
/// the sum of z^mu over the distinct permutations mu of lambda.
ExactScalar msym_eval(const Partition& lambda, const std::vector<ExactScalar>& point);

/// Distinct permutations of lambda's parts.
std::vector<std::vector<int>> orbit(const Partition& lambda);

/// "[2,1,0]" rendering used in error messages and JSON.
std::string partition_str(const Partition& lambda);

}  // namespace mvortho
