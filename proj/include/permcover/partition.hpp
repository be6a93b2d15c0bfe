#ifndef PERMCOVER_PARTITION_HPP
#define PERMCOVER_PARTITION_HPP

#include <vector>

#include "permcover/permutation.hpp"

namespace permcover {

// An ordered balanced partition (W, [n]\W) of [n]: |W| is floor(n/2) or
// ceil(n/2). W is stored sorted; the complement is derived.
class BalancedPartition {
public:
    BalancedPartition(int n, std::vector<int> w);

    int n() const { return n_; }
    const std::vector<int>& w() const { return w_; }
    std::vector<int> complement() const;

private:
    int n_;
    std::vector<int> w_;
};

// The unique permutation that monotonically maps [c] onto the complement
// of W and {c+1,...,n} onto W, where c is the complement's size.
Permutation canonical_tau(const BalancedPartition& part);

}  // namespace permcover

#endif
