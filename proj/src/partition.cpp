#include "permcover/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permcover {

BalancedPartition::BalancedPartition(int n, std::vector<int> w) : n_(n), w_(std::move(w)) {
    if (n < kMinN || n > kMaxN)
        throw std::invalid_argument("BalancedPartition: n out of range");
    std::sort(w_.begin(), w_.end());
    if (std::adjacent_find(w_.begin(), w_.end()) != w_.end())
        throw std::invalid_argument("BalancedPartition: repeated index in W");
    for (int v : w_)
        if (v < 1 || v > n_)
            throw std::invalid_argument("BalancedPartition: index " + std::to_string(v) +
                                        " outside [1, " + std::to_string(n_) + "]");
    const int size = static_cast<int>(w_.size());
    if (size != n_ / 2 && size != (n_ + 1) / 2)
        throw std::invalid_argument("BalancedPartition: |W| = " + std::to_string(size) +
                                    " is neither floor nor ceil of n/2");
}

std::vector<int> BalancedPartition::complement() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n_) - w_.size());
    auto it = w_.begin();
    for (int v = 1; v <= n_; ++v) {
        if (it != w_.end() && *it == v)
            ++it;
        else
            out.push_back(v);
    }
    return out;
}

Permutation canonical_tau(const BalancedPartition& part) {
    const std::vector<int> lower = part.complement();  // image of [c]
    std::vector<int> image = lower;
    image.insert(image.end(), part.w().begin(), part.w().end());
    return Permutation(std::move(image));
}

}  // namespace permcover
