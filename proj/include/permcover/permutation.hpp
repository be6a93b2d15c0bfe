#ifndef PERMCOVER_PERMUTATION_HPP
#define PERMCOVER_PERMUTATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace permcover {

// Constructive operations work on permutations of [n] with n in
// [kMinN, kMaxN]; exact counting (counting.hpp) has no such cap.
inline constexpr int kMinN = 2;
inline constexpr int kMaxN = 20;

// An ordered pair (first, second) of distinct 1-based indices.
// The pair is an inversion exactly when first > second.
struct OrderedPair {
    int first;
    int second;

    OrderedPair(int a, int b);

    bool is_inversion() const { return first > second; }

    auto operator<=>(const OrderedPair&) const = default;
};

std::string to_string(const OrderedPair& pair);

// A permutation of [n] in one-line notation. Positions and values are
// 1-based; immutable after construction.
class Permutation {
public:
    explicit Permutation(std::vector<int> image);

    int size() const { return static_cast<int>(image_.size()); }

    // Value at position k.
    int operator()(int k) const;

    // Position of value v, i.e. the inverse applied to v.
    int position_of(int v) const;

    const std::vector<int>& image() const { return image_; }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

// id_n = 12...n.
Permutation identity(int n);

// rev_n = n(n-1)...21.
Permutation reverse(int n);

// The forward circular shift s with s(i) = (i mod n) + 1.
Permutation circular_shift(int n);

// (outer . inner)(k) = outer(inner(k)). With this convention outer acts
// as a relabeling of values: p covers (i,j) iff outer.p covers
// (outer(i), outer(j)).
Permutation compose(const Permutation& outer, const Permutation& inner);

Permutation inverse(const Permutation& p);

// True iff pair.first appears before pair.second in p, i.e.
// p^-1(first) < p^-1(second).
bool covers(const Permutation& p, const OrderedPair& pair);

// Compact digit form for n <= 9 ("2314"), space-separated otherwise.
std::string to_string(const Permutation& p);

}  // namespace permcover

#endif
