#ifndef PERMCOVER_FAMILY_HPP
#define PERMCOVER_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "permcover/permutation.hpp"
#include "permcover/rng.hpp"

namespace permcover {

// Describes the set of permutations with values <= c (except i) before
// position c, value j at position c, value i at position c+1, and values
// >= c+1 (except j) after position c+1. Requires 1 <= i <= c < j <= n.
class FamilyDescriptor {
public:
    FamilyDescriptor(int n, int i, int c, int j);

    int n() const { return n_; }
    int i() const { return i_; }
    int c() const { return c_; }
    int j() const { return j_; }

    // (c-1)! (n-c-1)!; fits 64 bits for every supported n.
    std::uint64_t member_count() const;

    bool contains(const Permutation& p) const;

    auto operator<=>(const FamilyDescriptor&) const = default;

private:
    int n_, i_, c_, j_;
};

// Lazily walks the members of one family in lexicographic order with
// O(1) state: a prefix block (a permutation of [c] minus i) and a suffix
// block (a permutation of {c+1..n} minus j), advanced odometer-style.
class FamilyMemberCursor {
public:
    explicit FamilyMemberCursor(const FamilyDescriptor& f);

    Permutation current() const;

    // Steps to the next member; false when wrapping back to the first.
    bool advance();

    void reset();

private:
    FamilyDescriptor f_;
    std::vector<int> prefix_;
    std::vector<int> suffix_;
};

// All members, in lexicographic order. Guarded against huge families.
std::vector<Permutation> family_members(const FamilyDescriptor& f);

// A uniformly random member.
Permutation sample_family_member(const FamilyDescriptor& f, Rng& rng);

// The c(n-c) descriptors {(i,c,j) : i <= c < j} in lexicographic (i,j)
// order. Requires 1 <= c < n.
std::vector<FamilyDescriptor> family_collection(int n, int c);

}  // namespace permcover

#endif
