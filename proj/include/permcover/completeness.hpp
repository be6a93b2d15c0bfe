#ifndef PERMCOVER_COMPLETENESS_HPP
#define PERMCOVER_COMPLETENESS_HPP

#include <bitset>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "permcover/permutation.hpp"

namespace permcover {

// Which pairs a set must cover: every inversion (j,i) with j > i, or
// every ordered pair of distinct indices.
enum class CoverMode { inversion, pair };

std::string to_string(CoverMode mode);
CoverMode mode_from_string(std::string_view text);

// The required pairs of a mode, sorted.
std::vector<OrderedPair> required_pairs(int n, CoverMode mode);

// A duplicate-free set of permutations of a common n, kept in canonical
// lexicographic order, together with its completeness mode. Equality is
// sequence equality of the sorted members.
class PermSet {
public:
    PermSet(int n, CoverMode mode);
    PermSet(int n, CoverMode mode, std::vector<Permutation> members);

    int n() const { return n_; }
    CoverMode mode() const { return mode_; }
    const std::vector<Permutation>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }

    bool contains(const Permutation& p) const;

    // Keeps canonical order; rejects duplicates and size mismatches.
    void insert(Permutation p);

    // Copy with one member removed; the member must be present.
    PermSet without(const Permutation& p) const;

    auto operator<=>(const PermSet&) const = default;

private:
    int n_;
    CoverMode mode_;
    std::vector<Permutation> members_;
};

// One bit per ordered pair (a,b), indexed (a-1)*n + (b-1).
using CoverageMask = std::bitset<kMaxN * kMaxN>;

CoverageMask coverage_mask(const Permutation& p, CoverMode mode);
CoverageMask required_mask(int n, CoverMode mode);

// True iff every required pair is covered by at least one member.
bool is_complete(const PermSet& s);

// The required pairs covered by no member, sorted; empty iff complete.
std::vector<OrderedPair> uncovered(const PermSet& s);

// The required pairs covered by `member` and by no other member of s.
// member must be in s.
std::vector<OrderedPair> critical_elements(const PermSet& s, const Permutation& member);

// Complete, and every member owns at least one critical element. By
// coverage monotonicity this is equivalent to no proper subset being
// complete, without the exponential subset scan.
bool is_minimal_complete(const PermSet& s);

}  // namespace permcover

#endif
