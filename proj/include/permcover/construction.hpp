#ifndef PERMCOVER_CONSTRUCTION_HPP
#define PERMCOVER_CONSTRUCTION_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "permcover/completeness.hpp"
#include "permcover/family.hpp"
#include "permcover/partition.hpp"
#include "permcover/permutation.hpp"
#include "permcover/rng.hpp"

namespace permcover {

// Walks the subsets of [n] of a fixed size in lexicographic order.
class SubsetCursor {
public:
    SubsetCursor(int n, int k);

    const std::vector<int>& current() const { return current_; }

    // Steps to the next subset; false when wrapping back to the first.
    bool advance();

    void reset();

private:
    int n_, k_;
    std::vector<int> current_;
};

// Streams every maximum-cardinality minimal inversion-complete subset of
// S_n, without duplicates: for n >= 4 all transversals of the family
// collection at c = floor(n/2), then (odd n only) at c = ceil(n/2); the
// n = 2 and n = 3 sets are stored. Transversals are walked odometer-style
// over lazy family cursors (families ordered by (i,j), the last ticking
// fastest), so the walk is O(1) memory per step and restartable.
class QStarEnumerator {
public:
    explicit QStarEnumerator(int n);

    std::optional<PermSet> next();

    void reset();

private:
    std::optional<PermSet> current() const;
    void start_phase(int c);

    int n_;
    bool done_ = false;
    int phase_ = 0;  // 0: c = floor(n/2); 1: c = ceil(n/2) (odd n)
    std::size_t small_index_ = 0;
    std::vector<FamilyMemberCursor> cursors_;
};

// Streams every maximum-cardinality minimal pair-complete subset of S_n.
// For n >= 5 these are the images phi_inverse(X, Q) over the Cartesian
// product of the balanced subsets X (outer, lexicographic) and Q*_n
// (inner); smaller n use the known orbit/relabeling classes.
class PStarEnumerator {
public:
    explicit PStarEnumerator(int n);

    std::optional<PermSet> next();

    void reset();

private:
    int n_;
    bool done_ = false;
    std::size_t small_index_ = 0;
    std::vector<PermSet> small_sets_;  // n <= 4
    std::optional<SubsetCursor> subsets_;
    std::optional<QStarEnumerator> q_enum_;
    std::optional<PermSet> q_current_;
};

// Materializes Q*_n. Refused for n >= 7, where the count exceeds 1e9;
// counting stays available at any n and QStarEnumerator still streams.
std::vector<PermSet> enumerate_Q_star(int n);

// Materializes P*_n. Refused for n >= 6; PStarEnumerator still streams.
std::vector<PermSet> enumerate_P_star(int n);

// A uniformly random transversal of the family collection at c.
PermSet sample_transversal(int n, int c, Rng& rng);

// A uniformly random element of Q*_n, deterministic per seed. For odd n
// the two balanced family collections have equally many transversals, so
// a fair coin picks the side.
PermSet sample_Q_star(int n, std::uint64_t seed);

// The n circular shifts {p, p.s, p.s^2, ...} as a pair-mode set; always
// minimally pair-complete of size n.
PermSet orbit(const Permutation& p);

// Composes tau with every member; preserves (minimal) pair-completeness.
PermSet relabel_set(const Permutation& tau, const PermSet& s);

// True iff q picks exactly one member from each family at this c.
bool is_transversal_of(const PermSet& q, int c);

// The balanced c for which q is a transversal, if any.
std::optional<int> maximum_transversal_c(const PermSet& q);

// The forward bijection: maps a maximum-cardinality minimally
// pair-complete set (n >= 5) to its balanced subset X of size floor(n/2)
// and the inversion-mode set Q obtained by undoing the canonical
// relabeling of the critical-pair bipartition.
std::pair<std::vector<int>, PermSet> phi(const PermSet& p);

// The inverse direction: |x| = floor(n/2), q in Q*_n; returns the unique
// maximum minimally pair-complete set mapping back to (x, q).
PermSet phi_inverse(const std::vector<int>& x, const PermSet& q);

}  // namespace permcover

#endif
