#ifndef PERMCOVER_ORACLE_HPP
#define PERMCOVER_ORACLE_HPP

#include <chrono>
#include <cstdint>
#include <vector>

#include "permcover/completeness.hpp"

namespace permcover {

// Result of an independent search for the maximum-cardinality minimal
// complete sets. The search logic here is deliberately self-contained:
// it rebuilds coverage from the covers() primitive alone, so agreement
// with the constructive modules is a real cross-check, not a tautology.
struct OracleReport {
    int n = 0;
    CoverMode mode = CoverMode::inversion;
    bool restricted = false;
    std::size_t max_size_found = 0;
    std::vector<PermSet> witness_sets;
    std::uint64_t search_space_nodes = 0;  // exhaustive mode: subsets tested
    std::uint64_t random_trials = 0;       // restricted mode
    std::uint64_t random_minimal_hits = 0;
    bool random_hits_all_known = true;
    std::chrono::duration<double> elapsed{0};
};

// Completeness tested against a freshly generated pair list.
bool oracle_is_complete(const PermSet& s);

// Minimality tested by looking for a privately covered pair per member.
bool oracle_is_minimal_complete(const PermSet& s);

// Exhaustive mode (restricted = false, 2 <= n <= 4): depth-first search
// over subsets of S_n, pruned to branches where every chosen member still
// covers some pair privately; finds every maximum minimal complete set.
//
// Restricted mode (n = 5, inversion only): re-verifies the full
// constructive witness list with the oracle's own predicates, then fuzzes
// `trials` random subsets of the maximum size, checking that every
// minimal complete hit is already a known witness.
OracleReport oracle_enumerate(int n, CoverMode mode, bool restricted = false,
                              std::uint64_t trials = 1'000'000);

// True iff s is one of the maximum minimal complete sets (2 <= n <= 4).
bool oracle_check_membership(const PermSet& s);

}  // namespace permcover

#endif
