#include "permcover/oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>

#include "permcover/construction.hpp"
#include "permcover/permutation.hpp"
#include "permcover/rng.hpp"

namespace permcover {

namespace {

constexpr std::uint64_t kFuzzSeed = 0x0c0ffee0d15ea5e5ULL;

// Pair list rebuilt locally from first principles.
std::vector<OrderedPair> oracle_pairs(int n, CoverMode mode) {
    std::vector<OrderedPair> out;
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            if (mode == CoverMode::inversion && a < b) continue;
            out.emplace_back(a, b);
        }
    }
    return out;
}

// Coverage bitmask over the local pair list, bit k = pairs[k].
std::uint64_t pair_mask(const Permutation& p,
                        const std::vector<OrderedPair>& pairs) {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (covers(p, pairs[k])) m |= std::uint64_t{1} << k;
    }
    return m;
}

struct Search {
    const std::vector<std::uint64_t>& masks;
    std::uint64_t required;
    std::size_t best = 0;
    std::vector<std::vector<std::size_t>> winners;
    std::uint64_t nodes = 0;
};

// Extends `chosen` with members at indices >= start. `once`/`twice` track
// pairs covered exactly once / at least twice. A branch survives only
// while every chosen member covers some pair no other member does; that
// property can only be lost as members are added, never regained, so
// failing branches are cut wholesale. When a branch reaches completeness
// it is recorded and not extended: any proper superset of a complete set
// contains it as a complete proper subset and so cannot be minimal.
void extend(Search& st, std::vector<std::size_t>& chosen, std::uint64_t once,
            std::uint64_t twice, std::size_t start) {
    for (std::size_t i = start; i < st.masks.size(); ++i) {
        const std::uint64_t m = st.masks[i];
        const std::uint64_t now_twice = twice | (once & m);
        const std::uint64_t now_once = (once | m) & ~now_twice;
        ++st.nodes;
        chosen.push_back(i);
        bool every_member_private = true;
        for (std::size_t idx : chosen) {
            if ((st.masks[idx] & now_once) == 0) {
                every_member_private = false;
                break;
            }
        }
        if (every_member_private) {
            if ((now_once | now_twice) == st.required) {
                if (chosen.size() > st.best) {
                    st.best = chosen.size();
                    st.winners.clear();
                }
                if (chosen.size() == st.best) st.winners.push_back(chosen);
            } else {
                extend(st, chosen, now_once, now_twice, i + 1);
            }
        }
        chosen.pop_back();
    }
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) image[static_cast<std::size_t>(k - 1)] = k;
    std::vector<Permutation> out;
    do {
        out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

bool masks_minimal_complete(const std::vector<std::uint64_t>& chosen,
                            std::uint64_t required) {
    std::uint64_t once = 0, twice = 0;
    for (std::uint64_t m : chosen) {
        twice |= once & m;
        once = (once | m) & ~twice;
    }
    if ((once | twice) != required) return false;
    for (std::uint64_t m : chosen) {
        if ((m & once) == 0) return false;
    }
    return true;
}

OracleReport run_restricted(std::uint64_t trials) {
    OracleReport report;
    report.n = 5;
    report.mode = CoverMode::inversion;
    report.restricted = true;
    report.random_trials = trials;

    const std::vector<OrderedPair> pairs = oracle_pairs(5, CoverMode::inversion);
    const std::uint64_t required =
        (std::uint64_t{1} << pairs.size()) - 1;

    report.witness_sets = enumerate_Q_star(5);
    std::sort(report.witness_sets.begin(), report.witness_sets.end());
    std::vector<std::vector<std::uint64_t>> witness_masks;
    for (const PermSet& w : report.witness_sets) {
        if (!oracle_is_minimal_complete(w) || w.size() != 6) {
            throw std::logic_error(
                "oracle_enumerate: a constructive witness failed "
                "independent verification");
        }
        std::vector<std::uint64_t> ms;
        for (const Permutation& p : w.members()) {
            ms.push_back(pair_mask(p, pairs));
        }
        std::sort(ms.begin(), ms.end());
        witness_masks.push_back(std::move(ms));
    }
    std::sort(witness_masks.begin(), witness_masks.end());
    report.max_size_found = 6;

    const std::vector<Permutation> universe = all_permutations(5);
    std::vector<std::uint64_t> universe_masks;
    for (const Permutation& p : universe) {
        universe_masks.push_back(pair_mask(p, pairs));
    }

    Rng rng(kFuzzSeed);
    std::vector<std::size_t> deck(universe.size());
    for (std::size_t k = 0; k < deck.size(); ++k) deck[k] = k;
    std::vector<std::size_t> work;
    for (std::uint64_t t = 0; t < trials; ++t) {
        work = deck;
        std::vector<std::uint64_t> chosen;
        for (std::size_t k = 0; k < 6; ++k) {
            const std::size_t r =
                k + static_cast<std::size_t>(rng.below(work.size() - k));
            std::swap(work[k], work[r]);
            chosen.push_back(universe_masks[work[k]]);
        }
        if (!masks_minimal_complete(chosen, required)) continue;
        ++report.random_minimal_hits;
        std::sort(chosen.begin(), chosen.end());
        if (!std::binary_search(witness_masks.begin(), witness_masks.end(),
                                chosen)) {
            report.random_hits_all_known = false;
        }
    }
    return report;
}

}  // namespace

bool oracle_is_complete(const PermSet& s) {
    for (const OrderedPair& pr : oracle_pairs(s.n(), s.mode())) {
        bool hit = false;
        for (const Permutation& p : s.members()) {
            if (covers(p, pr)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

bool oracle_is_minimal_complete(const PermSet& s) {
    if (!oracle_is_complete(s)) return false;
    const std::vector<OrderedPair> pairs = oracle_pairs(s.n(), s.mode());
    for (const Permutation& p : s.members()) {
        bool owns_one = false;
        for (const OrderedPair& pr : pairs) {
            if (!covers(p, pr)) continue;
            bool shared = false;
            for (const Permutation& other : s.members()) {
                if (other == p) continue;
                if (covers(other, pr)) {
                    shared = true;
                    break;
                }
            }
            if (!shared) {
                owns_one = true;
                break;
            }
        }
        if (!owns_one) return false;
    }
    return true;
}

OracleReport oracle_enumerate(int n, CoverMode mode, bool restricted,
                              std::uint64_t trials) {
    const auto started = std::chrono::steady_clock::now();
    if (restricted) {
        if (n != 5 || mode != CoverMode::inversion) {
            throw std::invalid_argument(
                "oracle_enumerate: restricted mode supports only n = 5 in "
                "inversion mode");
        }
        OracleReport report = run_restricted(trials);
        report.elapsed = std::chrono::steady_clock::now() - started;
        return report;
    }
    if (n < kMinN || n > 4) {
        std::ostringstream msg;
        msg << "oracle_enumerate: exhaustive search over subsets of S_" << n
            << " is infeasible; n <= 4 only (restricted mode covers n = 5, "
               "inversion)";
        throw std::length_error(msg.str());
    }

    OracleReport report;
    report.n = n;
    report.mode = mode;
    report.restricted = false;

    const std::vector<OrderedPair> pairs = oracle_pairs(n, mode);
    const std::uint64_t required = (std::uint64_t{1} << pairs.size()) - 1;
    const std::vector<Permutation> universe = all_permutations(n);
    std::vector<std::uint64_t> masks;
    for (const Permutation& p : universe) {
        masks.push_back(pair_mask(p, pairs));
    }

    Search st{masks, required};
    std::vector<std::size_t> chosen;
    extend(st, chosen, 0, 0, 0);

    report.max_size_found = st.best;
    report.search_space_nodes = st.nodes;
    for (const std::vector<std::size_t>& w : st.winners) {
        std::vector<Permutation> members;
        members.reserve(w.size());
        for (std::size_t idx : w) members.push_back(universe[idx]);
        report.witness_sets.emplace_back(n, mode, std::move(members));
    }
    std::sort(report.witness_sets.begin(), report.witness_sets.end());
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

bool oracle_check_membership(const PermSet& s) {
    if (s.n() > 4) {
        throw std::length_error(
            "oracle_check_membership: exhaustive reference list available "
            "for n <= 4 only");
    }
    const OracleReport report = oracle_enumerate(s.n(), s.mode());
    return std::find(report.witness_sets.begin(), report.witness_sets.end(),
                     s) != report.witness_sets.end();
}

}  // namespace permcover
