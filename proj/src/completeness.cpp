#include "permcover/completeness.hpp"

#include <algorithm>
#include <stdexcept>

namespace permcover {

namespace {

std::vector<OrderedPair> pairs_from_mask(int n, const CoverageMask& mask) {
    std::vector<OrderedPair> out;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b && mask.test(static_cast<std::size_t>((a - 1) * n + (b - 1))))
                out.emplace_back(a, b);
    return out;  // index order is (a,b)-lexicographic
}

}  // namespace

std::string to_string(CoverMode mode) {
    return mode == CoverMode::inversion ? "inversion" : "pair";
}

CoverMode mode_from_string(std::string_view text) {
    if (text == "inversion") return CoverMode::inversion;
    if (text == "pair") return CoverMode::pair;
    throw std::invalid_argument("mode must be 'inversion' or 'pair', got '" +
                                std::string(text) + "'");
}

std::vector<OrderedPair> required_pairs(int n, CoverMode mode) {
    return pairs_from_mask(n, required_mask(n, mode));
}

PermSet::PermSet(int n, CoverMode mode) : n_(n), mode_(mode) {
    if (n < kMinN || n > kMaxN)
        throw std::invalid_argument("PermSet: n must be in [" + std::to_string(kMinN) +
                                    ", " + std::to_string(kMaxN) + "]");
}

PermSet::PermSet(int n, CoverMode mode, std::vector<Permutation> members) : PermSet(n, mode) {
    members_ = std::move(members);
    for (const Permutation& p : members_)
        if (p.size() != n_)
            throw std::invalid_argument("PermSet: member size " + std::to_string(p.size()) +
                                        " does not match n = " + std::to_string(n_));
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("PermSet: duplicate member");
}

bool PermSet::contains(const Permutation& p) const {
    return std::binary_search(members_.begin(), members_.end(), p);
}

void PermSet::insert(Permutation p) {
    if (p.size() != n_)
        throw std::invalid_argument("PermSet::insert: member size mismatch");
    auto it = std::lower_bound(members_.begin(), members_.end(), p);
    if (it != members_.end() && *it == p)
        throw std::invalid_argument("PermSet::insert: duplicate member " + to_string(p));
    members_.insert(it, std::move(p));
}

PermSet PermSet::without(const Permutation& p) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), p);
    if (it == members_.end() || *it != p)
        throw std::invalid_argument("PermSet::without: " + to_string(p) + " is not a member");
    std::vector<Permutation> rest(members_.begin(), it);
    rest.insert(rest.end(), it + 1, members_.end());
    PermSet out(n_, mode_);
    out.members_ = std::move(rest);
    return out;
}

CoverageMask coverage_mask(const Permutation& p, CoverMode mode) {
    const int n = p.size();
    CoverageMask mask;
    for (int k = 1; k < n; ++k) {
        const int a = p(k);
        for (int l = k + 1; l <= n; ++l) {
            const int b = p(l);
            if (mode == CoverMode::pair || a > b)
                mask.set(static_cast<std::size_t>((a - 1) * n + (b - 1)));
        }
    }
    return mask;
}

CoverageMask required_mask(int n, CoverMode mode) {
    CoverageMask mask;
    for (int a = 2; a <= n; ++a)
        for (int b = 1; b < a; ++b) {
            mask.set(static_cast<std::size_t>((a - 1) * n + (b - 1)));
            if (mode == CoverMode::pair)
                mask.set(static_cast<std::size_t>((b - 1) * n + (a - 1)));
        }
    return mask;
}

bool is_complete(const PermSet& s) {
    CoverageMask covered;
    for (const Permutation& p : s.members()) covered |= coverage_mask(p, s.mode());
    const CoverageMask required = required_mask(s.n(), s.mode());
    return (required & ~covered).none();
}

std::vector<OrderedPair> uncovered(const PermSet& s) {
    CoverageMask covered;
    for (const Permutation& p : s.members()) covered |= coverage_mask(p, s.mode());
    return pairs_from_mask(s.n(), required_mask(s.n(), s.mode()) & ~covered);
}

std::vector<OrderedPair> critical_elements(const PermSet& s, const Permutation& member) {
    if (!s.contains(member))
        throw std::invalid_argument("critical_elements: " + to_string(member) +
                                    " is not a member of the set");
    CoverageMask others;
    for (const Permutation& p : s.members())
        if (p != member) others |= coverage_mask(p, s.mode());
    const CoverageMask own =
        coverage_mask(member, s.mode()) & required_mask(s.n(), s.mode()) & ~others;
    return pairs_from_mask(s.n(), own);
}

bool is_minimal_complete(const PermSet& s) {
    if (s.empty()) return false;
    std::vector<CoverageMask> masks;
    masks.reserve(s.members().size());
    for (const Permutation& p : s.members()) masks.push_back(coverage_mask(p, s.mode()));

    CoverageMask once, twice;
    for (const CoverageMask& m : masks) {
        twice |= once & m;
        once |= m;
    }
    const CoverageMask required = required_mask(s.n(), s.mode());
    if ((required & ~once).any()) return false;

    // A member owns a critical element iff it covers some required pair
    // that no other member covers, i.e. a pair covered exactly once.
    const CoverageMask exactly_once = once & ~twice & required;
    for (const CoverageMask& m : masks)
        if ((m & exactly_once).none()) return false;
    return true;
}

}  // namespace permcover
