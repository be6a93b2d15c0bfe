#include "permcover/construction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "permcover/counting.hpp"
#include "permcover/selection.hpp"

namespace permcover {

namespace {

std::vector<PermSet> small_Q_star(int n) {
    if (n == 2) {
        return {PermSet(2, CoverMode::inversion, {Permutation({2, 1})})};
    }
    // n == 3: the three minimal inversion-complete pairs, canonical order.
    const Permutation p132({1, 3, 2}), p213({2, 1, 3}), p231({2, 3, 1}),
        p312({3, 1, 2});
    return {
        PermSet(3, CoverMode::inversion, {p132, p231}),
        PermSet(3, CoverMode::inversion, {p213, p312}),
        PermSet(3, CoverMode::inversion, {p231, p312}),
    };
}

std::vector<int> complement_of(int n, const std::vector<int>& x) {
    std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
    for (int v : x) in[static_cast<std::size_t>(v)] = true;
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (!in[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return out;
}

void check_subset(int n, const std::vector<int>& x, const char* who) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : x) {
        if (v < 1 || v > n) {
            throw std::invalid_argument(std::string(who) +
                                        ": subset element out of range");
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument(std::string(who) +
                                        ": subset has a repeated element");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

}  // namespace

SubsetCursor::SubsetCursor(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 0 || k > n) {
        throw std::invalid_argument("SubsetCursor: need 0 <= k <= n, n >= 1");
    }
    reset();
}

void SubsetCursor::reset() {
    current_.resize(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) current_[static_cast<std::size_t>(i)] = i + 1;
}

bool SubsetCursor::advance() {
    // Rightmost element that can still move right, dragging the tail along.
    for (int i = k_ - 1; i >= 0; --i) {
        if (current_[static_cast<std::size_t>(i)] < n_ - (k_ - 1 - i)) {
            ++current_[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k_; ++j) {
                current_[static_cast<std::size_t>(j)] =
                    current_[static_cast<std::size_t>(j - 1)] + 1;
            }
            return true;
        }
    }
    reset();
    return false;
}

QStarEnumerator::QStarEnumerator(int n) : n_(n) {
    if (n < kMinN || n > kMaxN) {
        throw std::invalid_argument("QStarEnumerator: n out of range");
    }
    reset();
}

void QStarEnumerator::reset() {
    done_ = false;
    phase_ = 0;
    small_index_ = 0;
    cursors_.clear();
    if (n_ >= 4) start_phase(n_ / 2);
}

void QStarEnumerator::start_phase(int c) {
    cursors_.clear();
    for (const FamilyDescriptor& f : family_collection(n_, c)) {
        cursors_.emplace_back(f);
    }
}

std::optional<PermSet> QStarEnumerator::current() const {
    std::vector<Permutation> members;
    members.reserve(cursors_.size());
    for (const FamilyMemberCursor& cur : cursors_) {
        members.push_back(cur.current());
    }
    return PermSet(n_, CoverMode::inversion, std::move(members));
}

std::optional<PermSet> QStarEnumerator::next() {
    if (done_) return std::nullopt;
    if (n_ <= 3) {
        const std::vector<PermSet> sets = small_Q_star(n_);
        if (small_index_ >= sets.size()) {
            done_ = true;
            return std::nullopt;
        }
        return sets[small_index_++];
    }
    std::optional<PermSet> out = current();
    // Odometer tick: last family fastest; a false advance() means that
    // cursor wrapped to its first member and the carry moves left.
    std::size_t i = cursors_.size();
    while (i > 0) {
        if (cursors_[--i].advance()) return out;
    }
    if (phase_ == 0 && n_ % 2 == 1) {
        phase_ = 1;
        start_phase(n_ / 2 + 1);
    } else {
        done_ = true;
    }
    return out;
}

PStarEnumerator::PStarEnumerator(int n) : n_(n) {
    if (n < kMinN || n > kMaxN) {
        throw std::invalid_argument("PStarEnumerator: n out of range");
    }
    reset();
}

void PStarEnumerator::reset() {
    done_ = false;
    small_index_ = 0;
    small_sets_.clear();
    subsets_.reset();
    q_enum_.reset();
    q_current_.reset();
    if (n_ == 2) {
        small_sets_ = {orbit(identity(2))};
    } else if (n_ == 3) {
        small_sets_ = {orbit(identity(3)), orbit(Permutation({1, 3, 2}))};
    } else if (n_ == 4) {
        // Two classes of size 6: orbits of permutations fixing 4 in place,
        // and relabelings of the lone transversal set at c = 2.
        std::set<PermSet> found;
        std::vector<int> head = {1, 2, 3};
        do {
            std::vector<int> image = head;
            image.push_back(4);
            found.insert(orbit(Permutation(image)));
        } while (std::next_permutation(head.begin(), head.end()));
        const PermSet q4 = enumerate_Q_star(4).front();
        std::vector<int> tau = {1, 2, 3, 4};
        do {
            PermSet relabeled =
                relabel_set(Permutation(tau), PermSet(4, CoverMode::pair,
                                                      q4.members()));
            found.insert(std::move(relabeled));
        } while (std::next_permutation(tau.begin(), tau.end()));
        small_sets_.assign(found.begin(), found.end());
    } else {
        subsets_.emplace(n_, n_ / 2);
        q_enum_.emplace(n_);
        q_current_ = q_enum_->next();
    }
}

std::optional<PermSet> PStarEnumerator::next() {
    if (done_) return std::nullopt;
    if (n_ <= 4) {
        if (small_index_ >= small_sets_.size()) {
            done_ = true;
            return std::nullopt;
        }
        return small_sets_[small_index_++];
    }
    if (!q_current_) {
        done_ = true;
        return std::nullopt;
    }
    PermSet out = phi_inverse(subsets_->current(), *q_current_);
    q_current_ = q_enum_->next();
    if (!q_current_) {
        if (subsets_->advance()) {
            q_enum_->reset();
            q_current_ = q_enum_->next();
        } else {
            done_ = true;
        }
    }
    return out;
}

std::vector<PermSet> enumerate_Q_star(int n) {
    if (n < kMinN || n > kMaxN) {
        throw std::invalid_argument("enumerate_Q_star: n out of range");
    }
    if (n >= 7) {
        std::ostringstream msg;
        msg << "enumerate_Q_star: refusing n = " << n << " ("
            << count_Q_star(n)
            << " sets exceed 1e9); use count_Q_star or stream via "
               "QStarEnumerator";
        throw std::length_error(msg.str());
    }
    std::vector<PermSet> out;
    QStarEnumerator it(n);
    while (std::optional<PermSet> s = it.next()) out.push_back(std::move(*s));
    return out;
}

std::vector<PermSet> enumerate_P_star(int n) {
    if (n < kMinN || n > kMaxN) {
        throw std::invalid_argument("enumerate_P_star: n out of range");
    }
    if (n >= 6) {
        std::ostringstream msg;
        msg << "enumerate_P_star: refusing n = " << n << " ("
            << count_P_star(n)
            << " sets); use count_P_star or stream via PStarEnumerator";
        throw std::length_error(msg.str());
    }
    std::vector<PermSet> out;
    PStarEnumerator it(n);
    while (std::optional<PermSet> s = it.next()) out.push_back(std::move(*s));
    return out;
}

PermSet sample_transversal(int n, int c, Rng& rng) {
    std::vector<Permutation> members;
    for (const FamilyDescriptor& f : family_collection(n, c)) {
        members.push_back(sample_family_member(f, rng));
    }
    return PermSet(n, CoverMode::inversion, std::move(members));
}

PermSet sample_Q_star(int n, std::uint64_t seed) {
    if (n < kMinN || n > kMaxN) {
        throw std::invalid_argument("sample_Q_star: n out of range");
    }
    Rng rng(seed);
    if (n == 2) return small_Q_star(2).front();
    if (n == 3) {
        const std::vector<PermSet> sets = small_Q_star(3);
        return sets[static_cast<std::size_t>(rng.below(sets.size()))];
    }
    int c = n / 2;
    // Odd n: both balanced collections have the same transversal count,
    // so a fair coin keeps the draw uniform over their disjoint union.
    if (n % 2 == 1 && rng.coin()) c = n / 2 + 1;
    return sample_transversal(n, c, rng);
}

PermSet orbit(const Permutation& p) {
    const int n = p.size();
    const Permutation sigma = circular_shift(n);
    std::vector<Permutation> members;
    members.reserve(static_cast<std::size_t>(n));
    Permutation cur = p;
    for (int k = 0; k < n; ++k) {
        members.push_back(cur);
        cur = compose(cur, sigma);
    }
    return PermSet(n, CoverMode::pair, std::move(members));
}

PermSet relabel_set(const Permutation& tau, const PermSet& s) {
    if (tau.size() != s.n()) {
        throw std::invalid_argument("relabel_set: tau size differs from set");
    }
    std::vector<Permutation> members;
    members.reserve(s.size());
    for (const Permutation& m : s.members()) {
        members.push_back(compose(tau, m));
    }
    return PermSet(s.n(), s.mode(), std::move(members));
}

bool is_transversal_of(const PermSet& q, int c) {
    const int n = q.n();
    if (c < 1 || c >= n) {
        throw std::invalid_argument("is_transversal_of: need 1 <= c < n");
    }
    const std::size_t expected =
        static_cast<std::size_t>(c) * static_cast<std::size_t>(n - c);
    if (static_cast<std::size_t>(q.size()) != expected) return false;
    std::set<std::pair<int, int>> picked;
    for (const Permutation& p : q.members()) {
        const int j = p(c);
        const int i = p(c + 1);  // c < n, so position c+1 exists
        if (j <= c || i > c) return false;
        FamilyDescriptor f(n, i, c, j);
        if (!f.contains(p)) return false;
        if (!picked.emplace(i, j).second) return false;
    }
    // c(n-c) distinct pairs out of c(n-c) possible: every family is hit.
    return picked.size() == expected;
}

std::optional<int> maximum_transversal_c(const PermSet& q) {
    const int n = q.n();
    if (n < 4) return std::nullopt;
    if (is_transversal_of(q, n / 2)) return n / 2;
    if (n % 2 == 1 && is_transversal_of(q, n / 2 + 1)) return n / 2 + 1;
    return std::nullopt;
}

std::pair<std::vector<int>, PermSet> phi(const PermSet& p) {
    if (p.mode() != CoverMode::pair) {
        throw std::invalid_argument("phi: set must be pair-mode");
    }
    const int n = p.n();
    if (n < 5) {
        throw std::invalid_argument("phi: defined only for n >= 5");
    }
    const std::size_t expected =
        static_cast<std::size_t>(n) * static_cast<std::size_t>(n) / 4;
    if (static_cast<std::size_t>(p.size()) != expected) {
        std::ostringstream msg;
        msg << "phi: set has " << p.size() << " members, expected "
            << expected;
        throw std::invalid_argument(msg.str());
    }
    if (!is_minimal_complete(p)) {
        throw std::invalid_argument("phi: set is not minimally pair-complete");
    }
    // Each member must own exactly one pair, and the owned pairs must
    // orient a balanced complete bipartite graph.
    std::set<int> firsts, seconds;
    std::vector<std::pair<int, int>> arcs;
    for (const Permutation& m : p.members()) {
        const std::vector<OrderedPair> crit = critical_elements(p, m);
        if (crit.size() != 1) {
            throw std::invalid_argument(
                "phi: a member owns more than one pair; the critical pairs "
                "do not form a balanced bipartite orientation");
        }
        arcs.emplace_back(crit.front().first, crit.front().second);
        firsts.insert(crit.front().first);
        seconds.insert(crit.front().second);
    }
    for (int v : firsts) {
        if (seconds.count(v) != 0) {
            throw std::invalid_argument(
                "phi: critical pairs do not orient a bipartition (a value "
                "appears on both sides)");
        }
    }
    if (firsts.size() + seconds.size() != static_cast<std::size_t>(n) ||
        firsts.size() * seconds.size() != expected) {
        throw std::invalid_argument(
            "phi: critical pairs do not cover a balanced split of the "
            "values");
    }
    const std::vector<int> w(firsts.begin(), firsts.end());
    const BalancedPartition part(n, w);
    const int c = n - static_cast<int>(w.size());
    const Permutation tau_inv = inverse(canonical_tau(part));
    std::vector<Permutation> q_members;
    q_members.reserve(p.size());
    for (const Permutation& m : p.members()) {
        q_members.push_back(compose(tau_inv, m));
    }
    PermSet q(n, CoverMode::inversion, std::move(q_members));
    if (!is_transversal_of(q, c)) {
        throw std::invalid_argument(
            "phi: relabeled set is not a family transversal");
    }
    std::vector<int> x =
        (c == n / 2) ? std::vector<int>(seconds.begin(), seconds.end()) : w;
    return {std::move(x), std::move(q)};
}

PermSet phi_inverse(const std::vector<int>& x, const PermSet& q) {
    if (q.mode() != CoverMode::inversion) {
        throw std::invalid_argument("phi_inverse: q must be inversion-mode");
    }
    const int n = q.n();
    if (n < 5) {
        throw std::invalid_argument("phi_inverse: defined only for n >= 5");
    }
    check_subset(n, x, "phi_inverse");
    if (static_cast<int>(x.size()) != n / 2) {
        std::ostringstream msg;
        msg << "phi_inverse: |x| = " << x.size() << ", expected " << n / 2;
        throw std::invalid_argument(msg.str());
    }
    const std::optional<int> c = maximum_transversal_c(q);
    if (!c) {
        throw std::invalid_argument(
            "phi_inverse: q is not a transversal of a balanced family "
            "collection");
    }
    std::vector<int> sorted_x = x;
    std::sort(sorted_x.begin(), sorted_x.end());
    const std::vector<int> w =
        (*c == n / 2) ? complement_of(n, sorted_x) : sorted_x;
    const Permutation tau = canonical_tau(BalancedPartition(n, w));
    std::vector<Permutation> members;
    members.reserve(q.size());
    for (const Permutation& m : q.members()) {
        members.push_back(compose(tau, m));
    }
    return PermSet(n, CoverMode::pair, std::move(members));
}

}  // namespace permcover
