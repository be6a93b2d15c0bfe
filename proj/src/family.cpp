#include "permcover/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permcover {

namespace {

std::uint64_t small_factorial(int k) {
    std::uint64_t out = 1;
    for (int v = 2; v <= k; ++v) out *= static_cast<std::uint64_t>(v);
    return out;
}

// [lo, hi] minus one excluded value, ascending.
std::vector<int> range_without(int lo, int hi, int excluded) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(hi - lo));
    for (int v = lo; v <= hi; ++v)
        if (v != excluded) out.push_back(v);
    return out;
}

}  // namespace

FamilyDescriptor::FamilyDescriptor(int n, int i, int c, int j) : n_(n), i_(i), c_(c), j_(j) {
    if (n < kMinN || n > kMaxN)
        throw std::invalid_argument("FamilyDescriptor: n out of range");
    if (!(1 <= i && i <= c && c < j && j <= n))
        throw std::invalid_argument("FamilyDescriptor: need 1 <= i <= c < j <= n, got (i,c,j) = (" +
                                    std::to_string(i) + "," + std::to_string(c) + "," +
                                    std::to_string(j) + ") with n = " + std::to_string(n));
}

std::uint64_t FamilyDescriptor::member_count() const {
    return small_factorial(c_ - 1) * small_factorial(n_ - c_ - 1);
}

bool FamilyDescriptor::contains(const Permutation& p) const {
    if (p.size() != n_) return false;
    if (p(c_) != j_ || p(c_ + 1) != i_) return false;
    for (int h = 1; h < c_; ++h)
        if (p(h) > c_) return false;
    for (int k = c_ + 2; k <= n_; ++k)
        if (p(k) <= c_) return false;
    return true;
}

FamilyMemberCursor::FamilyMemberCursor(const FamilyDescriptor& f) : f_(f) {
    reset();
}

void FamilyMemberCursor::reset() {
    prefix_ = range_without(1, f_.c(), f_.i());
    suffix_ = range_without(f_.c() + 1, f_.n(), f_.j());
}

Permutation FamilyMemberCursor::current() const {
    std::vector<int> image = prefix_;
    image.push_back(f_.j());
    image.push_back(f_.i());
    image.insert(image.end(), suffix_.begin(), suffix_.end());
    return Permutation(std::move(image));
}

bool FamilyMemberCursor::advance() {
    if (std::next_permutation(suffix_.begin(), suffix_.end())) return true;
    return std::next_permutation(prefix_.begin(), prefix_.end());
}

std::vector<Permutation> family_members(const FamilyDescriptor& f) {
    constexpr std::uint64_t kEagerLimit = 1000000;
    if (f.member_count() > kEagerLimit)
        throw std::length_error("family_members: family has " +
                                std::to_string(f.member_count()) +
                                " members; walk it with FamilyMemberCursor instead");
    std::vector<Permutation> out;
    out.reserve(f.member_count());
    FamilyMemberCursor cursor(f);
    do {
        out.push_back(cursor.current());
    } while (cursor.advance());
    return out;
}

Permutation sample_family_member(const FamilyDescriptor& f, Rng& rng) {
    std::vector<int> prefix = range_without(1, f.c(), f.i());
    std::vector<int> suffix = range_without(f.c() + 1, f.n(), f.j());
    rng.shuffle(prefix);
    rng.shuffle(suffix);
    std::vector<int> image = std::move(prefix);
    image.push_back(f.j());
    image.push_back(f.i());
    image.insert(image.end(), suffix.begin(), suffix.end());
    return Permutation(std::move(image));
}

std::vector<FamilyDescriptor> family_collection(int n, int c) {
    if (!(1 <= c && c < n))
        throw std::invalid_argument("family_collection: need 1 <= c < n, got c = " +
                                    std::to_string(c) + " with n = " + std::to_string(n));
    std::vector<FamilyDescriptor> out;
    out.reserve(static_cast<std::size_t>(c) * static_cast<std::size_t>(n - c));
    for (int i = 1; i <= c; ++i)
        for (int j = c + 1; j <= n; ++j) out.emplace_back(n, i, c, j);
    return out;
}

}  // namespace permcover
