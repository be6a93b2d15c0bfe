#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "permcover/family.hpp"
#include "permcover/rng.hpp"

using namespace permcover;

TEST_CASE("descriptors validate their parameters") {
    CHECK_NOTHROW(FamilyDescriptor(4, 1, 2, 3));
    CHECK_THROWS_AS(FamilyDescriptor(4, 3, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(FamilyDescriptor(4, 1, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(FamilyDescriptor(4, 0, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(FamilyDescriptor(4, 1, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(FamilyDescriptor(1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("a block family fixes the pivot columns and splits the rest") {
    const FamilyDescriptor f(4, 1, 2, 3);
    CHECK(f.member_count() == 1);
    const std::vector<Permutation> members = family_members(f);
    REQUIRE(members.size() == 1);
    CHECK(members.front() == Permutation({2, 3, 1, 4}));
    CHECK(f.contains(members.front()));
    CHECK_FALSE(f.contains(Permutation({3, 2, 1, 4})));

    const FamilyDescriptor g(3, 1, 1, 2);
    const std::vector<Permutation> gm = family_members(g);
    REQUIRE(gm.size() == 1);
    CHECK(gm.front() == Permutation({2, 1, 3}));

    CHECK(FamilyDescriptor(8, 2, 4, 7).member_count() == 36);
}

TEST_CASE("family membership requires both blocks to stay in range") {
    const FamilyDescriptor f(6, 2, 3, 5);
    // prefix below the split, then j, i, then the rest above the split
    CHECK(f.contains(Permutation({1, 3, 5, 2, 4, 6})));
    CHECK(f.contains(Permutation({3, 1, 5, 2, 6, 4})));
    CHECK_FALSE(f.contains(Permutation({1, 4, 5, 2, 3, 6})));  // 4 too early
    CHECK_FALSE(f.contains(Permutation({1, 3, 2, 5, 4, 6})));  // pivots swapped
    CHECK_FALSE(f.contains(Permutation({1, 3, 5, 2, 6, 4, 7})));  // wrong n
}

TEST_CASE("the member cursor walks every member exactly once") {
    const FamilyDescriptor f(8, 2, 4, 7);
    FamilyMemberCursor cursor(f);
    std::set<Permutation> seen;
    do {
        const Permutation p = cursor.current();
        CHECK(f.contains(p));
        CHECK(seen.insert(p).second);
    } while (cursor.advance());
    CHECK(seen.size() == f.member_count());

    cursor.reset();
    CHECK(seen.count(cursor.current()) == 1);
}

TEST_CASE("eager listing refuses oversized families") {
    // 10!·8! members is far beyond the eager cap
    CHECK_THROWS_AS(family_members(FamilyDescriptor(20, 5, 11, 15)),
                    std::length_error);
}

TEST_CASE("sampled members always lie in their family") {
    Rng rng(99);
    const FamilyDescriptor f(9, 3, 4, 8);
    for (int t = 0; t < 200; ++t) {
        CHECK(f.contains(sample_family_member(f, rng)));
    }
    Rng a(5), b(5);
    CHECK(sample_family_member(f, a) == sample_family_member(f, b));
}

TEST_CASE("a family collection spans every pivot choice at the split") {
    const std::vector<FamilyDescriptor> fams = family_collection(5, 2);
    CHECK(fams.size() == 6);  // i in {1,2}, j in {3,4,5}
    std::set<std::pair<int, int>> pivots;
    for (const FamilyDescriptor& f : fams) {
        CHECK(f.n() == 5);
        CHECK(f.c() == 2);
        pivots.emplace(f.i(), f.j());
    }
    CHECK(pivots.size() == 6);
    CHECK_THROWS_AS(family_collection(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(family_collection(5, 5), std::invalid_argument);
}
