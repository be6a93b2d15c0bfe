#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "permcover/permutation.hpp"
#include "permcover/rng.hpp"

using namespace permcover;

TEST_CASE("named permutations have the expected one-line forms") {
    CHECK(identity(4).image() == std::vector<int>{1, 2, 3, 4});
    CHECK(reverse(4).image() == std::vector<int>{4, 3, 2, 1});
    CHECK(circular_shift(4).image() == std::vector<int>{2, 3, 4, 1});
    CHECK(circular_shift(2).image() == std::vector<int>{2, 1});
}

TEST_CASE("construction rejects out-of-range sizes and non-bijections") {
    CHECK_THROWS_AS(identity(1), std::invalid_argument);
    CHECK_THROWS_AS(identity(21), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("application, inverse positions, and full inverse agree") {
    const Permutation p({2, 3, 4, 1});
    CHECK(p(1) == 2);
    CHECK(p(4) == 1);
    CHECK(p.position_of(2) == 1);
    CHECK(p.position_of(1) == 4);
    CHECK(inverse(p).image() == std::vector<int>{4, 1, 2, 3});
    CHECK(compose(inverse(p), p) == identity(4));
    CHECK(compose(p, inverse(p)) == identity(4));
    CHECK_THROWS_AS(p(0), std::out_of_range);
    CHECK_THROWS_AS(p(5), std::out_of_range);
    CHECK_THROWS_AS(p.position_of(5), std::out_of_range);
}

TEST_CASE("composition applies the outer permutation to the inner image") {
    CHECK(compose(reverse(3), Permutation({2, 1, 3})).image() ==
          std::vector<int>{2, 3, 1});
    CHECK_THROWS_AS(compose(reverse(3), reverse(4)), std::invalid_argument);
}

TEST_CASE("relabeling by composition maps covered pairs through the outer "
          "permutation") {
    const Permutation p({3, 1, 2});
    const Permutation tau({2, 3, 1});
    const Permutation relabeled = compose(tau, p);
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            if (a == b) continue;
            CHECK(covers(p, OrderedPair(a, b)) ==
                  covers(relabeled, OrderedPair(tau(a), tau(b))));
        }
    }
}

TEST_CASE("covers holds exactly when the first value precedes the second") {
    CHECK(covers(Permutation({3, 1, 2}), OrderedPair(3, 1)));
    CHECK(covers(Permutation({3, 1, 2}), OrderedPair(3, 2)));
    CHECK(covers(Permutation({3, 1, 2}), OrderedPair(1, 2)));
    CHECK_FALSE(covers(Permutation({3, 1, 2}), OrderedPair(1, 3)));
    CHECK_FALSE(covers(Permutation({3, 1, 2}), OrderedPair(2, 1)));
    CHECK_THROWS_AS(covers(identity(3), OrderedPair(4, 1)),
                    std::out_of_range);
}

TEST_CASE("ordered pairs validate and classify as inversions") {
    CHECK(OrderedPair(3, 1).is_inversion());
    CHECK_FALSE(OrderedPair(1, 3).is_inversion());
    CHECK_THROWS_AS(OrderedPair(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(OrderedPair(0, 1), std::invalid_argument);
    CHECK(OrderedPair(2, 1) < OrderedPair(3, 1));
    CHECK(OrderedPair(3, 1) < OrderedPair(3, 2));
}

TEST_CASE("printing uses packed digits up to 9 and spaces beyond") {
    CHECK(to_string(Permutation({2, 3, 1, 4})) == "2314");
    CHECK(to_string(reverse(12)) == "12 11 10 9 8 7 6 5 4 3 2 1");
    CHECK(to_string(OrderedPair(3, 1)) == "(3,1)");
}

TEST_CASE("seeded generator is reproducible and within bounds") {
    Rng a(42), b(42), c(43);
    std::vector<std::uint64_t> draws_a, draws_b;
    bool differs = false;
    for (int k = 0; k < 200; ++k) {
        const std::uint64_t da = a.below(1000), db = b.below(1000);
        CHECK(da < 1000);
        draws_a.push_back(da);
        draws_b.push_back(db);
        if (c.below(1000) != da) differs = true;
    }
    CHECK(draws_a == draws_b);
    CHECK(differs);

    Rng d(7);
    for (int k = 0; k < 100; ++k) {
        const int v = d.in_range(3, 9);
        CHECK(v >= 3);
        CHECK(v <= 9);
    }

    Rng e(11), f(11);
    std::vector<int> va{1, 2, 3, 4, 5, 6, 7, 8}, vb = va;
    e.shuffle(va);
    f.shuffle(vb);
    CHECK(va == vb);
    std::vector<int> sorted = va;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
}
