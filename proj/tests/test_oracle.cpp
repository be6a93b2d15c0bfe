#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "permcover/construction.hpp"
#include "permcover/counting.hpp"
#include "permcover/oracle.hpp"

using namespace permcover;

namespace {

PermSet make_set(int n, CoverMode mode, std::vector<std::vector<int>> images) {
    std::vector<Permutation> members;
    for (std::vector<int>& image : images) members.emplace_back(std::move(image));
    return PermSet(n, mode, std::move(members));
}

}  // namespace

TEST_CASE("the oracle's own predicates agree with known classifications") {
    CHECK(oracle_is_complete(make_set(3, CoverMode::inversion, {{3, 2, 1}})));
    CHECK_FALSE(
        oracle_is_complete(make_set(3, CoverMode::inversion, {{2, 1, 3}})));
    CHECK(oracle_is_minimal_complete(
        make_set(3, CoverMode::inversion, {{2, 1, 3}, {3, 1, 2}})));
    CHECK_FALSE(oracle_is_minimal_complete(
        make_set(3, CoverMode::inversion, {{3, 2, 1}, {2, 1, 3}})));
    CHECK(oracle_is_minimal_complete(orbit(identity(5))));
}

TEST_CASE("exhaustive search finds every largest minimal set at size three") {
    const OracleReport r = oracle_enumerate(3, CoverMode::inversion);
    CHECK(r.n == 3);
    CHECK(r.mode == CoverMode::inversion);
    CHECK_FALSE(r.restricted);
    CHECK(r.max_size_found == 2);
    REQUIRE(r.witness_sets.size() == 3);
    CHECK(std::is_sorted(r.witness_sets.begin(), r.witness_sets.end()));
    CHECK(r.witness_sets[0] ==
          make_set(3, CoverMode::inversion, {{1, 3, 2}, {2, 3, 1}}));
    CHECK(r.witness_sets[1] ==
          make_set(3, CoverMode::inversion, {{2, 1, 3}, {3, 1, 2}}));
    CHECK(r.witness_sets[2] ==
          make_set(3, CoverMode::inversion, {{2, 3, 1}, {3, 1, 2}}));
    CHECK(r.search_space_nodes > 0);
}

TEST_CASE("exhaustive search certifies the lone largest set at size four") {
    const OracleReport r = oracle_enumerate(4, CoverMode::inversion);
    CHECK(r.max_size_found == 4);
    REQUIRE(r.witness_sets.size() == 1);
    CHECK(r.witness_sets.front() == enumerate_Q_star(4).front());
}

TEST_CASE("exhaustive pair-mode searches match the constructive catalogs") {
    const OracleReport r2 = oracle_enumerate(2, CoverMode::pair);
    CHECK(r2.max_size_found == 2);
    CHECK(r2.witness_sets.size() == 1);

    const OracleReport r3 = oracle_enumerate(3, CoverMode::pair);
    CHECK(r3.max_size_found == 3);
    REQUIRE(r3.witness_sets.size() == 2);
    CHECK(r3.witness_sets[0] == orbit(identity(3)));
    CHECK(r3.witness_sets[1] == orbit(Permutation({1, 3, 2})));
}

TEST_CASE("oracle witness counts equal the closed-form counts") {
    for (int n = 2; n <= 4; ++n) {
        const OracleReport inv = oracle_enumerate(n, CoverMode::inversion);
        CHECK(ExactCount(inv.witness_sets.size()) == count_Q_star(n));
        const OracleReport pr = oracle_enumerate(n, CoverMode::pair);
        CHECK(ExactCount(pr.witness_sets.size()) == count_P_star(n));
    }
}

TEST_CASE("membership checks accept catalog sets and reject small ones") {
    CHECK(oracle_check_membership(enumerate_Q_star(4).front()));
    CHECK(oracle_check_membership(orbit(identity(4))));
    CHECK_FALSE(oracle_check_membership(
        make_set(3, CoverMode::inversion, {{3, 2, 1}})));
    CHECK_THROWS_AS(oracle_check_membership(orbit(identity(5))),
                    std::length_error);
}

TEST_CASE("exhaustion is refused beyond size four") {
    CHECK_THROWS_AS(oracle_enumerate(5, CoverMode::inversion),
                    std::length_error);
    CHECK_THROWS_AS(oracle_enumerate(5, CoverMode::pair), std::length_error);
}

TEST_CASE("restricted mode verifies the catalog and fuzzes around it") {
    const OracleReport r =
        oracle_enumerate(5, CoverMode::inversion, true, 20000);
    CHECK(r.restricted);
    CHECK(r.max_size_found == 6);
    CHECK(r.witness_sets.size() == 128);
    CHECK(std::is_sorted(r.witness_sets.begin(), r.witness_sets.end()));
    CHECK(r.random_trials == 20000);
    CHECK(r.random_hits_all_known);

    CHECK_THROWS_AS(oracle_enumerate(4, CoverMode::inversion, true),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle_enumerate(5, CoverMode::pair, true),
                    std::invalid_argument);
}
