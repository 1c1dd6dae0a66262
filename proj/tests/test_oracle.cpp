#include "chaindeck/oracle.hpp"

#include <stdexcept>

#include "chaindeck/verifier.hpp"
#include "doctest.h"

using namespace chaindeck;

TEST_CASE("status names") {
  CHECK(search_status_name(SearchStatus::Found) == "Found");
  CHECK(search_status_name(SearchStatus::Exhausted) == "Exhausted");
  CHECK(search_status_name(SearchStatus::BudgetExceeded) == "BudgetExceeded");
}

TEST_CASE("argument checking") {
  CHECK_THROWS_AS(search(5, parse_profile("0,6"), true, kUnlimitedBudget), std::invalid_argument);
  CHECK_THROWS_AS(search(4, parse_profile("4,4"), true, 0), std::invalid_argument);
  CHECK_THROWS_AS(search(4, parse_profile("4,4"), true, -3), std::invalid_argument);
  CHECK_THROWS_AS(search(4, parse_profile("1,1"), false, kUnlimitedBudget), std::domain_error);
}

TEST_CASE("balanced witness on four vertices") {
  auto out = search(4, parse_profile("4,4"), true, kUnlimitedBudget);
  REQUIRE(out.status == SearchStatus::Found);
  REQUIRE(out.witness.has_value());
  auto r = verify(*out.witness);
  CHECK(r.ok());
  CHECK(r.k == 5);
  CHECK(r.profile->counts() == std::vector<std::int64_t>{4, 4});
  CHECK(out.nodes_explored > 0);
}

TEST_CASE("non-integral k fails at the root when balance is required") {
  for (const char* p : {"0,6", "2,5", "6,3", "8,2", "10,1"}) {
    auto out = search(4, parse_profile(p), true, kUnlimitedBudget);
    CHECK(out.status == SearchStatus::Exhausted);
    CHECK(out.nodes_explored == 0);
    CHECK_FALSE(out.witness.has_value());
  }
}

TEST_CASE("the same profiles admit unbalanced partitions") {
  auto out = search(4, parse_profile("0,6"), false, kUnlimitedBudget);
  REQUIRE(out.status == SearchStatus::Found);
  auto r = verify(*out.witness);
  CHECK(r.is_partition);
  CHECK(r.profile->counts() == std::vector<std::int64_t>{0, 6});
}

TEST_CASE("pruned and unpruned searches agree on four vertices") {
  for (const char* p : {"0,6", "2,5", "4,4", "6,3", "8,2", "10,1", "12,0"}) {
    for (bool balanced : {true, false}) {
      auto pruned = search(4, parse_profile(p), balanced, kUnlimitedBudget, true);
      auto bare = search(4, parse_profile(p), balanced, kUnlimitedBudget, false);
      CAPTURE(p);
      CAPTURE(balanced);
      CHECK(pruned.status == bare.status);
      CHECK(pruned.witness == bare.witness);
      CHECK(pruned.nodes_explored <= bare.nodes_explored);
    }
  }
}

TEST_CASE("five-vertex balanced profiles are all realizable") {
  for (const char* p : {"0,10,0", "3,4,3", "12,1,2", "20,0,0"}) {
    auto out = search(5, parse_profile(p), true, kUnlimitedBudget);
    REQUIRE(out.status == SearchStatus::Found);
    auto r = verify(*out.witness);
    CHECK(r.ok());
    CHECK(r.profile == parse_profile(p));
  }
}

TEST_CASE("node budget cuts the search off") {
  auto out = search(5, parse_profile("0,10,0"), true, 3);
  CHECK(out.status == SearchStatus::BudgetExceeded);
  CHECK(out.nodes_explored <= 3);
  CHECK_FALSE(out.witness.has_value());
  CHECK(out.budget == 3);
}

TEST_CASE("searches are deterministic") {
  auto a = search(4, parse_profile("4,4"), true, kUnlimitedBudget);
  auto b = search(4, parse_profile("4,4"), true, kUnlimitedBudget);
  CHECK(a.witness == b.witness);
  CHECK(a.nodes_explored == b.nodes_explored);
}
