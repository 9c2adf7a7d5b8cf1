#include <doctest.h>

#include <algorithm>
#include <set>

#include "qle/network.hpp"

using namespace qle;
using namespace qle::network;

TEST_CASE("assign_registers") {
  SUBCASE("two processors, R and S") {
    const std::vector<std::size_t> eligible{0, 1};
    const auto layout = assign_registers({2, 0, 2}, eligible, {Role::R, Role::S});
    const auto procs = layout.processors();
    CHECK(*procs[0].r == 0);
    CHECK(*procs[0].s == 2);
    CHECK(*procs[1].r == 1);
    CHECK(*procs[1].s == 3);
    CHECK_FALSE(procs[0].t.has_value());
    CHECK(layout.num_qubits() == 4);
  }
  SUBCASE("three processors, R and T, all distinct") {
    const std::vector<std::size_t> eligible{0, 1, 2};
    const auto layout = assign_registers({3, 0, 2}, eligible, {Role::R, Role::T});
    std::set<int> seen;
    for (const auto& p : layout.processors()) {
      seen.insert(*p.r);
      seen.insert(*p.t);
    }
    CHECK(seen.size() == 6);
    CHECK(*seen.rbegin() == 5);
    const auto pairs = layout.pairs(Role::R, Role::T);
    CHECK(pairs[1] == qsim::QubitList{1, 4});
  }
  SUBCASE("eligible subset only") {
    const std::vector<std::size_t> eligible{1, 3};
    const auto layout = assign_registers({4, 0, 1}, eligible, {Role::R});
    CHECK(layout.num_processors() == 2);
    CHECK(layout.processors()[0].processor == 1);
    CHECK(layout.processors()[1].processor == 3);
    CHECK(layout.qubits(Role::R) == qsim::QubitList{0, 1});
  }
  SUBCASE("errors") {
    const std::vector<std::size_t> nine{0, 1, 2, 3, 4, 5, 6, 7, 8};
    CHECK_THROWS_AS(assign_registers({9, 0, 3}, nine, {Role::R, Role::S, Role::T}),
                    qsim::CapacityError);
    const std::vector<std::size_t> none;
    CHECK_THROWS_AS(assign_registers({2, 0, 1}, none, {Role::R}), qsim::ContractError);
    const std::vector<std::size_t> two{0, 1};
    CHECK_THROWS_AS(assign_registers({2, 0, 2}, two, {Role::R, Role::R}), qsim::ContractError);
    const auto layout = assign_registers({2, 0, 1}, two, {Role::R});
    CHECK_THROWS_AS(layout.qubits(Role::S), qsim::ContractError);
  }
}

TEST_CASE("NetworkConfig::validate") {
  const NetworkConfig ok{8, 1, 3};
  const NetworkConfig empty{0, 1, 1};
  const NetworkConfig too_many_roles{2, 1, 4};
  const NetworkConfig too_large{25, 1, 1};
  CHECK_NOTHROW(ok.validate());
  CHECK_THROWS_AS(empty.validate(), qsim::ContractError);
  CHECK_THROWS_AS(too_many_roles.validate(), qsim::ContractError);
  CHECK_THROWS_AS(too_large.validate(), qsim::CapacityError);
}

TEST_CASE("broadcast") {
  SUBCASE("delivers the multiset") {
    const std::vector<int> values{1, 0, 1};
    const Multiset m = broadcast(values);
    CHECK(m.sorted() == std::vector<int>{0, 1, 1});
    CHECK(m.size() == 3);
  }
  SUBCASE("all equal") {
    const std::vector<int> values{2, 2, 2, 2};
    const Multiset m = broadcast(values);
    CHECK(m.distinct() == 1);
    CHECK(m.count(2) == 4);
  }
  SUBCASE("largest-value survivors") {
    const std::vector<int> values{2, 3, 3};
    CHECK(count_at_max(broadcast(values)) == 2);
  }
  SUBCASE("anonymity: any reordering of senders gives the same delivery") {
    std::vector<int> values{3, 0, 1, 1, 2, 0, 3};
    const Multiset reference = broadcast(values);
    std::sort(values.begin(), values.end());
    do {
      REQUIRE(broadcast(values) == reference);
    } while (std::next_permutation(values.begin(), values.end()));
  }
  SUBCASE("channel log") {
    BroadcastChannel channel;
    const std::vector<int> a{0, 1};
    const std::vector<int> b{1};
    channel.broadcast(a);
    channel.broadcast(b);
    REQUIRE(channel.log().size() == 2);
    CHECK(channel.log()[1].round_index == 2);
    CHECK(channel.log()[0].payload.size() == 2);
  }
  CHECK_THROWS_AS(Multiset{}.max(), qsim::ContractError);
}
