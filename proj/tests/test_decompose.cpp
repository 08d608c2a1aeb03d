#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mps/decompose.hpp"
#include "mps/eating.hpp"
#include "mps/errors.hpp"
#include "mps/market.hpp"
#include "support.hpp"

using namespace mps;

namespace {

void check_lottery(const Market& market, const RandomAllocation& target, const Lottery& lottery) {
  REQUIRE(!lottery.parts.empty());
  Rat total(0);
  for (const LotteryPart& part : lottery.parts) {
    CHECK(part.weight > 0);
    total += part.weight;
    CHECK(is_allowable(market, part.alloc));
  }
  CHECK(total == 1);
  CHECK(lottery.combination(market.num_agents(), market.num_objects()) == target);
}

}  // namespace

TEST_CASE("decompose: three-agent fixture output") {
  const Market market = testsup::three_agent_minimums_market();
  const RandomAllocation mu =
      testsup::matrix({{"2/3", "1/3", "0"}, {"2/3", "1/3", "0"}, {"0", "1/3", "2/3"}});
  const Lottery lottery = decompose(market, mu);
  check_lottery(market, mu, lottery);
  // the fractional-cell + column bound: 7 loose values
  CHECK(lottery.parts.size() <= 8);
}

TEST_CASE("a hand-built three-part combination also reproduces the fixture") {
  // decompositions are not canonical; this one exists independently of what
  // decompose() returns
  const Market market = testsup::three_agent_minimums_market();
  const auto assignment = [](std::initializer_list<int> picks) {
    DeterministicAllocation alloc(3, 3);
    int agent = 0;
    for (int j : picks) alloc.set(agent++, j, 1);
    return alloc;
  };
  Lottery lottery;
  lottery.parts.push_back({rat(1, 3), assignment({0, 0, 1})});
  lottery.parts.push_back({rat(1, 3), assignment({0, 1, 2})});
  lottery.parts.push_back({rat(1, 3), assignment({1, 0, 2})});
  check_lottery(market, testsup::matrix({{"2/3", "1/3", "0"}, {"2/3", "1/3", "0"}, {"0", "1/3", "2/3"}}),
                lottery);
}

TEST_CASE("decompose: integral input returns a single full-weight part") {
  const Market market = testsup::three_agent_minimums_market();
  RandomAllocation integral(3, 3);
  integral.at(0, 0) = 1;
  integral.at(1, 0) = 1;
  integral.at(2, 1) = 1;
  const Lottery lottery = decompose(market, integral);
  REQUIRE(lottery.parts.size() == 1);
  CHECK(lottery.parts[0].weight == 1);
  CHECK(RandomAllocation::from(lottery.parts[0].alloc) == integral);
}

TEST_CASE("decompose: four-agent halves matrix averages two matchings") {
  const Market market = testsup::four_agent_unit_caps_market();
  const RandomAllocation mu = testsup::matrix({{"1/2", "0", "1/2", "0"},
                                               {"1/2", "0", "1/2", "0"},
                                               {"0", "1/2", "0", "1/2"},
                                               {"0", "1/2", "0", "1/2"}});
  check_lottery(market, mu, decompose(market, mu));
}

TEST_CASE("decompose rejects non-implementable input") {
  const Market market = testsup::three_agent_minimums_market();
  RandomAllocation bad(3, 3);
  bad.at(0, 0) = rat(1, 2);  // row sums below the demand
  CHECK_THROWS_AS(decompose(market, bad), ValidationError);
}

TEST_CASE("decompose: random mechanism outputs, both demands") {
  testsup::Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const int objects = 2 + rng.below(3);
    const int demand = 1 + rng.below(objects);
    const Market market =
        testsup::random_feasible_market(rng, 2 + rng.below(3), objects, demand);
    const RandomAllocation mu = (demand == 1 ? mps_unit(market) : mps_general(market)).allocation;
    const Lottery lottery = decompose(market, mu);
    check_lottery(market, mu, lottery);
    const int cells = market.num_agents() * market.num_objects();
    CHECK(static_cast<int>(lottery.parts.size()) <= cells + market.num_objects() + 1);
  }
}

TEST_CASE("splitmix64 matches its reference stream") {
  // reference values of the published 64-bit mixer
  CHECK(splitmix64(0) == 16294208416658607535ULL);
  CHECK(splitmix64(7) == 7191089600892374487ULL);
  CHECK(splitmix64(42) == 13679457532755275413ULL);
}

TEST_CASE("sample: deterministic and single-part lotteries are trivial") {
  const Market market = testsup::three_agent_minimums_market();
  RandomAllocation integral(3, 3);
  integral.at(0, 0) = 1;
  integral.at(1, 0) = 1;
  integral.at(2, 1) = 1;
  const Lottery single = decompose(market, integral);
  for (uint64_t seed : {0ULL, 1ULL, 42ULL, 0xFFFFFFFFFFFFFFFFULL})
    CHECK(sample_index(single, seed) == 0);

  const RandomAllocation mu =
      testsup::matrix({{"2/3", "1/3", "0"}, {"2/3", "1/3", "0"}, {"0", "1/3", "2/3"}});
  const Lottery lottery = decompose(market, mu);
  for (uint64_t seed = 0; seed < 50; ++seed)
    CHECK(sample_index(lottery, seed) == sample_index(lottery, seed));
}

TEST_CASE("sample: frozen draws on an equal-thirds lottery") {
  const Market market = testsup::three_agent_minimums_market();
  const auto assignment = [](std::initializer_list<int> picks) {
    DeterministicAllocation alloc(3, 3);
    int agent = 0;
    for (int j : picks) alloc.set(agent++, j, 1);
    return alloc;
  };
  Lottery lottery;
  lottery.parts.push_back({rat(1, 3), assignment({0, 0, 1})});
  lottery.parts.push_back({rat(1, 3), assignment({0, 1, 2})});
  lottery.parts.push_back({rat(1, 3), assignment({1, 0, 2})});

  CHECK(sample_index(lottery, 0) == 2);
  CHECK(sample_index(lottery, 7) == 1);
  CHECK(sample_index(lottery, 42) == 2);
  CHECK(&sample(lottery, 42) == &lottery.parts[2].alloc);
}

TEST_CASE("sample: empirical frequencies track the weights") {
  const Market market = testsup::three_agent_minimums_market();
  const auto assignment = [](std::initializer_list<int> picks) {
    DeterministicAllocation alloc(3, 3);
    int agent = 0;
    for (int j : picks) alloc.set(agent++, j, 1);
    return alloc;
  };
  Lottery lottery;
  lottery.parts.push_back({rat(1, 3), assignment({0, 0, 1})});
  lottery.parts.push_back({rat(1, 3), assignment({0, 1, 2})});
  lottery.parts.push_back({rat(1, 3), assignment({1, 0, 2})});

  const int draws = 30000;
  std::vector<long> hits(3, 0);
  for (int seed = 0; seed < draws; ++seed) ++hits[sample_index(lottery, seed)];
  for (int part = 0; part < 3; ++part) {
    const Rat gap = rat(hits[part], draws) - rat(1, 3);
    CHECK(abs(gap) <= rat(1, 50));
  }
}
