#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "mps/allocation.hpp"
#include "mps/errors.hpp"
#include "mps/fosd.hpp"
#include "mps/json_io.hpp"
#include "mps/market.hpp"
#include "mps/rational.hpp"
#include "support.hpp"

using namespace mps;

TEST_CASE("rational parse/format round-trip") {
  testsup::Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Rat q = rat(static_cast<long>(rng.below(2001)) - 1000, 1 + rng.below(400));
    CHECK(parse_rat(format_rat(q)) == q);
  }
  CHECK(format_rat(rat(0)) == "0");
  CHECK(format_rat(rat(1)) == "1");
  CHECK(format_rat(rat(4, 6)) == "2/3");
  CHECK(format_rat(rat(-4, 6)) == "-2/3");
}

TEST_CASE("rational parsing accepts p and p/q, rejects junk") {
  CHECK(parse_rat("5/12") == rat(5, 12));
  CHECK(parse_rat("10/24") == rat(5, 12));
  CHECK(parse_rat("-3/9") == rat(-1, 3));
  CHECK(parse_rat("7") == rat(7));
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("a/b"), ParseError);
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
}

TEST_CASE("rational floor/ceil helpers") {
  CHECK(rat_floor(rat(4, 3)) == 1);
  CHECK(rat_ceil(rat(4, 3)) == 2);
  CHECK(rat_floor(rat(-4, 3)) == -2);
  CHECK(rat_ceil(rat(-4, 3)) == -1);
  CHECK(rat_floor(rat(2)) == 2);
  CHECK(rat_ceil(rat(2)) == 2);
  CHECK(is_integral(rat(2)));
  CHECK(!is_integral(rat(1, 2)));
}

TEST_CASE("market parsing: three-agent fixture") {
  const Market market = parse_market(testsup::three_agent_minimums_json());
  CHECK(market.num_agents() == 3);
  CHECK(market.num_objects() == 3);
  CHECK(market.demand == 1);
  CHECK(market.objects[0].min == 1);
  CHECK(market.objects[0].cap == 2);
  CHECK(market.objects[2].min == 0);
  CHECK(market.prefs[2] == std::vector<int>{2, 0, 1});
  CHECK(market.minimum_objects() == std::vector<int>{0, 1});
  CHECK(market.warnings.empty());
}

TEST_CASE("market parsing: single agent, single object") {
  const Market market = parse_market(
      R"({"d":1,"objects":[{"id":"x","min":0,"cap":1}],"agents":[{"id":"a","prefs":["x"]}]})");
  CHECK(market.num_agents() == 1);
  CHECK(market.num_objects() == 1);
}

TEST_CASE("market parsing: validation failures") {
  CHECK_THROWS_AS(parse_market("not json"), ParseError);
  // pref list missing o3
  CHECK_THROWS_WITH_AS(
      parse_market(R"({"d":1,
        "objects":[{"id":"o1","min":0,"cap":1},{"id":"o2","min":0,"cap":1},{"id":"o3","min":0,"cap":1}],
        "agents":[{"id":"a","prefs":["o1","o2"]},{"id":"b","prefs":["o1","o2","o3"]},
                  {"id":"c","prefs":["o1","o2","o3"]}]})"),
      "agent 'a': incomplete preference list", ValidationError);
  // duplicate entry
  CHECK_THROWS_AS(parse_market(R"({"d":1,
        "objects":[{"id":"o1","min":0,"cap":1},{"id":"o2","min":0,"cap":2}],
        "agents":[{"id":"a","prefs":["o1","o1"]},{"id":"b","prefs":["o1","o2"]}]})"),
                  ValidationError);
  // min exceeds cap
  CHECK_THROWS_AS(parse_market(R"({"d":1,
        "objects":[{"id":"o1","min":2,"cap":1}],
        "agents":[{"id":"a","prefs":["o1"]}]})"),
                  ValidationError);
  // demand out of range
  CHECK_THROWS_AS(parse_market(R"({"d":3,
        "objects":[{"id":"o1","min":0,"cap":1},{"id":"o2","min":0,"cap":1}],
        "agents":[{"id":"a","prefs":["o1","o2"]}]})"),
                  ValidationError);
  // unknown object in prefs
  CHECK_THROWS_AS(parse_market(R"({"d":1,
        "objects":[{"id":"o1","min":0,"cap":1}],
        "agents":[{"id":"a","prefs":["nope"]}]})"),
                  ValidationError);
}

TEST_CASE("market parsing: capacities clamp to the agent count") {
  const Market market = parse_market(R"({"d":1,
      "objects":[{"id":"o1","min":0,"cap":9},{"id":"o2","min":0,"cap":2}],
      "agents":[{"id":"a","prefs":["o1","o2"]},{"id":"b","prefs":["o2","o1"]}]})");
  CHECK(market.objects[0].cap == 2);
  CHECK(market.objects[1].cap == 2);
  REQUIRE(market.warnings.size() == 1);
  CHECK(market.warnings[0].find("clamped") != std::string::npos);
}

TEST_CASE("feasibility: fixture markets") {
  CHECK(validate_feasibility(testsup::three_agent_minimums_market()).feasible);

  // two agents cannot cover three unit minimums
  const Market starved = testsup::make_market(
      1, {{"x", 1, 1}, {"y", 1, 1}, {"z", 1, 1}}, {{0, 1, 2}, {0, 1, 2}});
  const FeasibilityReport report = validate_feasibility(starved);
  CHECK(!report.feasible);
  CHECK(!report.min_sum_ok);

  // demand 2: both agents can take {a,c} style pairs covering c's minimum
  const Market general = testsup::make_market(
      2, {{"a", 0, 2}, {"b", 0, 2}, {"c", 1, 2}}, {{0, 1, 2}, {0, 1, 2}});
  CHECK(validate_feasibility(general).feasible);
}

TEST_CASE("feasibility agrees with brute-force enumeration") {
  // All quota profiles on small markets; allowability ignores preferences.
  for (int n = 1; n <= 4; ++n) {
    for (int o = 1; o <= 4; ++o) {
      std::vector<std::vector<int>> prefs;
      for (int i = 0; i < n; ++i) {
        std::vector<int> order(o);
        for (int j = 0; j < o; ++j) order[j] = j;
        prefs.push_back(order);
      }
      std::vector<std::pair<int, int>> quota_choices;  // (min, cap)
      for (int cap = 1; cap <= n; ++cap)
        for (int min = 0; min <= cap; ++min) quota_choices.push_back({min, cap});

      std::vector<int> pick(o, 0);
      while (true) {
        std::vector<mps::ObjectSpec> objects;
        for (int j = 0; j < o; ++j)
          objects.push_back({"o" + std::to_string(j), quota_choices[pick[j]].first,
                             quota_choices[pick[j]].second});
        for (int d = 1; d <= o; ++d) {
          const Market market = testsup::make_market(d, objects, prefs);
          const bool exists = !mps::enumerate_allowable(market, {4, 4}).empty();
          CHECK(validate_feasibility(market).feasible == exists);
        }
        int j = 0;
        while (j < o && ++pick[j] == static_cast<int>(quota_choices.size())) pick[j++] = 0;
        if (j == o) break;
      }
    }
  }
}

TEST_CASE("fosd: known comparisons") {
  const std::vector<int> order = {0, 1, 2, 3};
  const std::vector<Rat> mine = {rat(1, 2), rat(0), rat(1, 2), rat(0)};
  const std::vector<Rat> base = {rat(5, 12), rat(1, 12), rat(5, 12), rat(1, 12)};
  CHECK(fosd_compare(order, mine, base) == FosdResult::StrictlyDominates);
  CHECK(fosd_compare(order, base, mine) == FosdResult::StrictlyDominated);
  CHECK(fosd_compare(order, mine, mine) == FosdResult::Equal);

  const std::vector<int> second_first = {1, 0};
  CHECK(fosd_compare(second_first, {rat(1), rat(0)}, {rat(0), rat(1)}) ==
        FosdResult::StrictlyDominated);

  CHECK_THROWS_AS(fosd_compare(order, mine, {rat(1)}), ValidationError);
}

TEST_CASE("fosd is a partial order on sampled rows") {
  testsup::Rng rng(23);
  const auto random_row = [&rng]() {
    std::vector<Rat> row(4);
    Rat total(0);
    for (auto& v : row) {
      v = rat(rng.below(5), 6);
      total += v;
    }
    if (total > 1)
      for (auto& v : row) v /= total;
    return row;
  };
  const std::vector<int> order = {2, 0, 3, 1};
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_row(), b = random_row(), c = random_row();
    CHECK(fosd_compare(order, a, a) == FosdResult::Equal);

    const FosdResult ab = fosd_compare(order, a, b);
    const FosdResult ba = fosd_compare(order, b, a);
    if (ab == FosdResult::StrictlyDominates) CHECK(ba == FosdResult::StrictlyDominated);
    if (ab == FosdResult::Equal) CHECK(ba == FosdResult::Equal);
    if (ab == FosdResult::Incomparable) CHECK(ba == FosdResult::Incomparable);

    // transitivity of weak dominance
    const auto weakly = [](FosdResult r) {
      return r == FosdResult::Equal || r == FosdResult::StrictlyDominates;
    };
    if (weakly(ab) && weakly(fosd_compare(order, b, c)))
      CHECK(weakly(fosd_compare(order, a, c)));
  }
}

TEST_CASE("allocation json round-trip") {
  const Market market = testsup::three_agent_minimums_market();
  const RandomAllocation mu =
      testsup::matrix({{"2/3", "1/3", "0"}, {"2/3", "1/3", "0"}, {"0", "1/3", "2/3"}});
  const Json doc = allocation_to_json(market, mu);
  CHECK(allocation_from_json(market, doc) == mu);
  CHECK(doc["allocation"][0][0] == "2/3");
}

TEST_CASE("market json round-trip") {
  const Market market = testsup::three_agent_minimums_market();
  const Market back = parse_market(market_to_json(market).dump());
  CHECK(back.agent_ids == market.agent_ids);
  CHECK(back.prefs == market.prefs);
  CHECK(back.demand == market.demand);
}
