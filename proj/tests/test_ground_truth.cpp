#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "hydfit/athlete.hpp"
#include "hydfit/recovery.hpp"

using namespace hydfit;

TEST_SUITE("ground_truth") {

TEST_CASE("power_for_tte follows the critical power hyperbola") {
  const AthleteParams a{200.0, 12000.0};
  CHECK(power_for_tte(a, 240.0) == doctest::Approx(250.0));
  CHECK(power_for_tte(hydtest::example_athlete(), 1200.0) == doctest::Approx(263.1667).epsilon(1e-4));
  CHECK(power_for_tte(a, 1e12) == doctest::Approx(200.0));
  CHECK(power_for_tte(a, 1e12) > 200.0);  // approaches CP from above
  CHECK_THROWS_AS(power_for_tte(a, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(power_for_tte(a, -5.0), std::invalid_argument);
}

TEST_CASE("hyperbolic consistency: (P - CP) * t == W'") {
  const AthleteParams a{248.0, 18200.0};
  for (double t : {1.0, 37.5, 120.0, 600.0, 1e7})
    CHECK((power_for_tte(a, t) - a.cp) * t == doctest::Approx(a.w_prime).epsilon(1e-9));
}

TEST_CASE("tte_for_power inverts power_for_tte") {
  const AthleteParams a{200.0, 12000.0};
  CHECK(tte_for_power(a, 250.0) == doctest::Approx(240.0));
  CHECK_THROWS_AS(tte_for_power(a, 200.0), std::invalid_argument);
  CHECK_THROWS_AS(tte_for_power(a, 150.0), std::invalid_argument);
  const ExpenditureTargets targets = ExpenditureTargets::defaults();
  for (double t : targets.tte_targets) {
    const double round_trip = tte_for_power(a, power_for_tte(a, t));
    CHECK(std::abs(round_trip - t) / t <= 1e-9);
  }
}

TEST_CASE("protocol intensities") {
  const ProtocolIntensities pi = protocol_intensities({200.0, 12000.0});
  CHECK(pi.p4 == doctest::Approx(250.0));
  CHECK(pi.p8 == doctest::Approx(225.0));
  CHECK(pi.cp33 == doctest::Approx(66.0));
  CHECK(pi.cp66 == doctest::Approx(132.0));

  const ProtocolIntensities ex = protocol_intensities(hydtest::example_athlete());
  CHECK(ex.p4 == doctest::Approx(323.83).epsilon(1e-4));
  CHECK(ex.p8 == doctest::Approx(285.92).epsilon(1e-4));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> cp(50.0, 500.0), wp(1000.0, 50000.0);
  for (int i = 0; i < 100; ++i) {
    const ProtocolIntensities p = protocol_intensities({cp(rng), wp(rng)});
    CHECK(p.p4 > p.p8);
    CHECK(p.p8 > p.cp66);
    CHECK(p.cp66 > p.cp33);
  }
}

TEST_CASE("default expenditure targets are the 12 published seconds") {
  const ExpenditureTargets t = ExpenditureTargets::defaults();
  const std::vector<double> expected = {120.0, 130.0, 140.0, 150.0, 170.0, 190.0,
                                        210.0, 250.0, 310.0, 400.0, 600.0, 1200.0};
  CHECK(t.tte_targets == expected);
}

TEST_CASE("expenditure targets must increase strictly") {
  CHECK_THROWS_AS(ExpenditureTargets({120.0, 120.0}), std::invalid_argument);
  CHECK_THROWS_AS(ExpenditureTargets({-5.0, 120.0}), std::invalid_argument);
  CHECK_THROWS_AS(ExpenditureTargets({}), std::invalid_argument);
}

TEST_CASE("builtin recovery table carries the 12 published ratios") {
  const RecoveryRatioTable t = RecoveryRatioTable::builtin();
  REQUIRE(t.entries.size() == 12);
  const std::vector<double> expected = {0.55, 0.61, 0.705, 0.49, 0.55, 0.58,
                                        0.42, 0.52, 0.595, 0.38, 0.375, 0.50};
  for (std::size_t i = 0; i < 12; ++i) CHECK(t.entries[i].target_ratio == expected[i]);

  // spot checks against the published cells
  CHECK(t.entries[0].work == WorkTag::P4);
  CHECK(t.entries[0].recovery == RecoveryTag::CP33);
  CHECK(t.entries[0].duration_s == 120.0);
  CHECK(t.entries[0].target_ratio == 0.55);
  CHECK(t.entries[10].work == WorkTag::P8);
  CHECK(t.entries[10].recovery == RecoveryTag::CP66);
  CHECK(t.entries[10].duration_s == 240.0);
  CHECK(t.entries[10].target_ratio == 0.375);
}

TEST_CASE("load_recovery_table round-trips the builtin table") {
  std::ostringstream out;
  write_recovery_table(out, RecoveryRatioTable::builtin());
  std::istringstream in(out.str());
  const RecoveryRatioTable parsed = load_recovery_table(in, "builtin-copy");
  REQUIRE(parsed.entries.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(parsed.entries[i].work == RecoveryRatioTable::builtin().entries[i].work);
    CHECK(parsed.entries[i].target_ratio ==
          RecoveryRatioTable::builtin().entries[i].target_ratio);
  }
}

TEST_CASE("load_recovery_table rejects bad input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return load_recovery_table(in, "test");
  };
  const std::string header = "work,recovery,duration_s,ratio_percent\n";
  CHECK_THROWS(parse("wrong,header\nP4,CP33,120,55\n"));
  CHECK_THROWS(parse(header + "P4,CP33,120,120\n"));    // ratio above 100%
  CHECK_THROWS(parse(header + "P4,CP33,120,0\n"));      // ratio must be positive
  CHECK_THROWS(parse(header + "P4,CP33,120,55\nP4,CP33,120,60\n"));  // duplicate key
  CHECK_THROWS(parse(header + "P5,CP33,120,55\n"));     // unknown work tag
  CHECK_THROWS(parse(header + "P4,CP33,120\n"));        // missing field
  CHECK_THROWS(parse(header + "P4,CP33,120,abc\n"));    // malformed number
  CHECK_THROWS(parse(header));                          // no rows
  CHECK_NOTHROW(parse(header + "P4,CP33,120,55\n"));
}

}  // TEST_SUITE
