#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "hydfit/io.hpp"

using namespace hydfit;

TEST_SUITE("io") {

TEST_CASE("configuration files round-trip exactly") {
  const ModelConfiguration c{18217.421234567, 175251.33, 248.05, 85.18, 9.26, 0.78, 0.15, 0.21};
  std::ostringstream out;
  write_config(out, c);
  std::istringstream in(out.str());
  const ModelConfiguration back = load_config(in, "roundtrip");
  CHECK(to_genome(back) == to_genome(c));
}

TEST_CASE("configuration files keep the canonical field order") {
  std::ostringstream out;
  write_config(out, hydtest::fitted_config_a());
  const std::string text = out.str();
  std::size_t pos = 0;
  for (const auto& name : config_field_names()) {
    const std::size_t at = text.find(name + " = ", pos);
    REQUIRE(at != std::string::npos);
    pos = at;
  }
}

TEST_CASE("config parser rejects broken input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return load_config(in, "test");
  };
  CHECK_THROWS(parse("anf_capacity = 1000\n"));                         // missing keys
  CHECK_THROWS(parse("anf_capacity = abc\n"));                          // malformed number
  CHECK_THROWS(parse("anf_capacity = 1000\nanf_capacity = 2000\n"));    // duplicate
  CHECK_THROWS(parse("mystery = 4\n"));                                 // unknown key
  const std::string good =
      "anf_capacity = 1\nans_capacity = 2\nm_ae = 3\nm_ans = 4\nm_anf = 5\n"
      "phi = 0.1\ntheta = 0.2\ngamma = 0.3\n";
  CHECK_NOTHROW(parse(good));
  CHECK_NOTHROW(parse("# comment\n" + good));
}

TEST_CASE("athlete files") {
  std::istringstream in("cp_watts = 248\nw_prime_joules = 18200\n");
  const AthleteParams a = load_athlete(in, "test");
  CHECK(a.cp == 248.0);
  CHECK(a.w_prime == 18200.0);

  std::istringstream bad("cp_watts = -10\nw_prime_joules = 18200\n");
  CHECK_THROWS(load_athlete(bad, "test"));
  std::istringstream missing("cp_watts = 248\n");
  CHECK_THROWS(load_athlete(missing, "test"));
}

TEST_CASE("builtin bounds match the documented box") {
  const SearchBounds b = SearchBounds::builtin();
  CHECK(b.lower(0) == 1000.0);
  CHECK(b.upper(0) == 500000.0);
  CHECK(b.lower(1) == 1000.0);
  CHECK(b.upper(1) == 1000000.0);
  for (int j = 2; j <= 4; ++j) {
    CHECK(b.lower(j) == 1.0);
    CHECK(b.upper(j) == 1000.0);
  }
  for (int j = 5; j <= 7; ++j) {
    CHECK(b.lower(j) == 0.0);
    CHECK(b.upper(j) == 0.99);
  }
}

TEST_CASE("bounds files round-trip and validate") {
  std::ostringstream out;
  write_bounds(out, SearchBounds::builtin());
  std::istringstream in(out.str());
  const SearchBounds b = load_bounds(in, "roundtrip");
  CHECK(b.lower == SearchBounds::builtin().lower);
  CHECK(b.upper == SearchBounds::builtin().upper);

  std::ostringstream flipped;
  SearchBounds bad = SearchBounds::builtin();
  bad.lower(0) = bad.upper(0) + 1.0;
  write_bounds(flipped, bad);
  std::istringstream bad_in(flipped.str());
  CHECK_THROWS(load_bounds(bad_in, "test"));
}

TEST_CASE("full-precision formatting survives parsing") {
  for (double v : {0.1, 1.0 / 3.0, 18217.42, 1e-9, 123456789.123456}) {
    const std::string s = format_full(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_compact(64.0) == "64");
  CHECK(format_compact(51.8) == "51.8");
  CHECK(format_fixed(0.07512, 4) == "0.0751");
}

}  // TEST_SUITE
