#include "doctest.h"
#include "hashpim/errors.hpp"
#include "hashpim/metrics.hpp"

using namespace hashpim;
using namespace hashpim::metrics;

TEST_CASE("published operating point") {
  const auto one = compute(MetricsInput::published_constants(1));
  CHECK(one.tput_system / 1e9 == doctest::Approx(39.2).epsilon(0.01));
  CHECK(one.tput_per_watt / 1e9 == doctest::Approx(1422).epsilon(0.01));
  CHECK(one.tput_per_area == doctest::Approx(9354).epsilon(0.01));
  const auto two = compute(MetricsInput::published_constants(2));
  CHECK(two.tput_system / 1e9 == doctest::Approx(78.4).epsilon(0.01));
  CHECK(two.tput_per_watt == doctest::Approx(one.tput_per_watt).epsilon(1e-12));
  CHECK(two.tput_per_area == doctest::Approx(one.tput_per_area).epsilon(1e-12));
}

TEST_CASE("scaling laws") {
  MetricsInput in = MetricsInput::published_constants();
  const auto base = compute(in);
  for (double n : {2.0, 3.0, 7.0}) {
    in.crossbars = n;
    CHECK(compute(in).tput_system == doctest::Approx(base.tput_system * n).epsilon(1e-12));
    CHECK(compute(in).tput_per_watt == doctest::Approx(base.tput_per_watt).epsilon(1e-12));
  }
  in.crossbars = 1;
  in.units_per_crossbar = 100;
  CHECK(compute(in).tput_per_watt == doctest::Approx(base.tput_per_watt).epsilon(1e-12));
}

TEST_CASE("measured inputs round-trip to r / energy") {
  CrossbarConfig cfg;
  const double energy = 129074 * 6.4e-15;
  const auto r = compute(MetricsInput::measured(cfg, 3824, energy, 378, 1));
  CHECK(r.tput_per_watt == doctest::Approx(1088 / energy).epsilon(1e-14));
  CHECK(r.tput_unit == doctest::Approx(1088.0 / 3824 / 3e-9).epsilon(1e-14));
}

TEST_CASE("zero denominators are rejected") {
  MetricsInput in = MetricsInput::published_constants();
  in.latency_round = 0;
  CHECK_THROWS_AS(compute(in), InputError);
  in = MetricsInput::published_constants();
  in.energy_unit = 0;
  CHECK_THROWS_AS(compute(in), InputError);
  in = MetricsInput::published_constants();
  in.crossbars = 0;
  CHECK_THROWS_AS(compute(in), InputError);
}

TEST_CASE("reference designs are display constants") {
  CHECK(kReferenceDesigns.size() == 3);
  CHECK(kReferenceDesigns[2].name == "SHINE-2");
  CHECK_FALSE(kReferenceDesigns[0].tput_per_watt_gbps.has_value());
}
