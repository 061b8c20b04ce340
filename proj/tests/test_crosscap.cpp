#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {
const std::set<Method> kDetNumeric = {Method::det, Method::numeric};
}

TEST_SUITE("crosscap") {
  TEST_CASE("validation") {
    CHECK_THROWS_AS(map2({"x", "y"}, 1), InvalidSpec);
    auto xyz = make_variables({"x", "y", "z"});
    std::vector<Polynomial> five;
    for (const char* s : {"x^2", "y", "z", "x*y", "x*z"}) five.push_back(P(s, xyz));
    CHECK_THROWS_AS(make_map_spec(3, xyz, five, 1), UnsupportedDimension);
    CHECK_THROWS_AS(map2(kUmbrella, 0), InvalidSpec);
  }

  TEST_CASE("jacobian frame") {
    auto f = jacobian_frame(map2(kUmbrella, 1));
    CHECK(f.n == 3);
    CHECK(f.k == 2);
    CHECK(f.columns.column(0) == std::vector<Polynomial>{P("2*x", xy()), P("0", xy()), P("y", xy())});
    CHECK(f.columns.column(1) == std::vector<Polynomial>{P("0", xy()), P("1", xy()), P("x", xy())});
    auto ex1 = jacobian_frame(map2(kCrosscap1, 1));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        CHECK(ex1.columns(i, j).total_degree() <= 3);
        CHECK(ex1.columns(i, j) == differentiate(P(kCrosscap1[i], xy()), j));
      }
  }

  TEST_CASE("linear maps have no singular points") {
    auto f = map2({"x", "y", "x + y"}, 1);
    CHECK(count_singular_points(f) == 0);
    CHECK(*crosscap_parity(f, kDetNumeric).parity == 0);
  }

  TEST_CASE("example 1") {
    auto big = map2(kCrosscap1, 10000);
    CHECK(count_singular_points(big) == 3);
    CHECK(certify_crosscaps_only(big) == CrosscapVerdict::certified);
    CHECK(*crosscap_parity(map2(kCrosscap1, 1), kDetNumeric).parity == 1);
    CHECK(*crosscap_parity(map2(kCrosscap1, 100), kDetNumeric).parity == 1);
    CHECK(*crosscap_parity(map2(kCrosscap1, 25), kDetNumeric).parity == 0);
  }

  TEST_CASE("example 2") {
    CHECK(count_singular_points(map2(kCrosscap2, 10000)) == 14);
    CHECK(*crosscap_parity(map2(kCrosscap2, 1), kDetNumeric).parity == 1);
    CHECK(*crosscap_parity(map2(kCrosscap2, Rational(1, 100)), kDetNumeric).parity == 0);
    CHECK(*crosscap_parity(map2(kCrosscap2, 100), kDetNumeric).parity == 0);
  }

  TEST_CASE("example 3") {
    auto f = map2(kCrosscap3, 1);
    auto report = crosscap_parity(f, kDetNumeric, 0, std::nullopt, {}, true);
    CHECK(*report.parity == 1);
    CHECK(report.lambda.hypothesis_checks.sphere_disjoint != SphereStatus::failed);
    CHECK(*report.all_crosscaps == CrosscapVerdict::refuted);
  }

  TEST_CASE("umbrella") {
    for (Rational r2 : {Rational(1, 10000), Rational(1), Rational(400)}) {
      auto f = map2(kUmbrella, r2);
      auto report = crosscap_parity(f, {Method::det, Method::sig, Method::numeric}, 0, P("1", xy()), {}, true);
      CHECK(*report.parity == 1);
      CHECK(*report.singular_points_inside == 1);
      CHECK(*report.all_crosscaps == CrosscapVerdict::certified);
    }
  }

  TEST_CASE("small perturbations keep the parity of example 1") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> k(-9, 9);
    auto small = [&] {
      Rational c(k(rng), 10000);
      c.canonicalize();
      return c;
    };
    for (int sample = 0; sample < 12; ++sample) {
      std::vector<Polynomial> comps;
      for (const auto& s : kCrosscap1)
        comps.push_back(P(s, xy()) + Polynomial::constant(xy(), small()) + P("x", xy()) * small() +
                        P("y", xy()) * small());
      auto f = make_map_spec(2, xy(), comps, 1);
      auto report = crosscap_parity(f, kDetNumeric, static_cast<std::uint64_t>(sample), std::nullopt, {}, true);
      CHECK(*report.parity == 1);
      CHECK(*report.all_crosscaps == CrosscapVerdict::certified);
    }
  }

  TEST_CASE("verdict names") {
    CHECK(to_string(CrosscapVerdict::refuted) == "refuted");
    CHECK(to_string(CrosscapVerdict::unknown) == "unknown");
  }
}
