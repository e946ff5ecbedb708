#include <doctest.h>

#include <cmath>
#include <numbers>

#include "indefmass/errors.hpp"
#include "indefmass/rootscan.hpp"

using namespace indefmass;

TEST_CASE("one bracket per simple root") {
  const auto f = [](double x) { return std::sin(x); };
  const auto brackets = isolate_sign_changes(f, 0.5, 20.0, {});
  REQUIRE(brackets.size() == 6);
  for (std::size_t j = 0; j < brackets.size(); ++j) {
    const double root = bisect(f, brackets[j], 1e-13);
    CHECK(std::fabs(root - std::numbers::pi * static_cast<double>(j + 1)) < 1e-12);
    CHECK(brackets[j].lo <= root);
    CHECK(root <= brackets[j].hi);
  }
}

TEST_CASE("a close root pair between samples is found through the |f| minimum") {
  const auto f = [](double x) { return (x - 1.01) * (x - 1.011); };
  const auto brackets = isolate_sign_changes(f, 0.0, 2.0, {});
  REQUIRE(brackets.size() == 2);
  CHECK(bisect(f, brackets[0], 1e-14) == doctest::Approx(1.01).epsilon(1e-12));
  CHECK(bisect(f, brackets[1], 1e-14) == doctest::Approx(1.011).epsilon(1e-12));
}

TEST_CASE("exact zeros on the grid become point brackets") {
  const auto f = [](double x) { return x - 0.5; };
  const auto brackets = isolate_sign_changes(f, 0.0, 1.0, ScanSettings{65, 4, 4});
  REQUIRE(brackets.size() == 1);
  CHECK(brackets[0].lo == 0.5);
  CHECK(brackets[0].hi == 0.5);
  CHECK(bisect(f, brackets[0], 1e-12) == 0.5);
}

TEST_CASE("several sign changes in a cell at maximum depth raise the diagnostic") {
  const auto f = [](double x) { return (x - 0.1) * (x - 0.3) * (x - 0.6); };
  CHECK_THROWS_AS(isolate_sign_changes(f, 0.0, 1.0, ScanSettings{2, 4, 1}), RefinementError);
  CHECK(isolate_sign_changes(f, 0.0, 1.0, ScanSettings{2, 4, 2}).size() == 3);
}

TEST_CASE("no sign change and no dip means no brackets") {
  const auto f = [](double x) { return 1.0 + x * x; };
  CHECK(isolate_sign_changes(f, -3.0, 3.0, {}).empty());
}

TEST_CASE("bad scan requests are rejected") {
  const auto f = [](double x) { return x; };
  CHECK_THROWS_AS(isolate_sign_changes(f, 1.0, 1.0, {}), InvalidArgument);
  CHECK_THROWS_AS(isolate_sign_changes(f, 0.0, 1.0, ScanSettings{1, 4, 4}), InvalidArgument);
}

TEST_CASE("bisection stops at the double-precision floor") {
  const auto f = [](double x) { return x - 1.0 / 3.0; };
  const double r = bisect(f, {0.0, 1.0}, 0.0);
  CHECK(std::fabs(r - 1.0 / 3.0) < 1e-16);
}
