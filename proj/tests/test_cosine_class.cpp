#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "cosalg/cosine_class.hpp"
#include "cosalg/rng.hpp"

using namespace cosalg;

namespace {
constexpr double kTwoPi = 2 * std::numbers::pi;
}

TEST_CASE("evaluate") {
  const Group z4 = Group::cyclic(4);
  const CosineElement one = from_coord(z4, 0);
  for (int k = 0; k < 4; ++k) CHECK(one(k) == 1.0);

  const CosineElement l1 = from_coord(z4, 1);  // cos(pi k / 2)
  CHECK(l1(0) == doctest::Approx(1));
  CHECK(l1(1) == doctest::Approx(0));
  CHECK(l1(2) == doctest::Approx(-1));
  CHECK(l1(3) == doctest::Approx(0));

  const Group real = Group::real_line(1, 0.25);
  const CosineElement y1 = from_coord(real, 1);
  CHECK(y1.at_value(0.25) == doctest::Approx(0.0));  // cos(pi/2)
}

TEST_CASE("coordinate domains") {
  CHECK_THROWS_AS(from_coord(Group::cyclic(4), 3), std::domain_error);  // {0,1,2}
  CHECK_NOTHROW(from_coord(Group::cyclic(4), 2));
  CHECK_THROWS_AS(from_coord(Group::real_line(1, 0.5), -0.1), std::domain_error);
  CHECK_THROWS_AS(from_coord(Group::integers(3), 0.6), std::domain_error);
  CHECK_THROWS_AS(from_coord(Group::circle(8), 1.5), std::domain_error);
  // alpha = 1/2 (z = -1) is admitted by default, rejected in strict mode
  CHECK_NOTHROW(from_coord(Group::integers(3), 0.5));
  CHECK_THROWS_AS(from_coord(Group::integers(3), 0.5, true), std::domain_error);
}

TEST_CASE("coord round trip") {
  const Group z4 = Group::cyclic(4);
  const CosineElement phi = from_coord(z4, 2);
  CHECK(coord_of(phi) == 2.0);
  CHECK(phi(0) == doctest::Approx(1));
  CHECK(phi(1) == doctest::Approx(-1));
  CHECK(phi(2) == doctest::Approx(1));
  CHECK(phi(3) == doctest::Approx(-1));
}

TEST_CASE("dalembert residual vanishes on the class") {
  SplitMix64 rng(61);
  const Group groups[] = {Group::cyclic(12), Group::circle(16),
                          Group::integers(8), Group::real_line(2, 0.25)};
  for (const Group& g : groups) {
    double coord = 0;
    switch (g.kind()) {
      case GroupKind::RealLine: coord = 0.5 + rng.uniform01(); break;
      case GroupKind::Integers: coord = 0.5 * rng.uniform01(); break;
      case GroupKind::Circle: coord = 3; break;
      case GroupKind::CyclicGroup: coord = 2; break;
    }
    const CosineElement phi = from_coord(g, coord);
    for (int t = 0; t < 50; ++t) {
      const int x = static_cast<int>(rng.below(g.size()));
      const int y = static_cast<int>(rng.below(g.size()));
      if (g.add(x, y) == kOffWindow || g.sub(x, y) == kOffWindow) continue;
      CHECK(std::abs(dalembert_residual(phi, x, y)) <= 1e-12);
    }
  }
}

TEST_CASE("sine fails the functional equation") {
  const Group circ = Group::circle(8);
  const auto sine = [](double x) { return std::sin(kTwoPi * x); };
  CHECK(dalembert_residual(sine, circ, 2, 2) == doctest::Approx(1.0));  // x=y=1/4
}

TEST_CASE("residual requires in-window arguments") {
  const Group z = Group::integers(3);
  const CosineElement phi = from_coord(z, 0.25);
  CHECK_THROWS_AS(dalembert_residual(phi, z.size() - 1, z.size() - 1),
                  std::domain_error);
}

TEST_CASE("character pair") {
  const Group z8 = Group::cyclic(8);
  for (const CosineElement& phi : enumerate_class(z8)) {
    for (int k = 0; k < 8; ++k) {
      const auto chi = phi.character(k);
      CHECK(std::abs(std::abs(chi) - 1.0) <= 1e-15);
      CHECK(std::abs(chi.real() - phi(k)) <= 1e-15);
    }
  }
  const Group real = Group::real_line(2, 0.125);
  const CosineElement phi = from_coord(real, 1.5);
  for (int i = 0; i < real.size(); ++i) {
    const auto chi = phi.character(i);  // exp(2 pi i y x)
    CHECK(std::abs(std::abs(chi) - 1.0) <= 1e-15);
    CHECK(std::abs(chi.real() - phi(i)) <= 1e-15);
  }
}

TEST_CASE("enumerate_class counts") {
  CHECK(enumerate_class(Group::cyclic(4)).size() == 3);
  CHECK(enumerate_class(Group::cyclic(5)).size() == 3);
  CHECK(enumerate_class(Group::cyclic(1)).size() == 1);
  CHECK(enumerate_class(Group::circle(16), 5).size() == 6);
  CHECK_THROWS_AS(enumerate_class(Group::circle(16)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_class(Group::real_line(1, 0.5)), std::invalid_argument);
}

TEST_CASE("enumerated value vectors are pairwise distinct") {
  for (int n = 1; n <= 64; ++n) {
    const Group g = Group::cyclic(n);
    const auto phis = enumerate_class(g);
    REQUIRE(static_cast<int>(phis.size()) == half_range_size(n));
    for (size_t a = 0; a < phis.size(); ++a)
      for (size_t b = a + 1; b < phis.size(); ++b) {
        double diff = 0;
        for (int k = 0; k < n; ++k)
          diff = std::max(diff, std::abs(phis[a](k) - phis[b](k)));
        CHECK(diff > 0);
      }
  }
}

TEST_CASE("tokens") {
  CHECK(from_coord(Group::cyclic(4), 1).token() == "cyclic4:l=1");
  CHECK(from_coord(Group::circle(8), 2).token() == "circle8:k=2");
}
