#include <doctest.h>

#include <stdexcept>

#include "cosalg/group.hpp"

using namespace cosalg;

TEST_CASE("cyclic group construction") {
  const Group g = Group::cyclic(4);
  CHECK(g.size() == 4);
  CHECK(g.weight() == 1.0);
  for (int i = 0; i < 4; ++i) CHECK(g.point(i) == i);
}

TEST_CASE("real-line grid is symmetric and contains zero") {
  const Group g = Group::real_line(1.0, 0.5);
  CHECK(g.size() == 5);
  CHECK(g.point(0) == -1.0);
  CHECK(g.point(2) == 0.0);
  CHECK(g.point(4) == 1.0);
  CHECK(g.weight() == 0.5);
  CHECK(g.zero_index() == 2);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(Group::real_line(1.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(Group::real_line(-1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(Group::real_line(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Group::circle(1), std::invalid_argument);
  CHECK_THROWS_AS(Group::cyclic(0), std::invalid_argument);
  CHECK_THROWS_AS(Group::integers(-1), std::invalid_argument);
}

TEST_CASE("group law on point values") {
  CHECK(add_points(Group::cyclic(4), 3, 2) == 1.0);
  CHECK(negate_point(Group::circle(8), 0.25) == 0.75);
  CHECK(!add_points(Group::integers(3), 2, 2).has_value());  // truncation
  CHECK(add_points(Group::integers(3), 2, 1) == 3.0);
  CHECK(negate_point(Group::real_line(2, 0.5), 1.5) == -1.5);
}

TEST_CASE("haar weights") {
  CHECK(haar_weight(Group::cyclic(7)) == 1.0);
  CHECK(haar_weight(Group::circle(10)) == doctest::Approx(0.1));
  CHECK(haar_weight(Group::real_line(1, 0.01)) == doctest::Approx(0.01));
  CHECK(haar_weight(Group::integers(5)) == 1.0);
}

TEST_CASE("group law properties on sample indices") {
  const Group groups[] = {Group::cyclic(6), Group::circle(5),
                          Group::integers(3), Group::real_line(1, 0.25)};
  for (const Group& g : groups) {
    CAPTURE(g.descriptor());
    const int z = g.zero_index();
    for (int a = 0; a < g.size(); ++a) {
      CHECK(g.negate(g.negate(a)) == a);   // involution
      CHECK(g.add(a, z) == a);             // identity
      for (int b = 0; b < g.size(); ++b) {
        CHECK(g.add(a, b) == g.add(b, a));  // commutativity
        for (int c = 0; c < g.size(); ++c) {
          const int ab = g.add(a, b), bc = g.add(b, c);
          if (ab != kOffWindow && bc != kOffWindow) {
            const int l = g.add(ab, c), r = g.add(a, bc);
            if (l != kOffWindow && r != kOffWindow) CHECK(l == r);
          }
        }
      }
    }
  }
}

TEST_CASE("descriptor round trip") {
  const Group groups[] = {Group::cyclic(12), Group::circle(16),
                          Group::integers(7), Group::real_line(8, 0.125)};
  for (const Group& g : groups) CHECK(Group::parse(g.descriptor()) == g);
  CHECK_THROWS_AS(Group::parse("lattice:3"), std::invalid_argument);
  CHECK_THROWS_AS(Group::parse("cyclic"), std::invalid_argument);
}
