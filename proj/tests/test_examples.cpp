#include <doctest.h>

#include "fixtures.hpp"

using namespace gitfan;
using namespace fixtures;

TEST_CASE("projective space betti numbers") {
  for (unsigned n = 1; n <= 5; ++n) {
    auto [gd, ws] = projective(n);
    auto ch = chamber_for(gd, ws, make_vec({1}));
    auto pres = chow_presentation(gd, ws, ch);
    CHECK(to_longs(betti_numbers(pres)) == std::vector<long>(n + 1, 1));
    CHECK(picard_and_ample(gd, ws, ch).rank == 1);
  }
}

TEST_CASE("hirzebruch fan") {
  for (long a : {1L, 2L}) {
    auto [gd, ws] = hirzebruch(a);
    auto fan = git_fan(gd, ws);
    CHECK(fan.full_dimensional().size() == 2);
    auto ch = chamber_for(gd, ws, make_vec({1, 1}));
    CHECK(to_longs(betti_numbers(chow_presentation(gd, ws, ch))) ==
          std::vector<long>{1, 2, 1});
    auto pic = picard_and_ample(gd, ws, ch);
    CHECK(pic.rank == 2);
    for (const auto& c : ch.components) CHECK(c.codim_orbit == 2);
  }
}

TEST_CASE("grassmannian") {
  auto [gd, ws] = grassmannian_24();
  auto ch = chamber_for(gd, ws, make_vec({1}));
  REQUIRE(ch.components.size() == 1);
  CHECK(ch.components[0].class_t.to_string() == "t2^4");
  CHECK(ch.components[0].codim_orbit == 3);
  auto pres = chow_presentation(gd, ws, ch);
  CHECK(to_longs(betti_numbers(pres)) == std::vector<long>{1, 1, 2, 1, 1});
  CHECK(picard_and_ample(gd, ws, ch).rank == 1);
}

TEST_CASE("weighted projective plane") {
  auto [gd, ws] = weighted_112();
  auto ch = chamber_for(gd, ws, make_vec({1}));
  CHECK(to_longs(betti_numbers(chow_presentation(gd, ws, ch))) ==
        std::vector<long>{1, 1, 1});
}
