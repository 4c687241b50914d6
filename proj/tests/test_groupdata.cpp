#include <doctest.h>

#include <gitfan/groupdata.hpp>

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"

using namespace gitfan;

namespace {

Summand std_summand(std::size_t block, unsigned mult = 1) {
  Summand s;
  s.kind = SummandKind::std_rep;
  s.block = block;
  s.multiplicity = mult;
  return s;
}

Summand dual_summand(std::size_t block, unsigned mult = 1) {
  Summand s = std_summand(block, mult);
  s.kind = SummandKind::dual_std;
  return s;
}

Summand hom_summand(std::size_t src, std::size_t dst, unsigned mult = 1) {
  Summand s;
  s.kind = SummandKind::hom;
  s.src = src;
  s.dst = dst;
  s.multiplicity = mult;
  return s;
}

int inversion_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) s = -s;
    }
  }
  return s;
}

// A few modules over GL(2) x GL(3) x G_m exercising every summand kind.
std::pair<GroupData, WeightSystem> mixed_module() {
  Summand twisted = std_summand(0, 2);
  twisted.twist = make_vec({1});
  Summand dual = dual_summand(1);
  dual.twist = make_vec({-1});
  Summand ch;
  ch.kind = SummandKind::torus_char;
  ch.weight = make_vec({1, 1, 0, 0, 0, 2});
  return build_group(GroupSpec{{2, 3}, 1},
                     ModuleSpec{{twisted, hom_summand(0, 1), dual, ch,
                                 hom_summand(1, 1), std_summand(1)}});
}

}  // namespace

TEST_CASE("GL(2) root data") {
  auto [gd, ws] = build_group(GroupSpec{{2}, 0}, ModuleSpec{{std_summand(0)}});
  REQUIRE(gd.positive_roots().size() == 1);
  CHECK(gd.positive_roots()[0].vec == make_vec({1, -1}));
  CHECK(gd.weyl_order() == 2);
  CHECK(gd.discriminant().to_string() == "t1 - t2");
  CHECK(gd.dim() == 4);
  CHECK(gd.char_rank() == 1);
}

TEST_CASE("Hom(K^2, K^4) weights") {
  auto [gd, ws] = fixtures::grassmannian_24();
  REQUIRE(ws.num_columns() == 2);
  CHECK(ws.column(0).weight == make_vec({1, 0}));
  CHECK(ws.column(0).multiplicity == 4);
  CHECK(ws.column(1).weight == make_vec({0, 1}));
  CHECK(ws.column(1).multiplicity == 4);
  CHECK(ws.dim() == 8);
}

TEST_CASE("torus root data") {
  auto [gd, ws] = fixtures::p1xp1();
  CHECK(gd.positive_roots().empty());
  CHECK(gd.discriminant() == Poly::constant(2, 1));
  CHECK(gd.weyl_order() == 1);
  CHECK(gd.is_torus());
  CHECK(gd.character_embed(make_vec({2, -1})) == make_vec({2, -1}));
}

TEST_CASE("character embedding") {
  auto [gd, ws] = fixtures::grassmannian_24();
  CHECK(gd.character_embed(make_vec({1})) == make_vec({1, 1}));
  CHECK(gd.character_embed(make_vec({3})) == make_vec({3, 3}));
  CHECK(gd.character_coords(make_vec({3, 3})) == make_vec({3}));
  CHECK_FALSE(gd.character_coords(make_vec({1, 2})).has_value());
  CHECK_THROWS_AS(gd.character_embed(make_vec({1, 1})), DimensionMismatch);
}

TEST_CASE("expansion of every summand kind") {
  auto [gd, ws] = mixed_module();
  CHECK(gd.rank() == 6);
  CHECK(gd.char_rank() == 3);
  CHECK(ws.dim() == 2 * 2 + 6 + 3 + 1 + 9 + 3);
  CHECK(ws.column_of(make_vec({1, 0, 0, 0, 0, 1})).has_value());
  CHECK(ws.column_of(make_vec({0, 0, -1, 0, 0, -1})).has_value());
  CHECK(ws.column_of(make_vec({-1, 0, 1, 0, 0, 0})).has_value());
  CHECK(ws.column_of(make_vec({0, 0, 0, 0, 0, 0})).has_value());
  CHECK(ws.column(*ws.column_of(zero_vec(6))).multiplicity == 3);
}

TEST_CASE("invalid group input") {
  CHECK_THROWS_AS(build_group(GroupSpec{{2, 2}, 0}, ModuleSpec{{hom_summand(0, 1)}}),
                  InvalidInput);
  try {
    build_group(GroupSpec{{2, 2}, 0}, ModuleSpec{{hom_summand(0, 1)}});
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("defect 1") != std::string::npos);
  }
  CHECK_THROWS_AS(build_group(GroupSpec{{2}, 0}, ModuleSpec{{std_summand(1)}}),
                  InvalidInput);
  Summand bad_twist = std_summand(0);
  bad_twist.twist = make_vec({1, 2});
  CHECK_THROWS_AS(build_group(GroupSpec{{2}, 1}, ModuleSpec{{bad_twist}}),
                  InvalidInput);
  Summand not_constant;
  not_constant.weight = make_vec({1, 0});
  CHECK_THROWS_AS(build_group(GroupSpec{{2}, 0}, ModuleSpec{{not_constant}}),
                  InvalidInput);
  CHECK_THROWS_AS(build_group(GroupSpec{{}, 0}, ModuleSpec{}), InvalidInput);
  CHECK_THROWS_AS(torus_action({make_vec({1, 0})}), InvalidInput);
}

TEST_CASE("Weyl group enumeration and discriminant antisymmetry") {
  for (const auto& blocks : std::vector<std::vector<unsigned>>{
           {2}, {3}, {2, 2}, {4}, {5}, {3, 2}}) {
    ModuleSpec m;
    for (std::size_t j = 0; j < blocks.size(); ++j) m.summands.push_back(std_summand(j));
    auto [gd, ws] = build_group(GroupSpec{blocks, 0}, m);
    std::set<std::vector<std::size_t>> seen;
    std::size_t roots = 0;
    for (auto n : blocks) roots += n * (n - 1) / 2;
    CHECK(gd.positive_roots().size() == roots);
    CHECK(gd.discriminant().degree() == static_cast<int>(roots));
    CHECK(gd.dim() == gd.rank() + 2 * roots);
    gd.for_each_weyl([&](const WeylElement& w) {
      seen.insert(w.perm);
      CHECK(w.sign == inversion_sign(w.perm));
      Poly signed_disc = gd.discriminant();
      signed_disc *= Rational(w.sign);
      CHECK(gd.apply(w, gd.discriminant()) == signed_disc);
      for (const auto& b : gd.char_basis()) CHECK(gd.apply(w, b) == b);
    });
    CHECK(Integer(seen.size()) == gd.weyl_order());
  }
}

TEST_CASE("parabolic and stabilizer dimensions") {
  auto [gd, ws] = fixtures::grassmannian_24();
  const Support row1 = {0};
  auto d = stabilizer_dims(gd, ws, Cocharacter{make_vec({0, -1})}, row1);
  CHECK(d.dim_parabolic == 3);
  CHECK(d.dim_stab_lie == 3);
  CHECK(d.codim_orbit == 3);
  auto central = stabilizer_dims(gd, ws, Cocharacter{make_vec({1, 1})},
                                 ws.full_support());
  CHECK(central.dim_parabolic == 4);
  CHECK(central.dim_stab_lie == 4);
  CHECK(central.codim_orbit == 0);
  auto origin = stabilizer_dims(gd, ws, Cocharacter{make_vec({-1, -1})}, {});
  CHECK(origin.codim_orbit == 8);
  CHECK_THROWS_AS(stabilizer_dims(gd, ws, Cocharacter{make_vec({1})}, row1),
                  DimensionMismatch);
}

TEST_CASE("root vectors satisfy [E_ab, E_ba] = H_ab on every coordinate") {
  auto [gd, ws] = mixed_module();
  auto apply = [&](std::size_t a, std::size_t b,
                   const std::map<std::size_t, Integer>& x) {
    std::map<std::size_t, Integer> out;
    for (const auto& [c, v] : x) {
      for (const auto& [img, coef] : root_action(gd, ws, a, b, c)) {
        out[img] += coef * v;
      }
    }
    return out;
  };
  for (const auto& r : gd.positive_roots()) {
    for (std::size_t c = 0; c < ws.dim(); ++c) {
      const LatVec& eta = ws.column(ws.coordinates()[c].column).weight;
      // E_ab raises the weight by e_a - e_b.
      for (const auto& [img, coef] : root_action(gd, ws, r.a, r.b, c)) {
        CHECK(ws.column(ws.coordinates()[img].column).weight == add(eta, r.vec));
      }
      const std::map<std::size_t, Integer> x = {{c, Integer(1)}};
      auto ab = apply(r.a, r.b, apply(r.b, r.a, x));
      auto ba = apply(r.b, r.a, apply(r.a, r.b, x));
      std::map<std::size_t, Integer> comm;
      for (const auto& [k, v] : ab) comm[k] += v;
      for (const auto& [k, v] : ba) comm[k] -= v;
      std::erase_if(comm, [](const auto& kv) { return kv.second == 0; });
      std::map<std::size_t, Integer> want;
      const Integer h = dot(eta, r.vec);
      if (h != 0) want[c] = h;
      CHECK(comm == want);
    }
  }
}

TEST_CASE("property: P(lambda) stabilizes E(lambda)") {
  std::mt19937_64 rng(21);
  auto [gd, ws] = mixed_module();
  std::uniform_int_distribution<long> d(-3, 3);
  for (int iter = 0; iter < 200; ++iter) {
    LatVec lam;
    for (std::size_t i = 0; i < gd.rank(); ++i) lam.push_back(Integer(d(rng)));
    Support s;
    for (std::size_t a = 0; a < ws.num_columns(); ++a) {
      if (dot(ws.column(a).weight, lam) >= 0) s.push_back(a);
    }
    auto dims = stabilizer_dims(gd, ws, Cocharacter{lam}, s);
    CHECK(dims.dim_parabolic <= dims.dim_stab_lie);
    CHECK(dims.codim_orbit <= ws.dim() - ws.support_dim(s));
  }
}
