#pragma once

#include <gitfan/chowring.hpp>
#include <gitfan/groupdata.hpp>
#include <gitfan/stability.hpp>

#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace fixtures {

using namespace gitfan;

inline std::pair<GroupData, WeightSystem> projective(unsigned n) {
  return torus_action({make_vec({1})}, {n + 1});
}

inline std::pair<GroupData, WeightSystem> p1xp1() {
  return torus_action({make_vec({1, 0}), make_vec({0, 1})}, {2, 2});
}

inline std::pair<GroupData, WeightSystem> hirzebruch(long a) {
  return torus_action({make_vec({1, 0}), make_vec({-a, 1}), make_vec({0, 1})},
                      {2, 1, 1});
}

inline std::pair<GroupData, WeightSystem> weighted_112() {
  return torus_action({make_vec({1}), make_vec({2})}, {2, 1});
}

// GL(2) on Hom(K^2, K^4): four copies of the standard representation.
inline std::pair<GroupData, WeightSystem> grassmannian_24() {
  Summand s;
  s.kind = SummandKind::std_rep;
  s.block = 0;
  s.multiplicity = 4;
  return build_group(GroupSpec{{2}, 0}, ModuleSpec{{s}});
}

inline Chamber chamber_for(const GroupData& gd, const WeightSystem& ws,
                           const LatVec& coords) {
  GITFan fan = git_fan(gd, ws);
  Chamber ch;
  ch.representative = gd.character(coords);
  auto look = chamber_lookup(fan, ch.representative);
  if (look.cone_index) ch.cone = fan.fan.cones[*look.cone_index];
  ch.properly_stable = look.properly_stable;
  ch.components = unstable_components(gd, ws, ch.representative);
  ch.semistable_supports =
      minimal_semistable_supports(ws, ch.representative.embedded);
  return ch;
}

inline std::vector<long> to_longs(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace fixtures

namespace fixtures {

// A random torus action whose weights span the character lattice, or nothing
// when the draw is degenerate.
inline std::optional<std::pair<GroupData, WeightSystem>> random_torus(
    std::mt19937_64& rng, std::size_t rank, std::size_t ncols, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::uniform_int_distribution<unsigned> mult(1, 2);
  std::vector<LatVec> weights;
  std::vector<unsigned> mults;
  for (std::size_t i = 0; i < ncols; ++i) {
    LatVec w;
    for (std::size_t k = 0; k < rank; ++k) w.push_back(Integer(entry(rng)));
    weights.push_back(w);
    mults.push_back(mult(rng));
  }
  try {
    return torus_action(weights, mults);
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

inline LatVec random_lat(std::mt19937_64& rng, std::size_t rank, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  LatVec v;
  for (std::size_t k = 0; k < rank; ++k) v.push_back(Integer(entry(rng)));
  return v;
}

}  // namespace fixtures
