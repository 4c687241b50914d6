#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gitfan/arith.hpp"
#include "gitfan/groupdata.hpp"
#include "gitfan/polycone.hpp"
#include "gitfan/poly.hpp"

namespace gitfan {

enum class Verdict { unstable, semistable, properly_stable };
enum class Variant { semistable, properly_stable };
enum class MaximalFlag { certified, heuristic };
enum class Tristate { no, yes, unknown };

/// Outcome of a Hilbert-Mumford test.
///
/// unstable: `lambda` satisfies <eta_a, lambda> >= 0 on the support and
/// <chi, lambda> < 0. semistable (not properly stable): `lambda` is nonzero
/// with <eta_a, lambda> >= 0 on the support and <chi, lambda> = 0.
/// Whenever the verdict is not unstable, `combination` expresses chi as a
/// nonnegative rational combination of support weights (column, coefficient).
struct HMCertificate {
  Verdict verdict = Verdict::unstable;
  std::optional<Cocharacter> lambda;
  std::optional<Integer> pairing;
  std::vector<std::pair<std::size_t, Rational>> combination;
};

/// A point given either by its support or by concrete coordinates (one per
/// coordinate of V); with coordinates the support is derived from them.
struct PointSupport {
  Support support;
  std::optional<std::vector<Rational>> coords;

  Support resolve(const WeightSystem& ws) const;
};

/// A maximal unstable stratum E(lambda).
struct UnstableComponent {
  Support support;
  Support vanishing;
  Cocharacter lambda;
  Poly class_t;
  std::size_t codim_e = 0;
  std::size_t dim_stab = 0;
  std::size_t codim_orbit = 0;
  MaximalFlag maximal_flag = MaximalFlag::certified;
};

struct Chamber {
  RatCone cone;
  Character representative;
  std::vector<Support> semistable_supports;
  std::vector<UnstableComponent> components;
  Tristate properly_stable = Tristate::no;
};

struct EffectiveAndWalls {
  /// In X^*(G) coordinates.
  RatCone effective;
  std::vector<RatCone> walls;
  /// False when X^*(G) lies in the span of some torus wall; wall-based
  /// stability flags are then reported as unknown.
  bool complete = true;
};

/// The GIT fan on X^*(G)_Q. chambers[i] describes fan.cones[i].
struct GITFan {
  Fan fan;
  std::vector<Chamber> chambers;
  RatCone effective_cone;
  std::vector<RatCone> walls;
  bool walls_complete = true;

  std::vector<std::size_t> full_dimensional() const;
};

struct FanOptions {
  unsigned threads = 1;
};

struct LookupResult {
  bool effective = false;
  std::optional<std::size_t> cone_index;
  Tristate properly_stable = Tristate::no;
  bool on_wall = false;
};

/// chi (in X^*(T) coordinates) is semistable on the support iff it lies in
/// the cone of the support weights.
HMCertificate support_semistable(const WeightSystem& ws, const LatVec& chi,
                                 const Support& support);

/// Hilbert-Mumford test of a single point. Torus actions only.
HMCertificate point_test(const GroupData& gd, const WeightSystem& ws,
                         const LatVec& chi, const PointSupport& x);

/// Primitive normals (first nonzero entry positive) of the hyperplanes of
/// X^*(T)_Q spanned by weights, sorted. For rank one this is {(1)}.
std::vector<LatVec> wall_normals(const WeightSystem& ws);

/// Maximal supports S with chi not in cone(S) (semistable variant), or with
/// chi not in the relative interior of a full-dimensional cone(S) (properly
/// stable variant); deduplicated modulo W. Sorted by support.
std::vector<UnstableComponent> unstable_components(
    const GroupData& gd, const WeightSystem& ws, const Character& chi,
    Variant variant = Variant::semistable);

/// Minimal supports on which chi is semistable (X^*(T) coordinates).
std::vector<Support> minimal_semistable_supports(const WeightSystem& ws,
                                                 const LatVec& chi);

/// V^ss(G, chi) is nonempty.
bool is_effective(const GroupData& gd, const WeightSystem& ws,
                  const Character& chi);

EffectiveAndWalls effective_cone_and_walls(const GroupData& gd,
                                           const WeightSystem& ws);

GITFan git_fan(const GroupData& gd, const WeightSystem& ws,
               const FanOptions& opts = {});

LookupResult chamber_lookup(const GITFan& fan, const Character& chi);

/// Chamber record of the GIT class containing chi: the fan cone with chi in
/// its relative interior, chi itself as representative, and the unstable
/// components at chi. Throws InvalidInput when chi is not effective.
Chamber chamber_of(const GroupData& gd, const WeightSystem& ws,
                   const GITFan& fan, const Character& chi);

/// True when some cocharacter pairs positively with every weight, which
/// certifies K[V]^G = K.
bool invariants_trivial(const WeightSystem& ws);

/// Lexicographically smallest image of the support under W.
Support weyl_canonical(const GroupData& gd, const WeightSystem& ws,
                       const Support& s);

}  // namespace gitfan
