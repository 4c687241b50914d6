#include "gitfan/stability.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gitfan/linalg.hpp"
#include "gitfan/parallel.hpp"

namespace gitfan {
namespace {

struct Context {
  std::vector<LatVec> normals;
  // Column permutations of all Weyl elements (empty for tori).
  std::vector<std::vector<std::size_t>> weyl_columns;
};

Context make_context(const GroupData& gd, const WeightSystem& ws) {
  Context ctx;
  ctx.normals = wall_normals(ws);
  if (!gd.is_torus()) {
    gd.for_each_weyl([&](const WeylElement& w) {
      ctx.weyl_columns.push_back(column_permutation(gd, ws, w));
    });
  }
  return ctx;
}

Support canonical_support(const Context& ctx, const Support& s) {
  Support best = s;
  for (const auto& perm : ctx.weyl_columns) {
    Support img;
    img.reserve(s.size());
    for (auto i : s) img.push_back(perm[i]);
    std::sort(img.begin(), img.end());
    if (img < best) best = std::move(img);
  }
  return best;
}

bool is_subset(const Support& a, const Support& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Poly vanishing_class(const WeightSystem& ws, const Support& vanishing) {
  Poly c = Poly::constant(ws.rank(), 1);
  for (auto i : vanishing) {
    const auto& col = ws.column(i);
    c = c * Poly::linear_form(col.weight).pow(
                static_cast<unsigned>(col.multiplicity));
  }
  return c;
}

// Enumerates linearly independent subsets of `pool` (indices into ws
// columns) in lexicographic DFS order. The visitor returns false to stop
// extending the current subset.
template <typename Visit>
void for_each_independent(const WeightSystem& ws, const Support& pool,
                          std::size_t max_size, Visit&& visit) {
  Support current;
  std::vector<LatVec> vecs;
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (!visit(current)) return true;
    if (current.size() == max_size) return true;
    for (std::size_t k = start; k < pool.size(); ++k) {
      vecs.push_back(ws.column(pool[k]).weight);
      if (linalg::rank(vecs, ws.rank()) == vecs.size()) {
        current.push_back(pool[k]);
        bool go_on = self(self, k + 1);
        current.pop_back();
        if (!go_on) {
          vecs.pop_back();
          return false;
        }
      }
      vecs.pop_back();
    }
    return true;
  };
  rec(rec, 0);
}

// Nonnegative combination of support weights equal to chi, if one exists.
std::optional<std::vector<std::pair<std::size_t, Rational>>> farkas_combination(
    const WeightSystem& ws, const LatVec& chi, const Support& support) {
  std::optional<std::vector<std::pair<std::size_t, Rational>>> found;
  for_each_independent(ws, support, ws.rank(), [&](const Support& s) {
    if (found) return false;
    auto coeffs = linalg::solve_independent(ws.weights(s), chi);
    if (coeffs && std::all_of(coeffs->begin(), coeffs->end(),
                              [](const Rational& c) { return c >= 0; })) {
      std::vector<std::pair<std::size_t, Rational>> comb;
      for (std::size_t i = 0; i < s.size(); ++i) {
        comb.emplace_back(s[i], (*coeffs)[i]);
      }
      found = std::move(comb);
      return false;
    }
    return true;
  });
  return found;
}

std::vector<UnstableComponent> components_in_context(
    const GroupData& gd, const WeightSystem& ws, const Context& ctx,
    const LatVec& chi, Variant variant) {
  if (chi.size() != ws.rank()) {
    throw DimensionMismatch("unstable_components: character length");
  }
  // Maximal unstable supports are the sets {a : <eta_a, lambda> >= 0} for
  // lambda running over rays of the arrangement of the weight hyperplanes
  // eta_a^perp; those rays are the wall-span normals.
  std::vector<LatVec> candidates;
  for (const auto& n : ctx.normals) {
    for (const LatVec& s : {n, negate(n)}) {
      int p = sgn(dot(chi, s));
      if (p < 0 || (p == 0 && variant == Variant::properly_stable)) {
        candidates.push_back(s);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());

  std::map<Support, LatVec> by_support;
  for (const auto& lam : candidates) {
    Support s;
    for (std::size_t a = 0; a < ws.num_columns(); ++a) {
      if (dot(ws.column(a).weight, lam) >= 0) s.push_back(a);
    }
    by_support.try_emplace(std::move(s), lam);
  }

  std::vector<Support> maximal;
  for (const auto& [s, lam] : by_support) {
    bool dominated = false;
    for (const auto& [t, mu] : by_support) {
      if (t.size() > s.size() && is_subset(s, t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(s);
  }

  // Weyl orbits: keep the canonical (lexicographically smallest) member.
  std::vector<Support> reps;
  std::set<Support> seen;
  for (const auto& s : maximal) {
    Support c = canonical_support(ctx, s);
    if (seen.insert(c).second) reps.push_back(c);
  }
  std::sort(reps.begin(), reps.end());

  const bool heuristic = !gd.is_torus() && reps.size() > 1;
  std::vector<UnstableComponent> out;
  for (const auto& s : reps) {
    UnstableComponent comp;
    comp.support = s;
    comp.vanishing = ws.complement(s);
    comp.lambda = Cocharacter{by_support.at(s)};
    comp.class_t = vanishing_class(ws, comp.vanishing);
    comp.codim_e = ws.support_dim(comp.vanishing);
    const StabilizerDims dims = stabilizer_dims(gd, ws, comp.lambda, s);
    comp.dim_stab = dims.dim_stab_lie;
    comp.codim_orbit = dims.codim_orbit;
    comp.maximal_flag =
        heuristic ? MaximalFlag::heuristic : MaximalFlag::certified;
    out.push_back(std::move(comp));
  }
  return out;
}

bool effective_in_context(const GroupData& gd, const WeightSystem& ws,
                          const Context& ctx, const LatVec& embedded) {
  if (gd.is_torus()) {
    return RatCone::from_rays(ws.rank(), ws.all_weights()).contains(embedded);
  }
  for (const auto& c :
       components_in_context(gd, ws, ctx, embedded, Variant::semistable)) {
    if (c.codim_orbit == 0) return false;
  }
  return true;
}

LatVec pull_back(const GroupData& gd, const LatVec& n) {
  LatVec out;
  for (const auto& b : gd.char_basis()) out.push_back(dot(b, n));
  return out;
}

RatCone pull_back(const GroupData& gd, const RatCone& c) {
  std::vector<LatVec> ineq, eq;
  for (const auto& f : c.proper_facets()) ineq.push_back(pull_back(gd, f));
  for (const auto& e : c.equations()) eq.push_back(pull_back(gd, e));
  return RatCone::from_inequalities(gd.char_rank(), ineq, eq);
}

// Wall-span normals restricted to X^*(G); `complete` is cleared when some
// restriction vanishes.
std::vector<LatVec> pulled_normals(const GroupData& gd, const Context& ctx,
                                   bool& complete) {
  std::set<LatVec> out;
  complete = true;
  for (const auto& n : ctx.normals) {
    LatVec p = pull_back(gd, n);
    if (is_zero(p)) {
      complete = false;
      continue;
    }
    out.insert(sign_normalized(primitive(std::move(p))));
  }
  return {out.begin(), out.end()};
}

EffectiveAndWalls effective_in_context_all(const GroupData& gd,
                                           const WeightSystem& ws,
                                           const Context& ctx) {
  const std::size_t rank = ws.rank();
  const RatCone eff_t = RatCone::from_rays(rank, ws.all_weights());
  std::set<RatCone> walls_t;
  for (const auto& n : ctx.normals) {
    std::vector<LatVec> in_span;
    for (const auto& w : ws.all_weights()) {
      if (dot(n, w) == 0) in_span.push_back(w);
    }
    walls_t.insert(RatCone::from_rays(rank, in_span));
  }

  EffectiveAndWalls out;
  if (gd.is_torus()) {
    out.effective = eff_t;
    out.walls.assign(walls_t.begin(), walls_t.end());
    return out;
  }

  const std::size_t m = gd.char_rank();
  std::vector<LatVec> normals = pulled_normals(gd, ctx, out.complete);
  const RatCone eff_pulled = pull_back(gd, eff_t);
  std::set<RatCone> faces;
  for (const auto& cell : arrangement_chambers(m, normals, eff_pulled)) {
    for (auto& f : cell.all_faces()) faces.insert(std::move(f));
  }
  std::vector<LatVec> eff_rays;
  for (const auto& f : faces) {
    const LatVec rep = gd.character_embed(f.interior_point());
    if (effective_in_context(gd, ws, ctx, rep)) {
      for (const auto& r : f.rays()) eff_rays.push_back(r);
    }
  }
  out.effective = RatCone::from_rays(m, eff_rays);
  std::set<RatCone> walls;
  for (const auto& w : walls_t) {
    walls.insert(intersect(pull_back(gd, w), out.effective));
  }
  out.walls.assign(walls.begin(), walls.end());
  return out;
}

Chamber chamber_at(const GroupData& gd, const WeightSystem& ws,
                   const Context& ctx, const RatCone& cone,
                   const EffectiveAndWalls& ew) {
  Chamber ch;
  ch.cone = cone;
  ch.representative = gd.character(cone.interior_point());
  const LatVec& chi = ch.representative.embedded;
  ch.components =
      components_in_context(gd, ws, ctx, chi, Variant::semistable);
  ch.semistable_supports = minimal_semistable_supports(ws, chi);
  if (cone.dim() != gd.char_rank()) {
    ch.properly_stable = Tristate::no;
  } else if (!ew.complete) {
    ch.properly_stable = Tristate::unknown;
  } else {
    const bool on_wall =
        std::any_of(ew.walls.begin(), ew.walls.end(), [&](const RatCone& w) {
          return w.contains(ch.representative.coords);
        });
    ch.properly_stable = on_wall ? Tristate::no : Tristate::yes;
  }
  return ch;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Support PointSupport::resolve(const WeightSystem& ws) const {
  if (!coords) {
    for (auto i : support) {
      if (i >= ws.num_columns()) {
        throw InvalidInput("support index " + std::to_string(i) +
                           " out of range");
      }
    }
    Support s = support;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }
  if (coords->size() != ws.dim()) {
    throw DimensionMismatch("point has " + std::to_string(coords->size()) +
                            " coordinates, expected " +
                            std::to_string(ws.dim()));
  }
  std::set<std::size_t> cols;
  for (std::size_t c = 0; c < coords->size(); ++c) {
    if ((*coords)[c] != 0) cols.insert(ws.coordinates()[c].column);
  }
  return {cols.begin(), cols.end()};
}

HMCertificate support_semistable(const WeightSystem& ws, const LatVec& chi,
                                 const Support& support) {
  if (chi.size() != ws.rank()) {
    throw DimensionMismatch("support_semistable: character length");
  }
  HMCertificate cert;
  const RatCone cone = RatCone::from_rays(ws.rank(), ws.weights(support));
  if (auto lam = cone.violated_facet(chi)) {
    cert.verdict = Verdict::unstable;
    cert.pairing = dot(chi, *lam);
    cert.lambda = Cocharacter{std::move(*lam)};
    return cert;
  }
  cert.verdict = Verdict::semistable;
  auto comb = farkas_combination(ws, chi, support);
  if (!comb) throw InternalError("semistable support without Farkas witness");
  cert.combination = std::move(*comb);
  return cert;
}

HMCertificate point_test(const GroupData& gd, const WeightSystem& ws,
                         const LatVec& chi, const PointSupport& x) {
  if (!gd.is_torus()) {
    throw Unsupported("point tests are only available for torus actions");
  }
  const Support s = x.resolve(ws);
  HMCertificate cert = support_semistable(ws, chi, s);
  if (cert.verdict == Verdict::unstable) return cert;
  const RatCone cone = RatCone::from_rays(ws.rank(), ws.weights(s));
  for (const auto& f : cone.facets()) {
    if (dot(f, chi) == 0) {
      cert.lambda = Cocharacter{f};
      cert.pairing = Integer(0);
      return cert;
    }
  }
  cert.verdict = Verdict::properly_stable;
  return cert;
}

std::vector<LatVec> wall_normals(const WeightSystem& ws) {
  const std::size_t rank = ws.rank();
  if (rank == 1) return {make_vec({1})};
  Support nonzero;
  for (std::size_t a = 0; a < ws.num_columns(); ++a) {
    if (!is_zero(ws.column(a).weight)) nonzero.push_back(a);
  }
  std::set<LatVec> out;
  for_each_independent(ws, nonzero, rank - 1, [&](const Support& s) {
    if (s.size() == rank - 1) {
      auto ns = linalg::nullspace(ws.weights(s), rank);
      out.insert(sign_normalized(primitive(ns.at(0))));
    }
    return true;
  });
  return {out.begin(), out.end()};
}

std::vector<UnstableComponent> unstable_components(const GroupData& gd,
                                                   const WeightSystem& ws,
                                                   const Character& chi,
                                                   Variant variant) {
  if (variant == Variant::semistable && is_zero(chi.embedded)) return {};
  return components_in_context(gd, ws, make_context(gd, ws), chi.embedded,
                               variant);
}

std::vector<Support> minimal_semistable_supports(const WeightSystem& ws,
                                                 const LatVec& chi) {
  std::vector<Support> out;
  for_each_independent(ws, ws.full_support(), ws.rank(),
                       [&](const Support& s) {
                         auto c = linalg::solve_independent(ws.weights(s), chi);
                         if (!c) return true;
                         if (std::all_of(c->begin(), c->end(),
                                         [](const Rational& q) { return q > 0; })) {
                           out.push_back(s);
                         }
                         return false;
                       });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_effective(const GroupData& gd, const WeightSystem& ws,
                  const Character& chi) {
  return effective_in_context(gd, ws, make_context(gd, ws), chi.embedded);
}

EffectiveAndWalls effective_cone_and_walls(const GroupData& gd,
                                           const WeightSystem& ws) {
  return effective_in_context_all(gd, ws, make_context(gd, ws));
}

std::vector<std::size_t> GITFan::full_dimensional() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    if (fan.cones[i].dim() == fan.rank) out.push_back(i);
  }
  return out;
}

GITFan git_fan(const GroupData& gd, const WeightSystem& ws,
               const FanOptions& opts) {
  const Context ctx = make_context(gd, ws);
  GITFan out;
  EffectiveAndWalls ew = effective_in_context_all(gd, ws, ctx);
  const std::size_t m = gd.char_rank();

  bool complete = true;
  std::vector<LatVec> normals;
  if (gd.is_torus()) {
    normals = ctx.normals;
  } else {
    normals = pulled_normals(gd, ctx, complete);
  }
  const std::vector<RatCone> cells =
      arrangement_chambers(m, normals, ew.effective);

  // Cells of the hyperplane arrangement refine the GIT classes; adjacent
  // cells with the same unstable family belong to one class.
  std::vector<std::vector<Support>> signature(cells.size());
  parallel_for(cells.size(), opts.threads, [&](std::size_t i) {
    const LatVec chi = gd.character_embed(cells[i].interior_point());
    for (auto& c : components_in_context(gd, ws, ctx, chi, Variant::semistable)) {
      signature[i].push_back(std::move(c.support));
    }
  });
  UnionFind uf(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (signature[i] != signature[j]) continue;
      if (intersect(cells[i], cells[j]).dim() + 1 == cells[i].dim()) {
        uf.unite(i, j);
      }
    }
  }
  std::map<std::size_t, std::vector<LatVec>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& rays = groups[uf.find(i)];
    for (const auto& r : cells[i].rays()) rays.push_back(r);
  }
  std::vector<RatCone> maximal;
  for (const auto& [root, rays] : groups) {
    maximal.push_back(RatCone::from_rays(m, rays));
  }

  out.fan = Fan::from_maximal(m, maximal);
  out.chambers.resize(out.fan.cones.size());
  parallel_for(out.fan.cones.size(), opts.threads, [&](std::size_t i) {
    out.chambers[i] = chamber_at(gd, ws, ctx, out.fan.cones[i], ew);
  });
  out.effective_cone = std::move(ew.effective);
  out.walls = std::move(ew.walls);
  out.walls_complete = ew.complete;
  return out;
}

LookupResult chamber_lookup(const GITFan& fan, const Character& chi) {
  LookupResult res;
  if (chi.coords.size() != fan.fan.rank) {
    throw DimensionMismatch("chamber_lookup: character length");
  }
  if (!fan.effective_cone.contains(chi.coords)) return res;
  res.effective = true;
  for (std::size_t i = 0; i < fan.fan.cones.size(); ++i) {
    if (fan.fan.cones[i].contains(chi.coords,
                                  MembershipMode::relative_interior)) {
      res.cone_index = i;
      res.properly_stable = fan.chambers[i].properly_stable;
      break;
    }
  }
  res.on_wall = std::any_of(fan.walls.begin(), fan.walls.end(),
                            [&](const RatCone& w) {
                              return w.contains(chi.coords);
                            });
  return res;
}

Chamber chamber_of(const GroupData& gd, const WeightSystem& ws,
                   const GITFan& fan, const Character& chi) {
  const LookupResult look = chamber_lookup(fan, chi);
  if (!look.effective || !look.cone_index || !is_effective(gd, ws, chi)) {
    throw InvalidInput("character " + to_string(chi.coords) +
                       " is not effective");
  }
  Chamber ch;
  ch.cone = fan.fan.cones[*look.cone_index];
  ch.representative = chi;
  ch.components = unstable_components(gd, ws, chi);
  ch.semistable_supports = minimal_semistable_supports(ws, chi.embedded);
  ch.properly_stable = look.on_wall && look.properly_stable == Tristate::yes
                           ? Tristate::no
                           : look.properly_stable;
  return ch;
}

bool invariants_trivial(const WeightSystem& ws) {
  for (const auto& col : ws.columns()) {
    if (is_zero(col.weight)) return false;
  }
  return RatCone::from_rays(ws.rank(), ws.all_weights()).is_pointed();
}

Support weyl_canonical(const GroupData& gd, const WeightSystem& ws,
                       const Support& s) {
  Context ctx;
  if (!gd.is_torus()) {
    gd.for_each_weyl([&](const WeylElement& w) {
      ctx.weyl_columns.push_back(column_permutation(gd, ws, w));
    });
  }
  return canonical_support(ctx, s);
}

}  // namespace gitfan
