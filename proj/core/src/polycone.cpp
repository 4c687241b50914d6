#include "gitfan/polycone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gitfan/linalg.hpp"

namespace gitfan {
namespace {

int compare_vec(const LatVec& a, const LatVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

bool vec_less(const LatVec& a, const LatVec& b) {
  return compare_vec(a, b) < 0;
}

int compare_list(const std::vector<LatVec>& a, const std::vector<LatVec>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare_vec(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

void sort_unique(std::vector<LatVec>& v) {
  std::sort(v.begin(), v.end(), vec_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_lengths(std::size_t rank, std::span<const LatVec> vs,
                   const char* what) {
  for (const auto& v : vs) {
    if (v.size() != rank) {
      throw DimensionMismatch(std::string(what) + ": vector of length " +
                              std::to_string(v.size()) + " in rank " +
                              std::to_string(rank));
    }
  }
}

// Canonical basis of a subspace given by spanning vectors: primitive RREF.
std::vector<LatVec> canonical_basis(std::span<const LatVec> span_vectors,
                                    std::size_t rank) {
  if (span_vectors.empty()) return {};
  return linalg::row_space_basis(span_vectors, rank);
}

// Projects generators onto the orthogonal complement of `sub`, primitive,
// drops zeros, deduplicates, sorts.
std::vector<LatVec> canonical_generators(std::span<const LatVec> gens,
                                         std::span<const LatVec> sub) {
  std::vector<LatVec> out;
  for (const auto& g : gens) {
    LatVec p = linalg::project_out(g, sub);
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  sort_unique(out);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Double description

namespace dd {

VRep h_to_v(std::size_t rank, std::span<const LatVec> inequalities,
            std::span<const LatVec> equations) {
  check_lengths(rank, inequalities, "h_to_v");
  check_lengths(rank, equations, "h_to_v");

  VRep rep;
  rep.lineality = linalg::nullspace(equations, rank);

  // Constraints processed so far; all of them vanish on the current
  // lineality space.
  std::vector<LatVec> processed(equations.begin(), equations.end());

  auto is_extreme = [&](const LatVec& r) {
    std::vector<LatVec> tight;
    for (const auto& c : processed) {
      if (dot(c, r) == 0) tight.push_back(c);
    }
    const std::size_t want = rank - rep.lineality.size() - 1;
    return linalg::rank(tight, rank) == want;
  };

  auto tight_signature = [&](const LatVec& r) {
    std::vector<bool> sig(processed.size());
    for (std::size_t i = 0; i < processed.size(); ++i) {
      sig[i] = dot(processed[i], r) == 0;
    }
    return sig;
  };

  for (const auto& a : inequalities) {
    if (is_zero(a)) continue;

    auto lin_it = std::find_if(rep.lineality.begin(), rep.lineality.end(),
                               [&](const LatVec& l) { return dot(a, l) != 0; });
    if (lin_it != rep.lineality.end()) {
      LatVec l0 = *lin_it;
      Integer a0 = dot(a, l0);
      if (a0 < 0) {
        l0 = negate(std::move(l0));
        a0 = -a0;
      }
      std::vector<LatVec> new_lin;
      for (const auto& l : rep.lineality) {
        if (&l == &*lin_it) continue;
        LatVec v = add(scale(l, a0), scale(l0, -dot(a, l)));
        if (!is_zero(v)) new_lin.push_back(primitive(std::move(v)));
      }
      std::vector<LatVec> new_rays;
      for (const auto& r : rep.rays) {
        LatVec v = add(scale(r, a0), scale(l0, -dot(a, r)));
        new_rays.push_back(primitive(std::move(v)));
      }
      new_rays.push_back(primitive(l0));
      rep.lineality = std::move(new_lin);
      rep.rays = std::move(new_rays);
      processed.push_back(a);
      continue;
    }

    std::vector<LatVec> pos, zer, neg;
    std::vector<Integer> pos_val, neg_val;
    for (auto& r : rep.rays) {
      Integer v = dot(a, r);
      if (v > 0) {
        pos.push_back(r);
        pos_val.push_back(v);
      } else if (v < 0) {
        neg.push_back(r);
        neg_val.push_back(v);
      } else {
        zer.push_back(r);
      }
    }
    processed.push_back(a);
    if (neg.empty()) continue;

    std::vector<LatVec> next = pos;
    next.insert(next.end(), zer.begin(), zer.end());
    std::set<std::vector<bool>> seen;
    for (const auto& r : next) seen.insert(tight_signature(r));
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = 0; j < neg.size(); ++j) {
        LatVec c = primitive(add(scale(neg[j], pos_val[i]),
                                 scale(pos[i], -neg_val[j])));
        if (is_zero(c) || !is_extreme(c)) continue;
        if (seen.insert(tight_signature(c)).second) next.push_back(std::move(c));
      }
    }
    rep.rays = std::move(next);
  }

  // Lineality steps may leave rays that are no longer extreme.
  std::vector<LatVec> extreme;
  std::set<std::vector<bool>> seen;
  for (auto& r : rep.rays) {
    if (is_zero(r) || !is_extreme(r)) continue;
    if (seen.insert(tight_signature(r)).second) extreme.push_back(std::move(r));
  }
  rep.rays = std::move(extreme);
  return rep;
}

}  // namespace dd

// ---------------------------------------------------------------------------
// RatCone

RatCone::RatCone(std::size_t rank, std::vector<LatVec> lineality,
                 std::vector<LatVec> rays, std::vector<LatVec> equations,
                 std::vector<LatVec> facets)
    : rank_(rank) {
  lineality_ = canonical_basis(lineality, rank);
  equations_ = canonical_basis(equations, rank);
  extreme_rays_ = canonical_generators(rays, lineality_);
  proper_facets_ = canonical_generators(facets, equations_);
}

RatCone RatCone::from_rays(std::size_t rank, std::span<const LatVec> rays) {
  check_lengths(rank, rays, "cone_from_rays");
  std::vector<LatVec> gens;
  for (const auto& r : rays) {
    if (!is_zero(r)) gens.push_back(r);
  }
  // H-representation = generators of the dual cone.
  dd::VRep dual = dd::h_to_v(rank, gens, {});
  // Irredundant V-representation from the H-representation.
  dd::VRep primal = dd::h_to_v(rank, dual.rays, dual.lineality);
  return RatCone(rank, std::move(primal.lineality), std::move(primal.rays),
                 std::move(dual.lineality), std::move(dual.rays));
}

RatCone RatCone::from_inequalities(std::size_t rank,
                                   std::span<const LatVec> inequalities,
                                   std::span<const LatVec> equations) {
  dd::VRep primal = dd::h_to_v(rank, inequalities, equations);
  dd::VRep dual = dd::h_to_v(rank, primal.rays, primal.lineality);
  return RatCone(rank, std::move(primal.lineality), std::move(primal.rays),
                 std::move(dual.lineality), std::move(dual.rays));
}

RatCone RatCone::zero(std::size_t rank) { return from_rays(rank, {}); }

RatCone RatCone::full(std::size_t rank) {
  return from_inequalities(rank, {}, {});
}

std::vector<LatVec> RatCone::rays() const {
  std::vector<LatVec> out = extreme_rays_;
  for (const auto& l : lineality_) {
    out.push_back(l);
    out.push_back(negate(l));
  }
  sort_unique(out);
  return out;
}

std::vector<LatVec> RatCone::facets() const {
  std::vector<LatVec> out = proper_facets_;
  for (const auto& e : equations_) {
    out.push_back(e);
    out.push_back(negate(e));
  }
  sort_unique(out);
  return out;
}

bool RatCone::contains(const LatVec& v, MembershipMode mode) const {
  if (v.size() != rank_) throw DimensionMismatch("membership: length mismatch");
  for (const auto& e : equations_) {
    if (dot(e, v) != 0) return false;
  }
  for (const auto& f : proper_facets_) {
    int s = sgn(dot(f, v));
    if (s < 0) return false;
    if (s == 0 && mode == MembershipMode::relative_interior) return false;
  }
  return true;
}

std::optional<LatVec> RatCone::violated_facet(const LatVec& v) const {
  for (const auto& f : facets()) {
    if (dot(f, v) < 0) return f;
  }
  return std::nullopt;
}

LatVec RatCone::interior_point() const {
  LatVec p = zero_vec(rank_);
  for (const auto& r : extreme_rays_) p = add(p, r);
  return primitive(std::move(p));
}

std::vector<RatCone> RatCone::facet_faces() const {
  std::vector<RatCone> out;
  for (const auto& f : proper_facets_) {
    std::vector<LatVec> gens;
    for (const auto& r : rays()) {
      if (dot(f, r) == 0) gens.push_back(r);
    }
    out.push_back(from_rays(rank_, gens));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RatCone> RatCone::all_faces() const {
  std::set<RatCone> found{*this};
  std::vector<RatCone> frontier{*this};
  while (!frontier.empty()) {
    std::vector<RatCone> next;
    for (const auto& c : frontier) {
      for (auto& f : c.facet_faces()) {
        if (found.insert(f).second) next.push_back(std::move(f));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

bool RatCone::is_face_of(const RatCone& other) const {
  if (rank_ != other.rank_) return false;
  if (*this == other) return true;
  for (const auto& r : rays()) {
    if (!other.contains(r)) return false;
  }
  // A subcone is a face iff some supporting normal of `other` cuts it out:
  // the sum of the facets vanishing on it must vanish on no other ray.
  LatVec support = zero_vec(rank_);
  for (const auto& f : other.proper_facets_) {
    bool vanishes = true;
    for (const auto& r : rays()) {
      if (dot(f, r) != 0) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) support = add(support, f);
  }
  RatCone face = [&] {
    std::vector<LatVec> gens;
    for (const auto& r : other.rays()) {
      if (dot(support, r) == 0) gens.push_back(r);
    }
    return from_rays(rank_, gens);
  }();
  return face == *this;
}

std::strong_ordering operator<=>(const RatCone& a, const RatCone& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  for (auto [x, y] : {std::pair{&a.extreme_rays_, &b.extreme_rays_},
                      std::pair{&a.lineality_, &b.lineality_},
                      std::pair{&a.proper_facets_, &b.proper_facets_},
                      std::pair{&a.equations_, &b.equations_}}) {
    int c = compare_list(*x, *y);
    if (c != 0) return c < 0 ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

RatCone dual_cone(const RatCone& c) {
  // Facets become generators and vice versa; the canonical constructor is a
  // pure relabeling here.
  return RatCone::from_rays(c.rank(), c.facets());
}

RatCone intersect(const RatCone& a, const RatCone& b) {
  if (a.rank() != b.rank()) throw DimensionMismatch("intersect: rank mismatch");
  std::vector<LatVec> ineq = a.proper_facets();
  ineq.insert(ineq.end(), b.proper_facets().begin(), b.proper_facets().end());
  std::vector<LatVec> eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return RatCone::from_inequalities(a.rank(), ineq, eq);
}

bool membership(const RatCone& c, const LatVec& v, MembershipMode mode) {
  return c.contains(v, mode);
}

std::vector<RatCone> arrangement_chambers(std::size_t rank,
                                          std::span<const LatVec> normals,
                                          const RatCone& restrict_to) {
  check_lengths(rank, normals, "arrangement_chambers");
  if (restrict_to.rank() != rank) {
    throw DimensionMismatch("arrangement_chambers: rank mismatch");
  }
  std::vector<RatCone> cells{restrict_to};
  for (const auto& n : normals) {
    if (is_zero(n)) continue;
    std::vector<RatCone> next;
    for (auto& c : cells) {
      bool has_pos = false, has_neg = false;
      for (const auto& r : c.rays()) {
        int s = sgn(dot(n, r));
        has_pos |= s > 0;
        has_neg |= s < 0;
      }
      if (!(has_pos && has_neg)) {
        next.push_back(std::move(c));
        continue;
      }
      std::vector<LatVec> eq = c.equations();
      for (const LatVec& side : {n, negate(n)}) {
        std::vector<LatVec> ineq = c.proper_facets();
        ineq.push_back(side);
        next.push_back(RatCone::from_inequalities(rank, ineq, eq));
      }
    }
    cells = std::move(next);
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

// ---------------------------------------------------------------------------
// Fan

Fan Fan::from_maximal(std::size_t rank, std::span<const RatCone> maximal) {
  std::set<RatCone> all;
  for (const auto& m : maximal) {
    if (m.rank() != rank) throw DimensionMismatch("Fan: rank mismatch");
    for (auto& f : m.all_faces()) all.insert(std::move(f));
  }
  Fan fan;
  fan.rank = rank;
  fan.cones.assign(all.begin(), all.end());
  std::stable_sort(fan.cones.begin(), fan.cones.end(),
                   [](const RatCone& a, const RatCone& b) {
                     return a.dim() < b.dim();
                   });
  for (std::size_t j = 0; j < fan.cones.size(); ++j) {
    for (auto& f : fan.cones[j].all_faces()) {
      if (f == fan.cones[j]) continue;
      if (auto i = fan.find(f)) fan.face_pairs.emplace_back(*i, j);
    }
  }
  std::sort(fan.face_pairs.begin(), fan.face_pairs.end());
  return fan;
}

std::vector<std::size_t> Fan::maximal_indices() const {
  std::vector<bool> is_face(cones.size(), false);
  for (auto [i, j] : face_pairs) is_face[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!is_face[i]) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> Fan::find(const RatCone& c) const {
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (cones[i] == c) return i;
  }
  return std::nullopt;
}

}  // namespace gitfan
