#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gitfan/arith.hpp"

namespace gitfan {

enum class MembershipMode { boundary, relative_interior };

/// A closed convex rational polyhedral cone kept in canonical form, with both
/// the generator (V) and inequality (H) representations populated.
///
/// Canonical form:
///  - the lineality space is stored as the primitive RREF basis of L;
///    rays() lists +-v for each basis vector v;
///  - pointed generators are the extreme rays projected orthogonally onto
///    L^perp, primitive;
///  - the equations of span(C) are the primitive RREF basis of span(C)^perp;
///    facets() lists +-e for each of them;
///  - proper facet normals are projected onto span(C), primitive.
/// With this normalization two cones are equal as sets iff they compare
/// equal, and dual() is a swap of the two sides.
class RatCone {
 public:
  RatCone() = default;

  /// Double-description conversion. Zero generators are ignored.
  static RatCone from_rays(std::size_t rank, std::span<const LatVec> rays);

  /// {x : <n, x> >= 0 for n in inequalities, <e, x> = 0 for e in equations}.
  static RatCone from_inequalities(std::size_t rank,
                                   std::span<const LatVec> inequalities,
                                   std::span<const LatVec> equations = {});

  static RatCone zero(std::size_t rank);
  static RatCone full(std::size_t rank);

  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return rank_ - equations_.size(); }
  std::size_t lineality_dim() const { return lineality_.size(); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }

  /// All generators: extreme rays modulo lineality and +-lineality basis,
  /// sorted lexicographically.
  std::vector<LatVec> rays() const;
  /// All inequality normals <n, x> >= 0: proper facets and +-equations,
  /// sorted lexicographically.
  std::vector<LatVec> facets() const;

  const std::vector<LatVec>& extreme_rays() const { return extreme_rays_; }
  const std::vector<LatVec>& lineality_basis() const { return lineality_; }
  const std::vector<LatVec>& proper_facets() const { return proper_facets_; }
  const std::vector<LatVec>& equations() const { return equations_; }

  bool contains(const LatVec& v,
                MembershipMode mode = MembershipMode::boundary) const;

  /// Farkas witness: a facet normal n with <n, v> < 0, or nullopt when v
  /// lies in the cone. The first violated normal in facets() order.
  std::optional<LatVec> violated_facet(const LatVec& v) const;

  /// A primitive lattice point in the relative interior.
  LatVec interior_point() const;

  /// Faces cut out by single proper facets (codimension one faces).
  std::vector<RatCone> facet_faces() const;
  /// All faces including the cone itself and its lineality space.
  std::vector<RatCone> all_faces() const;
  bool is_face_of(const RatCone& other) const;

  friend bool operator==(const RatCone&, const RatCone&) = default;
  friend std::strong_ordering operator<=>(const RatCone& a, const RatCone& b);

 private:
  RatCone(std::size_t rank, std::vector<LatVec> lineality,
          std::vector<LatVec> rays, std::vector<LatVec> equations,
          std::vector<LatVec> facets);

  std::size_t rank_ = 0;
  std::vector<LatVec> lineality_;
  std::vector<LatVec> extreme_rays_;
  std::vector<LatVec> equations_;
  std::vector<LatVec> proper_facets_;
};

RatCone dual_cone(const RatCone& c);
RatCone intersect(const RatCone& a, const RatCone& b);
bool membership(const RatCone& c, const LatVec& v, MembershipMode mode);

/// Closed cells of the arrangement of the linear hyperplanes n^perp that are
/// full-dimensional relative to `restrict_to`. Cells have pairwise disjoint
/// relative interiors and cover `restrict_to`; sorted canonically.
std::vector<RatCone> arrangement_chambers(std::size_t rank,
                                          std::span<const LatVec> normals,
                                          const RatCone& restrict_to);

/// A polyhedral fan closed under taking faces. `face_pairs` holds (i, j) with
/// cones[i] a proper face of cones[j]. Cones are sorted by dimension, then
/// canonically.
struct Fan {
  std::size_t rank = 0;
  std::vector<RatCone> cones;
  std::vector<std::pair<std::size_t, std::size_t>> face_pairs;

  /// Closure under faces of the given cones.
  static Fan from_maximal(std::size_t rank, std::span<const RatCone> maximal);

  std::vector<std::size_t> maximal_indices() const;
  std::optional<std::size_t> find(const RatCone& c) const;
};

namespace dd {

/// Generators of {x : A x >= 0, E x = 0}: a lineality basis and the extreme
/// rays modulo lineality (not canonicalized).
struct VRep {
  std::vector<LatVec> lineality;
  std::vector<LatVec> rays;
};

VRep h_to_v(std::size_t rank, std::span<const LatVec> inequalities,
            std::span<const LatVec> equations);

}  // namespace dd

}  // namespace gitfan
