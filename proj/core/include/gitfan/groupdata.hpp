#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gitfan/arith.hpp"
#include "gitfan/poly.hpp"

namespace gitfan {

/// G = GL(n_1) x ... x GL(n_s) x (G_m)^torus_rank. Maximal-torus coordinates
/// are ordered block by block, torus factors last.
struct GroupSpec {
  std::vector<unsigned> gl_blocks;
  unsigned torus_rank = 0;

  std::size_t rank() const;
  bool is_torus() const;
};

enum class SummandKind { torus_char, std_rep, dual_std, hom };

/// One summand of the representation, repeated `multiplicity` times.
///  - torus_char: the one-dimensional representation with weight `weight`
///    (length rank, constant on each GL block);
///  - std_rep / dual_std: the (dual) standard representation of `block`;
///  - hom: Hom(K^{n_src}, K^{n_dst}).
/// `twist` (empty or of length torus_rank) adds a character of the torus
/// factors to every weight of the summand.
struct Summand {
  SummandKind kind = SummandKind::torus_char;
  LatVec weight;
  std::size_t block = 0;
  std::size_t src = 0;
  std::size_t dst = 0;
  LatVec twist;
  unsigned multiplicity = 1;
};

struct ModuleSpec {
  std::vector<Summand> summands;
};

/// Character of G, given in the basis of X^*(G) (one determinant per GL
/// block, then the torus factors) together with its image in X^*(T).
struct Character {
  LatVec coords;
  LatVec embedded;
};

/// Cocharacter (one-parameter subgroup) of T.
struct Cocharacter {
  LatVec coords;
  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
};

/// Positive root e_a - e_b (a < b in the same block).
struct Root {
  std::size_t block;
  std::size_t a;
  std::size_t b;
  LatVec vec;
};

/// Weyl group element: a block-preserving permutation of the torus
/// coordinates (perm[i] = image of coordinate i) with its sign.
struct WeylElement {
  std::vector<std::size_t> perm;
  int sign = 1;
};

/// A coordinate of the representation space.
struct Coordinate {
  std::size_t summand;
  std::size_t copy;
  std::size_t q;  // row (std: index; hom: dst index)
  std::size_t p;  // column (hom: src index; otherwise 0)
  std::size_t column;
};

/// A distinct T-weight with the number of coordinates carrying it.
struct WeightColumn {
  LatVec weight;
  std::size_t multiplicity = 0;
  std::vector<std::size_t> coordinates;
};

class GroupData;

/// Sorted column indices.
using Support = std::vector<std::size_t>;

class WeightSystem {
 public:
  std::size_t rank() const { return rank_; }
  std::size_t num_columns() const { return columns_.size(); }
  /// dim V = sum of multiplicities.
  std::size_t dim() const { return coordinates_.size(); }
  const std::vector<WeightColumn>& columns() const { return columns_; }
  const WeightColumn& column(std::size_t i) const { return columns_.at(i); }
  const std::vector<Coordinate>& coordinates() const { return coordinates_; }
  const ModuleSpec& module() const { return module_; }

  std::vector<LatVec> weights(const Support& s) const;
  std::vector<LatVec> all_weights() const;
  std::optional<std::size_t> column_of(const LatVec& w) const;
  std::size_t support_dim(const Support& s) const;
  Support full_support() const;
  /// Columns not in s.
  Support complement(const Support& s) const;
  /// Index of entry (q, p) of copy `copy` of a summand (p = 0 unless hom).
  std::size_t coordinate_index(std::size_t summand, std::size_t copy,
                               std::size_t q, std::size_t p) const;

 private:
  friend class GroupData;
  friend std::pair<GroupData, WeightSystem> build_group(const GroupSpec&,
                                                        const ModuleSpec&);

  std::size_t rank_ = 0;
  std::vector<WeightColumn> columns_;
  std::vector<Coordinate> coordinates_;
  std::map<LatVec, std::size_t> index_;
  ModuleSpec module_;
  struct Layout {
    std::size_t start;
    std::size_t width;  // coordinates per copy
    std::size_t row_stride;
  };
  std::vector<Layout> layout_;
};

class GroupData {
 public:
  static constexpr std::size_t kMaterializeLimit = 40320;

  const GroupSpec& spec() const { return spec_; }
  std::size_t rank() const { return rank_; }
  /// Dimension of X^*(G): number of GL blocks plus torus rank.
  std::size_t char_rank() const { return char_basis_.size(); }
  std::size_t dim() const { return rank_ + 2 * positive_roots_.size(); }
  bool is_torus() const { return positive_roots_.empty(); }

  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Integer& weyl_order() const { return weyl_order_; }
  const Poly& discriminant() const { return discriminant_; }
  /// Rows: the embedded images of the X^*(G) basis in X^*(T).
  const std::vector<LatVec>& char_basis() const { return char_basis_; }

  std::size_t block_of(std::size_t coord) const { return block_of_.at(coord); }
  std::size_t block_offset(std::size_t block) const;

  /// Materialized when |W| <= kMaterializeLimit; otherwise empty.
  const std::vector<WeylElement>& weyl_elements() const { return weyl_; }
  /// Streams all Weyl elements in a fixed order.
  void for_each_weyl(const std::function<void(const WeylElement&)>& fn) const;
  /// Adjacent transpositions within blocks; they generate W.
  std::vector<WeylElement> simple_reflections() const;

  LatVec apply(const WeylElement& w, const LatVec& weight) const;
  Poly apply(const WeylElement& w, const Poly& f) const;

  /// Image of X^*(G) coordinates in X^*(T).
  LatVec character_embed(const LatVec& coords) const;
  Character character(const LatVec& coords) const;
  /// Inverse of character_embed on block-constant vectors.
  std::optional<LatVec> character_coords(const LatVec& embedded) const;

 private:
  friend std::pair<GroupData, WeightSystem> build_group(const GroupSpec&,
                                                        const ModuleSpec&);
  GroupSpec spec_;
  std::size_t rank_ = 0;
  std::vector<std::size_t> block_of_;
  std::vector<Root> positive_roots_;
  Integer weyl_order_ = 1;
  Poly discriminant_;
  std::vector<LatVec> char_basis_;
  std::vector<WeylElement> weyl_;
};

/// Expands the module into its T-weight system and builds the root and Weyl
/// data. Throws InvalidInput for malformed specs and for representations
/// whose kernel is not finite (weights not spanning X^*(T)).
std::pair<GroupData, WeightSystem> build_group(const GroupSpec& spec,
                                               const ModuleSpec& module);

/// Convenience: a split torus of the given rank acting with these weights.
std::pair<GroupData, WeightSystem> torus_action(
    const std::vector<LatVec>& weights, const std::vector<unsigned>& mult = {});

/// Image of a coordinate under the root vector E_{a b}, as a sparse list of
/// (coordinate, coefficient).
std::vector<std::pair<std::size_t, Integer>> root_action(
    const GroupData& gd, const WeightSystem& ws, std::size_t a, std::size_t b,
    std::size_t coordinate);

/// Permutation of weight columns induced by a Weyl element.
std::vector<std::size_t> column_permutation(const GroupData& gd,
                                            const WeightSystem& ws,
                                            const WeylElement& w);

/// The root vector E_{a b} maps the coordinate subspace spanned by the
/// columns in `support` into itself.
bool root_preserves(const GroupData& gd, const WeightSystem& ws,
                    std::size_t a, std::size_t b, const Support& support);

struct StabilizerDims {
  /// dim P(lambda).
  std::size_t dim_parabolic;
  /// dim of the Lie algebra of Stab_G(E).
  std::size_t dim_stab_lie;
  /// codim_V G.E, from the generic rank of g x E -> V.
  std::size_t codim_orbit;
};

/// Stabilizer data for the coordinate subspace E spanned by the columns in
/// `support`.
StabilizerDims stabilizer_dims(const GroupData& gd, const WeightSystem& ws,
                               const Cocharacter& lambda,
                               const Support& support);

}  // namespace gitfan
