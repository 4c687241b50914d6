#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gitfan/arith.hpp"
#include "gitfan/groupdata.hpp"
#include "gitfan/polycone.hpp"
#include "gitfan/poly.hpp"
#include "gitfan/stability.hpp"

namespace gitfan {

/// The operator J_G / Delta_G: antisymmetrize over W, then divide exactly by
/// the discriminant. Zero when deg f < number of positive roots.
Poly reynolds_divided(const GroupData& gd, const Poly& f);

/// Equivariant class of the linear subspace of a component: the product of
/// the vanishing weights, with multiplicity.
Poly component_class(const WeightSystem& ws, const UnstableComponent& c);

/// Monomials t^a with 0 <= a_i < (1-based position of i in its block); a
/// basis of the polynomial ring over its W-invariants.
std::vector<Poly> invariant_module_basis(const GroupData& gd);

/// Presentation of the W-invariant ring modulo the image of the unstable
/// ideal.
///
/// The invariant ring is a polynomial ring in `symbols`: the elementary
/// symmetric functions c1..cn of each GL block (the Chern classes of its
/// standard representation), then one variable per torus factor. Ideal
/// generators are given both in t-variables and in these symbols; within
/// each degree they are reduced to an echelon basis.
struct InvariantPresentation {
  std::vector<std::string> symbols;
  std::vector<unsigned> degrees;
  std::vector<Poly> ideal_t;
  std::vector<Poly> ideal_chern;
  Variant variant = Variant::semistable;
  /// The presentation is that of the quotient (the chamber is properly
  /// stable); otherwise it describes the equivariant ring of the semistable
  /// locus.
  bool quotient = false;
  /// Every generator was checked to be fixed by the simple reflections.
  bool invariance_certified = false;
  /// dim V - dim G (clamped at zero).
  std::size_t dim_quotient = 0;
};

InvariantPresentation chow_presentation(const GroupData& gd,
                                        const WeightSystem& ws,
                                        const Chamber& chamber,
                                        Variant variant = Variant::properly_stable);

/// Rewrites a W-invariant polynomial in the elementary symmetric generators.
/// Throws InternalError when f is not invariant.
Poly to_elementary(const GroupData& gd, const Poly& f);

/// Elementary symmetric polynomial e_k of a block, in t-variables.
Poly elementary_symmetric(const GroupData& gd, std::size_t block, unsigned k);

/// Graded dimensions of the presented ring in degrees 0..dim_quotient.
std::vector<Integer> betti_numbers(const InvariantPresentation& pres);

struct PicardPresentation {
  std::size_t rank = 0;
  /// epsilon(lambda) for the codimension-one components, in X^*(G) coords.
  std::vector<LatVec> relations;
  /// Linear forms on X^*(G) (a basis of the annihilator of the relations)
  /// giving coordinates on the quotient space.
  std::vector<LatVec> quotient_basis;
  /// Closure of the ample cone in quotient coordinates; the ample cone is
  /// its interior.
  RatCone ample_cone;
  /// All components have orbit codimension >= 2.
  bool codim_ok = true;
};

/// Image in X^*(G) coordinates of a degree-one class of a component whose
/// orbit closure is a divisor.
LatVec divisor_relation(const GroupData& gd, const WeightSystem& ws,
                        const UnstableComponent& c);

PicardPresentation picard_and_ample(const GroupData& gd,
                                    const WeightSystem& ws,
                                    const Chamber& chamber);

}  // namespace gitfan
