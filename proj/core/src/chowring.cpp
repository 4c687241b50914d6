#include "gitfan/chowring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gitfan/linalg.hpp"

namespace gitfan {
namespace {

// 1-based position of each t-variable inside its GL block; 0 for torus
// factors.
std::vector<unsigned> block_positions(const GroupData& gd) {
  std::vector<unsigned> pos(gd.rank(), 0);
  const auto& blocks = gd.spec().gl_blocks;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const std::size_t off = gd.block_offset(j);
    for (unsigned i = 0; i < blocks[j]; ++i) pos[off + i] = i + 1;
  }
  return pos;
}

// Within each degree, replaces the generators by the reduced echelon basis of
// their span, each row scaled to primitive integer coefficients.
std::vector<Poly> echelon_by_degree(const std::vector<Poly>& gens,
                                    std::size_t nvars) {
  std::map<int, std::vector<const Poly*>> by_degree;
  for (const auto& g : gens) {
    for (int d = 0; d <= g.degree(); ++d) {
      Poly h = g.homogeneous_part(static_cast<unsigned>(d));
      if (!h.is_zero() && h != g) {
        throw InternalError("ideal generator is not homogeneous");
      }
    }
    by_degree[g.degree()].push_back(&g);
  }
  std::vector<Poly> out;
  for (const auto& [d, polys] : by_degree) {
    std::set<Exponent, std::greater<>> monos;
    for (const Poly* p : polys) {
      for (const auto& [e, c] : p->terms()) monos.insert(e);
    }
    std::vector<Exponent> cols(monos.begin(), monos.end());
    std::map<Exponent, std::size_t> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
    std::vector<linalg::RatRow> rows;
    for (const Poly* p : polys) {
      linalg::RatRow row(cols.size(), Rational(0));
      for (const auto& [e, c] : p->terms()) row[index[e]] = c;
      rows.push_back(std::move(row));
    }
    auto ech = linalg::rref(std::move(rows), cols.size());
    for (const auto& row : ech.rows) {
      const LatVec ints = primitive(row);
      Poly p(nvars);
      for (std::size_t i = 0; i < cols.size(); ++i) {
        p.add_term(cols[i], Rational(ints[i]));
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

// All exponent vectors of the given weighted degree.
std::vector<Exponent> weighted_monomials(const std::vector<unsigned>& weights,
                                         unsigned degree) {
  std::vector<Exponent> out;
  Exponent e(weights.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == weights.size()) {
      if (left == 0) out.push_back(e);
      return;
    }
    for (unsigned k = 0; k * weights[i] <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k * weights[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

unsigned weighted_degree(const Exponent& e, const std::vector<unsigned>& w) {
  unsigned d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * w[i];
  return d;
}

}  // namespace

Poly reynolds_divided(const GroupData& gd, const Poly& f) {
  const std::size_t nroots = gd.positive_roots().size();
  if (nroots == 0) return f;
  if (f.degree() < static_cast<int>(nroots)) return Poly(f.nvars());
  Poly j(f.nvars());
  gd.for_each_weyl([&](const WeylElement& w) {
    Poly g = gd.apply(w, f);
    if (w.sign < 0) {
      j -= g;
    } else {
      j += g;
    }
  });
  return j.divide_exact(gd.discriminant());
}

Poly component_class(const WeightSystem& ws, const UnstableComponent& c) {
  Poly out = Poly::constant(ws.rank(), 1);
  for (auto i : c.vanishing) {
    const auto& col = ws.column(i);
    out = out * Poly::linear_form(col.weight).pow(
                    static_cast<unsigned>(col.multiplicity));
  }
  return out;
}

std::vector<Poly> invariant_module_basis(const GroupData& gd) {
  const std::vector<unsigned> pos = block_positions(gd);
  std::vector<Poly> out;
  Exponent e(gd.rank(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == e.size()) {
      out.push_back(Poly::monomial(e));
      return;
    }
    for (unsigned a = 0; a < std::max(pos[i], 1u); ++a) {
      e[i] = a;
      self(self, i + 1);
    }
    e[i] = 0;
  };
  rec(rec, 0);
  return out;
}

Poly elementary_symmetric(const GroupData& gd, std::size_t block,
                          unsigned k) {
  const unsigned n = gd.spec().gl_blocks.at(block);
  const std::size_t off = gd.block_offset(block);
  Poly out(gd.rank());
  if (k > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Exponent e(gd.rank(), 0);
    for (unsigned i = 0; i < n; ++i) {
      if (pick[i]) e[off + i] = 1;
    }
    out.add_term(e, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Poly to_elementary(const GroupData& gd, const Poly& f) {
  const std::size_t rank = gd.rank();
  const auto& blocks = gd.spec().gl_blocks;
  std::vector<std::vector<Poly>> elem(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    for (unsigned k = 1; k <= blocks[j]; ++k) {
      elem[j].push_back(elementary_symmetric(gd, j, k));
    }
  }
  Poly rest = f;
  Poly out(rank);
  while (!rest.is_zero()) {
    const auto [lead, coef] = rest.leading_term();
    Exponent sym(rank, 0);
    Poly term = Poly::constant(rank, coef);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      const std::size_t off = gd.block_offset(j);
      const unsigned n = blocks[j];
      for (unsigned k = 0; k < n; ++k) {
        const unsigned next = k + 1 < n ? lead[off + k + 1] : 0;
        if (lead[off + k] < next) {
          throw InternalError("polynomial is not Weyl-invariant");
        }
        const unsigned d = lead[off + k] - next;
        sym[off + k] = d;
        if (d > 0) term = term * elem[j][k].pow(d);
      }
    }
    for (std::size_t i = rank - gd.spec().torus_rank; i < rank; ++i) {
      sym[i] = lead[i];
      if (lead[i] > 0) term = term * Poly::variable(rank, i).pow(lead[i]);
    }
    out.add_term(sym, coef);
    rest -= term;
  }
  return out;
}

InvariantPresentation chow_presentation(const GroupData& gd,
                                        const WeightSystem& ws,
                                        const Chamber& chamber,
                                        Variant variant) {
  InvariantPresentation pres;
  pres.variant = variant;
  pres.quotient = chamber.properly_stable == Tristate::yes;
  const long qdim = static_cast<long>(ws.dim()) - static_cast<long>(gd.dim());
  pres.dim_quotient = qdim > 0 ? static_cast<std::size_t>(qdim) : 0;

  const auto& blocks = gd.spec().gl_blocks;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    for (unsigned k = 1; k <= blocks[j]; ++k) {
      pres.symbols.push_back("c" + std::to_string(k) + "(V" +
                             std::to_string(j) + ")");
      pres.degrees.push_back(k);
    }
  }
  for (unsigned i = 0; i < gd.spec().torus_rank; ++i) {
    pres.symbols.push_back("u" + std::to_string(i + 1));
    pres.degrees.push_back(1);
  }

  const std::vector<UnstableComponent> comps =
      variant == Variant::semistable
          ? chamber.components
          : unstable_components(gd, ws, chamber.representative, variant);
  const std::vector<Poly> basis = invariant_module_basis(gd);
  std::vector<Poly> gens;
  for (const auto& c : comps) {
    const Poly cls = component_class(ws, c);
    for (const auto& b : basis) {
      Poly g = reynolds_divided(gd, cls * b);
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
  }
  pres.ideal_t = echelon_by_degree(gens, gd.rank());

  const auto reflections = gd.simple_reflections();
  pres.invariance_certified = std::all_of(
      pres.ideal_t.begin(), pres.ideal_t.end(), [&](const Poly& g) {
        return std::all_of(reflections.begin(), reflections.end(),
                           [&](const WeylElement& s) {
                             return gd.apply(s, g) == g;
                           });
      });
  if (!pres.invariance_certified) {
    throw InternalError("ideal generator is not Weyl-invariant");
  }
  for (const auto& g : pres.ideal_t) {
    pres.ideal_chern.push_back(to_elementary(gd, g));
  }
  return pres;
}

std::vector<Integer> betti_numbers(const InvariantPresentation& pres) {
  const std::vector<unsigned>& w = pres.degrees;
  std::vector<Integer> out;
  for (unsigned d = 0; d <= pres.dim_quotient; ++d) {
    const std::vector<Exponent> monos = weighted_monomials(w, d);
    std::map<Exponent, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
    std::vector<linalg::RatRow> rows;
    for (const auto& g : pres.ideal_chern) {
      if (g.is_zero()) continue;
      const unsigned gdeg = weighted_degree(g.terms().begin()->first, w);
      if (gdeg > d) continue;
      for (const auto& m : weighted_monomials(w, d - gdeg)) {
        linalg::RatRow row(monos.size(), Rational(0));
        for (const auto& [e, c] : g.terms()) {
          Exponent prod = e;
          for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += m[i];
          row[index.at(prod)] += c;
        }
        rows.push_back(std::move(row));
      }
    }
    const std::size_t r =
        rows.empty() ? 0 : linalg::rref(std::move(rows), monos.size()).rows.size();
    out.emplace_back(static_cast<unsigned long>(monos.size() - r));
  }
  return out;
}

LatVec divisor_relation(const GroupData& gd, const WeightSystem& ws,
                        const UnstableComponent& c) {
  const std::size_t rank = gd.rank();
  // Levi part of the stabilizer: roots whose negatives also preserve E.
  std::vector<std::size_t> parent(rank);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& r : gd.positive_roots()) {
    if (root_preserves(gd, ws, r.a, r.b, c.support) &&
        root_preserves(gd, ws, r.b, r.a, c.support)) {
      const std::size_t x = find(r.a), y = find(r.b);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> parts;
  for (std::size_t i = 0; i < rank; ++i) parts[find(i)].push_back(i);
  Poly delta_l = Poly::constant(rank, 1);
  Integer order_l = 1;
  for (const auto& [root, members] : parts) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      order_l *= Integer(i + 1);
      for (std::size_t k = i + 1; k < members.size(); ++k) {
        LatVec v = zero_vec(rank);
        v[members[i]] = 1;
        v[members[k]] = -1;
        delta_l = delta_l * Poly::linear_form(v);
      }
    }
  }
  const Poly eps = reynolds_divided(gd, delta_l * component_class(ws, c)) *
                   Rational(Integer(1), order_l);
  if (eps.is_zero()) return zero_vec(gd.char_rank());
  if (eps.degree() != 1 || !eps.is_homogeneous()) {
    throw InternalError("divisor class is not of degree one");
  }
  std::vector<Rational> coeffs(rank, Rational(0));
  for (const auto& [e, q] : eps.terms()) {
    for (std::size_t i = 0; i < rank; ++i) {
      if (e[i] == 1) coeffs[i] = q;
    }
  }
  const auto coords = gd.character_coords(primitive(coeffs));
  if (!coords) throw InternalError("divisor class is not a character of G");
  return primitive(*coords);
}

PicardPresentation picard_and_ample(const GroupData& gd,
                                    const WeightSystem& ws,
                                    const Chamber& chamber) {
  PicardPresentation out;
  const std::size_t m = gd.char_rank();
  std::set<LatVec> rels;
  for (const auto& c : chamber.components) {
    if (c.codim_orbit < 2) out.codim_ok = false;
    if (c.codim_orbit != 1) continue;
    LatVec r = divisor_relation(gd, ws, c);
    if (!is_zero(r)) rels.insert(sign_normalized(std::move(r)));
  }
  out.relations.assign(rels.begin(), rels.end());
  out.quotient_basis = out.relations.empty()
                           ? std::vector<LatVec>{}
                           : linalg::nullspace(out.relations, m);
  if (out.relations.empty()) {
    for (std::size_t i = 0; i < m; ++i) out.quotient_basis.push_back(unit_vec(m, i));
  }
  out.rank = out.quotient_basis.size();
  std::vector<LatVec> image;
  for (const auto& r : chamber.cone.rays()) {
    LatVec p;
    for (const auto& q : out.quotient_basis) p.push_back(dot(q, r));
    image.push_back(std::move(p));
  }
  out.ample_cone = RatCone::from_rays(out.rank, image);
  return out;
}

}  // namespace gitfan
