#include "gitfan/groupdata.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gitfan/linalg.hpp"

namespace gitfan {

std::size_t GroupSpec::rank() const {
  return std::accumulate(gl_blocks.begin(), gl_blocks.end(), std::size_t{0}) +
         torus_rank;
}

bool GroupSpec::is_torus() const {
  return std::all_of(gl_blocks.begin(), gl_blocks.end(),
                     [](unsigned n) { return n <= 1; });
}

// ---------------------------------------------------------------------------
// WeightSystem

std::vector<LatVec> WeightSystem::weights(const Support& s) const {
  std::vector<LatVec> out;
  out.reserve(s.size());
  for (auto i : s) out.push_back(columns_.at(i).weight);
  return out;
}

std::vector<LatVec> WeightSystem::all_weights() const {
  return weights(full_support());
}

std::optional<std::size_t> WeightSystem::column_of(const LatVec& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightSystem::support_dim(const Support& s) const {
  std::size_t d = 0;
  for (auto i : s) d += columns_.at(i).multiplicity;
  return d;
}

Support WeightSystem::full_support() const {
  Support s(columns_.size());
  std::iota(s.begin(), s.end(), std::size_t{0});
  return s;
}

Support WeightSystem::complement(const Support& s) const {
  std::vector<bool> in(columns_.size(), false);
  for (auto i : s) in.at(i) = true;
  Support out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

std::size_t WeightSystem::coordinate_index(std::size_t summand,
                                           std::size_t copy, std::size_t q,
                                           std::size_t p) const {
  const Layout& l = layout_.at(summand);
  return l.start + copy * l.width + q * l.row_stride + p;
}

// ---------------------------------------------------------------------------
// GroupData

std::size_t GroupData::block_offset(std::size_t block) const {
  std::size_t off = 0;
  for (std::size_t j = 0; j < block; ++j) off += spec_.gl_blocks.at(j);
  return off;
}

void GroupData::for_each_weyl(
    const std::function<void(const WeylElement&)>& fn) const {
  if (!weyl_.empty()) {
    for (const auto& w : weyl_) fn(w);
    return;
  }
  // Odometer over the per-block permutations, each advanced with
  // next_permutation; the sign is recomputed from the permutation.
  const auto& blocks = spec_.gl_blocks;
  std::vector<std::vector<std::size_t>> local(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    local[j].resize(blocks[j]);
    std::iota(local[j].begin(), local[j].end(), std::size_t{0});
  }
  auto perm_sign = [](const std::vector<std::size_t>& p) {
    int s = 1;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t k = i; !seen[k]; k = p[k]) {
        seen[k] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  };
  while (true) {
    WeylElement w;
    w.perm.resize(rank_);
    std::iota(w.perm.begin(), w.perm.end(), std::size_t{0});
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      const std::size_t off = block_offset(j);
      for (std::size_t i = 0; i < blocks[j]; ++i) {
        w.perm[off + i] = off + local[j][i];
      }
      w.sign *= perm_sign(local[j]);
    }
    fn(w);
    std::size_t j = 0;
    for (; j < blocks.size(); ++j) {
      if (std::next_permutation(local[j].begin(), local[j].end())) break;
    }
    if (j == blocks.size()) break;
  }
}

std::vector<WeylElement> GroupData::simple_reflections() const {
  std::vector<WeylElement> out;
  for (std::size_t j = 0; j < spec_.gl_blocks.size(); ++j) {
    const std::size_t off = block_offset(j);
    for (std::size_t i = 0; i + 1 < spec_.gl_blocks[j]; ++i) {
      WeylElement w;
      w.perm.resize(rank_);
      std::iota(w.perm.begin(), w.perm.end(), std::size_t{0});
      std::swap(w.perm[off + i], w.perm[off + i + 1]);
      w.sign = -1;
      out.push_back(std::move(w));
    }
  }
  return out;
}

LatVec GroupData::apply(const WeylElement& w, const LatVec& weight) const {
  LatVec out(weight.size());
  for (std::size_t i = 0; i < weight.size(); ++i) out[w.perm[i]] = weight[i];
  return out;
}

Poly GroupData::apply(const WeylElement& w, const Poly& f) const {
  return f.permuted(w.perm);
}

LatVec GroupData::character_embed(const LatVec& coords) const {
  if (coords.size() != char_basis_.size()) {
    throw DimensionMismatch("character has " + std::to_string(coords.size()) +
                            " coordinates, expected " +
                            std::to_string(char_basis_.size()));
  }
  LatVec out = zero_vec(rank_);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    out = add(out, scale(char_basis_[k], coords[k]));
  }
  return out;
}

Character GroupData::character(const LatVec& coords) const {
  return Character{coords, character_embed(coords)};
}

std::optional<LatVec> GroupData::character_coords(const LatVec& embedded) const {
  if (embedded.size() != rank_) return std::nullopt;
  LatVec coords;
  for (std::size_t j = 0; j < spec_.gl_blocks.size(); ++j) {
    const std::size_t off = block_offset(j);
    for (std::size_t i = 1; i < spec_.gl_blocks[j]; ++i) {
      if (embedded[off + i] != embedded[off]) return std::nullopt;
    }
    coords.push_back(embedded[off]);
  }
  for (std::size_t t = rank_ - spec_.torus_rank; t < rank_; ++t) {
    coords.push_back(embedded[t]);
  }
  return coords;
}

// ---------------------------------------------------------------------------
// build_group

namespace {

LatVec embed_twist(const GroupSpec& spec, const LatVec& twist) {
  const std::size_t rank = spec.rank();
  LatVec out = zero_vec(rank);
  if (twist.empty()) return out;
  if (twist.size() != spec.torus_rank) {
    throw InvalidInput("twist has length " + std::to_string(twist.size()) +
                       ", expected torus rank " +
                       std::to_string(spec.torus_rank));
  }
  for (std::size_t t = 0; t < twist.size(); ++t) {
    out[rank - spec.torus_rank + t] = twist[t];
  }
  return out;
}

std::size_t summand_width(const GroupSpec& spec, const Summand& s) {
  switch (s.kind) {
    case SummandKind::torus_char:
      return 1;
    case SummandKind::std_rep:
    case SummandKind::dual_std:
      return spec.gl_blocks.at(s.block);
    case SummandKind::hom:
      return std::size_t{spec.gl_blocks.at(s.src)} * spec.gl_blocks.at(s.dst);
  }
  return 0;
}

void validate_summand(const GroupSpec& spec, const Summand& s, std::size_t idx) {
  const std::string where = "summand " + std::to_string(idx) + ": ";
  const std::size_t nblocks = spec.gl_blocks.size();
  if (s.multiplicity < 1) throw InvalidInput(where + "multiplicity must be >= 1");
  switch (s.kind) {
    case SummandKind::torus_char:
      if (s.weight.size() != spec.rank()) {
        throw InvalidInput(where + "weight has length " +
                           std::to_string(s.weight.size()) + ", expected " +
                           std::to_string(spec.rank()));
      }
      break;
    case SummandKind::std_rep:
    case SummandKind::dual_std:
      if (s.block >= nblocks) throw InvalidInput(where + "block out of range");
      break;
    case SummandKind::hom:
      if (s.src >= nblocks || s.dst >= nblocks) {
        throw InvalidInput(where + "src/dst block out of range");
      }
      break;
  }
  (void)embed_twist(spec, s.twist);
}

}  // namespace

std::pair<GroupData, WeightSystem> build_group(const GroupSpec& spec,
                                               const ModuleSpec& module) {
  const std::size_t rank = spec.rank();
  if (rank == 0) throw InvalidInput("group rank must be at least 1");
  for (auto n : spec.gl_blocks) {
    if (n == 0) throw InvalidInput("GL block sizes must be positive");
  }

  GroupData gd;
  gd.spec_ = spec;
  gd.rank_ = rank;
  gd.block_of_.assign(rank, spec.gl_blocks.size());  // torus coords: past-end
  gd.discriminant_ = Poly::constant(rank, 1);
  for (std::size_t j = 0; j < spec.gl_blocks.size(); ++j) {
    const std::size_t off = gd.block_offset(j);
    const unsigned n = spec.gl_blocks[j];
    LatVec det = zero_vec(rank);
    for (std::size_t i = 0; i < n; ++i) {
      gd.block_of_[off + i] = j;
      det[off + i] = 1;
      gd.weyl_order_ *= Integer(i + 1);
    }
    gd.char_basis_.push_back(std::move(det));
    for (std::size_t a = off; a < off + n; ++a) {
      for (std::size_t b = a + 1; b < off + n; ++b) {
        LatVec v = zero_vec(rank);
        v[a] = 1;
        v[b] = -1;
        gd.discriminant_ = gd.discriminant_ * Poly::linear_form(v);
        gd.positive_roots_.push_back(Root{j, a, b, std::move(v)});
      }
    }
  }
  for (std::size_t t = rank - spec.torus_rank; t < rank; ++t) {
    gd.char_basis_.push_back(unit_vec(rank, t));
  }
  if (gd.weyl_order_ <= Integer(GroupData::kMaterializeLimit)) {
    std::vector<WeylElement> all;
    gd.for_each_weyl([&](const WeylElement& w) { all.push_back(w); });
    gd.weyl_ = std::move(all);
  }

  WeightSystem ws;
  ws.rank_ = rank;
  ws.module_ = module;
  auto add_coord = [&](const LatVec& weight, Coordinate c) {
    auto [it, inserted] = ws.index_.try_emplace(weight, ws.columns_.size());
    if (inserted) ws.columns_.push_back(WeightColumn{weight, 0, {}});
    c.column = it->second;
    auto& col = ws.columns_[it->second];
    col.multiplicity += 1;
    col.coordinates.push_back(ws.coordinates_.size());
    ws.coordinates_.push_back(c);
  };

  for (std::size_t si = 0; si < module.summands.size(); ++si) {
    const Summand& s = module.summands[si];
    validate_summand(spec, s, si);
    const LatVec twist = embed_twist(spec, s.twist);
    ws.layout_.push_back(WeightSystem::Layout{
        ws.coordinates_.size(), summand_width(spec, s),
        s.kind == SummandKind::hom ? std::size_t{spec.gl_blocks[s.src]} : 1});
    for (std::size_t copy = 0; copy < s.multiplicity; ++copy) {
      switch (s.kind) {
        case SummandKind::torus_char: {
          if (!gd.character_coords(s.weight)) {
            throw InvalidInput("summand " + std::to_string(si) +
                               ": torus character must be constant on GL "
                               "blocks");
          }
          add_coord(add(s.weight, twist), Coordinate{si, copy, 0, 0, 0});
          break;
        }
        case SummandKind::std_rep:
        case SummandKind::dual_std: {
          const std::size_t off = gd.block_offset(s.block);
          const int sign = s.kind == SummandKind::std_rep ? 1 : -1;
          for (std::size_t i = 0; i < spec.gl_blocks[s.block]; ++i) {
            LatVec w = twist;
            w[off + i] += sign;
            add_coord(w, Coordinate{si, copy, i, 0, 0});
          }
          break;
        }
        case SummandKind::hom: {
          const std::size_t so = gd.block_offset(s.src);
          const std::size_t dof = gd.block_offset(s.dst);
          for (std::size_t q = 0; q < spec.gl_blocks[s.dst]; ++q) {
            for (std::size_t p = 0; p < spec.gl_blocks[s.src]; ++p) {
              LatVec w = twist;
              w[dof + q] += 1;
              w[so + p] -= 1;
              add_coord(w, Coordinate{si, copy, q, p, 0});
            }
          }
          break;
        }
      }
    }
  }

  if (ws.coordinates_.empty()) throw InvalidInput("module is empty");
  const std::size_t r = linalg::rank(ws.all_weights(), rank);
  if (r != rank) {
    throw InvalidInput("representation kernel is not finite: weights span "
                       "rank " + std::to_string(r) + " of " +
                       std::to_string(rank) + " (defect " +
                       std::to_string(rank - r) + ")");
  }
  return {std::move(gd), std::move(ws)};
}

std::pair<GroupData, WeightSystem> torus_action(
    const std::vector<LatVec>& weights, const std::vector<unsigned>& mult) {
  if (weights.empty()) throw InvalidInput("no weights");
  if (!mult.empty() && mult.size() != weights.size()) {
    throw InvalidInput("multiplicities do not match weights");
  }
  GroupSpec spec{{}, static_cast<unsigned>(weights.front().size())};
  ModuleSpec module;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Summand s;
    s.kind = SummandKind::torus_char;
    s.weight = weights[i];
    s.multiplicity = mult.empty() ? 1 : mult[i];
    module.summands.push_back(std::move(s));
  }
  return build_group(spec, module);
}

// ---------------------------------------------------------------------------
// Root action and stabilizers

std::vector<std::pair<std::size_t, Integer>> root_action(
    const GroupData& gd, const WeightSystem& ws, std::size_t a, std::size_t b,
    std::size_t coordinate) {
  const std::size_t block = gd.block_of(a);
  if (block != gd.block_of(b) || block >= gd.spec().gl_blocks.size() ||
      a == b) {
    throw InvalidInput("root_action: not a root");
  }
  const std::size_t off = gd.block_offset(block);
  const std::size_t la = a - off, lb = b - off;
  const Coordinate& c = ws.coordinates().at(coordinate);
  const Summand& s = ws.module().summands.at(c.summand);
  auto at = [&](std::size_t q, std::size_t p) {
    return ws.coordinate_index(c.summand, c.copy, q, p);
  };

  std::vector<std::pair<std::size_t, Integer>> out;
  switch (s.kind) {
    case SummandKind::torus_char:
      break;
    case SummandKind::std_rep:
      if (s.block == block && c.q == lb) out.emplace_back(at(la, 0), 1);
      break;
    case SummandKind::dual_std:
      if (s.block == block && c.q == la) out.emplace_back(at(lb, 0), -1);
      break;
    case SummandKind::hom:
      if (s.dst == block && c.q == lb) out.emplace_back(at(la, c.p), 1);
      if (s.src == block && c.p == la) out.emplace_back(at(c.q, lb), -1);
      break;
  }
  return out;
}

std::vector<std::size_t> column_permutation(const GroupData& gd,
                                            const WeightSystem& ws,
                                            const WeylElement& w) {
  std::vector<std::size_t> perm(ws.num_columns());
  for (std::size_t i = 0; i < ws.num_columns(); ++i) {
    auto j = ws.column_of(gd.apply(w, ws.column(i).weight));
    if (!j) {
      throw InternalError("weight system is not Weyl-stable at column " +
                          std::to_string(i));
    }
    perm[i] = *j;
  }
  return perm;
}

bool root_preserves(const GroupData& gd, const WeightSystem& ws,
                    std::size_t a, std::size_t b, const Support& support) {
  std::vector<bool> in_support(ws.num_columns(), false);
  for (auto i : support) in_support.at(i) = true;
  for (std::size_t c = 0; c < ws.dim(); ++c) {
    if (!in_support[ws.coordinates()[c].column]) continue;
    for (const auto& [img, coef] : root_action(gd, ws, a, b, c)) {
      if (!in_support[ws.coordinates()[img].column]) return false;
    }
  }
  return true;
}

StabilizerDims stabilizer_dims(const GroupData& gd, const WeightSystem& ws,
                               const Cocharacter& lambda,
                               const Support& support) {
  const std::size_t rank = gd.rank();
  if (lambda.coords.size() != rank) {
    throw DimensionMismatch("stabilizer_dims: cocharacter length");
  }
  std::vector<bool> in_support(ws.num_columns(), false);
  for (auto i : support) in_support.at(i) = true;
  std::vector<bool> in_e(ws.dim(), false);
  for (std::size_t c = 0; c < ws.dim(); ++c) {
    in_e[c] = in_support[ws.coordinates()[c].column];
  }

  StabilizerDims out{rank, rank, 0};
  std::vector<std::pair<std::size_t, std::size_t>> roots;
  for (const auto& r : gd.positive_roots()) {
    roots.emplace_back(r.a, r.b);
    roots.emplace_back(r.b, r.a);
  }

  for (auto [a, b] : roots) {
    LatVec alpha = zero_vec(rank);
    alpha[a] = 1;
    alpha[b] = -1;
    if (dot(alpha, lambda.coords) >= 0) ++out.dim_parabolic;
    if (root_preserves(gd, ws, a, b, support)) ++out.dim_stab_lie;
  }

  // dim G.E = dim E + rank of {X e mod E : X root vector} at a generic e.
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<long> dist(1, 1L << 20);
  std::vector<Integer> point(ws.dim(), Integer(0));
  for (std::size_t c = 0; c < ws.dim(); ++c) {
    if (in_e[c]) point[c] = dist(rng);
  }
  std::vector<std::size_t> outside;
  std::vector<std::size_t> position(ws.dim(), 0);
  for (std::size_t c = 0; c < ws.dim(); ++c) {
    if (!in_e[c]) {
      position[c] = outside.size();
      outside.push_back(c);
    }
  }
  std::vector<LatVec> images;
  for (auto [a, b] : roots) {
    LatVec v = zero_vec(outside.size());
    for (std::size_t c = 0; c < ws.dim(); ++c) {
      if (!in_e[c]) continue;
      for (const auto& [img, coef] : root_action(gd, ws, a, b, c)) {
        if (!in_e[img]) v[position[img]] += coef * point[c];
      }
    }
    if (!is_zero(v)) images.push_back(std::move(v));
  }
  const std::size_t tangent = linalg::rank(images, outside.size());
  out.codim_orbit = outside.size() - tangent;
  return out;
}

}  // namespace gitfan
