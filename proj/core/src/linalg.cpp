#include "gitfan/linalg.hpp"

#include <utility>

namespace gitfan::linalg {
namespace {

std::vector<RatRow> to_rational(std::span<const LatVec> rows,
                                std::size_t ncols) {
  std::vector<RatRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != ncols) {
      throw DimensionMismatch("linalg: row of length " +
                              std::to_string(r.size()) + ", expected " +
                              std::to_string(ncols));
    }
    RatRow q(ncols);
    for (std::size_t j = 0; j < ncols; ++j) q[j] = r[j];
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

Echelon rref(std::vector<RatRow> m, std::size_t ncols) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    e.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  e.rows = std::move(m);
  return e;
}

Echelon rref(std::span<const LatVec> rows, std::size_t ncols) {
  return rref(to_rational(rows, ncols), ncols);
}

std::size_t rank(std::span<const LatVec> rows, std::size_t ncols) {
  if (rows.empty()) return 0;
  return rref(rows, ncols).rows.size();
}

std::vector<LatVec> row_space_basis(std::span<const LatVec> rows,
                                    std::size_t ncols) {
  std::vector<LatVec> out;
  for (const auto& r : rref(rows, ncols).rows) out.push_back(primitive(r));
  return out;
}

std::vector<LatVec> nullspace(std::span<const LatVec> rows,
                              std::size_t ncols) {
  Echelon e = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<LatVec> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatRow v(ncols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      v[e.pivots[i]] = -e.rows[i][f];
    }
    basis.push_back(primitive(v));
  }
  return basis;
}

LatVec project_out(const LatVec& v, std::span<const LatVec> basis) {
  if (basis.empty()) return primitive(v);
  const std::size_t k = basis.size();
  const std::size_t n = v.size();
  // Gram system G c = B v, augmented.
  std::vector<RatRow> aug(k, RatRow(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = dot(basis[i], basis[j]);
    aug[i][k] = dot(basis[i], v);
  }
  Echelon e = rref(std::move(aug), k + 1);
  if (e.rows.size() != k) {
    throw InternalError("project_out: basis is linearly dependent");
  }
  RatRow out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = v[j];
  for (std::size_t i = 0; i < k; ++i) {
    const Rational& c = e.rows[i][k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] -= c * basis[i][j];
  }
  return primitive(out);
}

std::optional<std::vector<Rational>> solve_independent(
    std::span<const LatVec> columns, const LatVec& target) {
  const std::size_t k = columns.size();
  const std::size_t n = target.size();
  std::vector<RatRow> aug(n, RatRow(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j].at(i);
    aug[i][k] = target[i];
  }
  Echelon e = rref(std::move(aug), k + 1);
  std::vector<Rational> c(k, Rational(0));
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == k) return std::nullopt;
    c[e.pivots[i]] = e.rows[i][k];
  }
  return c;
}

}  // namespace gitfan::linalg
