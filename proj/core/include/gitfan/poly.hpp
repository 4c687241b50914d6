#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gitfan/arith.hpp"

namespace gitfan {

using Exponent = std::vector<unsigned>;

/// Sparse multivariate polynomial with rational coefficients over a fixed
/// number of variables t1..tn. Terms are kept in lexicographic exponent
/// order (t1 > t2 > ...); zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Exponent, Rational>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(Exponent e, const Rational& c = 1);
  /// The linear form sum_i w_i t_i.
  static Poly linear_form(const LatVec& w);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Poly homogeneous_part(unsigned d) const;

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  /// Lexicographically leading term. Requires a nonzero polynomial.
  const std::pair<const Exponent, Rational>& leading_term() const;

  /// Renames variables: t_i -> t_{perm[i]}.
  Poly permuted(std::span<const std::size_t> perm) const;

  /// Exact division. Throws InternalError when the divisor does not divide.
  Poly divide_exact(const Poly& divisor) const;

  /// Quotient and remainder of the lexicographic division algorithm.
  std::pair<Poly, Poly> divide(const Poly& divisor) const;

  Poly pow(unsigned k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Human-readable form such as "t1^2 - t1*t2 + 1/2*t3".
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace gitfan
