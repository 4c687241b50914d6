#include "gitfan/arith.hpp"

#include <sstream>

namespace gitfan {

LatVec make_vec(std::initializer_list<long> entries) {
  LatVec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

LatVec zero_vec(std::size_t n) { return LatVec(n, Integer(0)); }

LatVec unit_vec(std::size_t n, std::size_t i) {
  LatVec v = zero_vec(n);
  v.at(i) = 1;
  return v;
}

Integer dot(const LatVec& a, const LatVec& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("dot: lengths " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()));
  }
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const LatVec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

LatVec primitive(LatVec v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

LatVec primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
  LatVec out;
  out.reserve(v.size());
  for (const auto& q : v) {
    Rational s = q * Rational(l);
    out.push_back(s.get_num());
  }
  return primitive(std::move(out));
}

LatVec negate(LatVec v) {
  for (auto& x : v) x = -x;
  return v;
}

LatVec add(const LatVec& a, const LatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: length mismatch");
  LatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

LatVec scale(const LatVec& v, const Integer& k) {
  LatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * k;
  return out;
}

LatVec sign_normalized(LatVec v) {
  for (const auto& x : v) {
    if (x > 0) return v;
    if (x < 0) return negate(std::move(v));
  }
  return v;
}

std::string to_string(const LatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace gitfan
