#include "gitfan/poly.hpp"

#include <numeric>
#include <sstream>

namespace gitfan {
namespace {

unsigned total(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(std::move(e));
}

Poly Poly::monomial(Exponent e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

Poly Poly::linear_form(const LatVec& w) {
  Poly p(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    Exponent e(w.size(), 0);
    e[i] = 1;
    p.add_term(e, Rational(w[i]));
  }
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total(e)));
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = total(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (total(e) != d) return false;
  }
  return true;
}

Poly Poly::homogeneous_part(unsigned d) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (total(e) == d) out.terms_.emplace(e, c);
  }
  return out;
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw DimensionMismatch("Poly: exponent length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const std::pair<const Exponent, Rational>& Poly::leading_term() const {
  if (terms_.empty()) throw InternalError("leading_term of zero polynomial");
  return *terms_.rbegin();
}

Poly Poly::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != nvars_) throw DimensionMismatch("Poly::permuted");
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) f[perm[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::pair<Poly, Poly> Poly::divide(const Poly& divisor) const {
  if (divisor.is_zero()) throw InvalidInput("division by zero polynomial");
  if (divisor.nvars_ != nvars_) throw DimensionMismatch("Poly::divide");
  Poly q(nvars_), r(nvars_), f = *this;
  const auto& [lead_e, lead_c] = divisor.leading_term();
  while (!f.is_zero()) {
    const auto [fe, fc] = f.leading_term();
    if (divides(lead_e, fe)) {
      Exponent m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = fe[i] - lead_e[i];
      Rational c = fc / lead_c;
      q.add_term(m, c);
      for (const auto& [de, dc] : divisor.terms_) {
        Exponent s(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) s[i] = de[i] + m[i];
        f.add_term(s, -c * dc);
      }
    } else {
      r.add_term(fe, fc);
      f.terms_.erase(fe);
    }
  }
  return {std::move(q), std::move(r)};
}

Poly Poly::divide_exact(const Poly& divisor) const {
  auto [q, r] = divide(divisor);
  if (!r.is_zero()) {
    throw InternalError("divide_exact: nonzero remainder " + r.to_string());
  }
  return q;
}

Poly Poly::pow(unsigned k) const {
  Poly out = constant(nvars_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1u) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("Poly::operator+");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("Poly::operator-");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("Poly::operator*");
  Poly out(a.nvars_);
  Exponent s(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = ea[i] + eb[i];
      out.add_term(s, ca * cb);
    }
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant_term = total(e) == 0;
    if (mag != 1 || constant_term) {
      os << mag.get_str();
      if (!constant_term) os << '*';
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << 't' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

}  // namespace gitfan
