#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gitfan {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer lattice vector. Used for characters, cocharacters, rays and
/// facet normals; the pairing between the character and cocharacter
/// lattices is the standard dot product.
using LatVec = std::vector<Integer>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Raised when an exactness invariant fails (e.g. a nonzero remainder in a
/// division that is known to be exact). Never expected.
class InternalError : public Error {
 public:
  using Error::Error;
};

LatVec make_vec(std::initializer_list<long> entries);
LatVec zero_vec(std::size_t n);
LatVec unit_vec(std::size_t n, std::size_t i);

Integer dot(const LatVec& a, const LatVec& b);
bool is_zero(const LatVec& v);

/// Divides by the gcd of the entries. Zero stays zero.
LatVec primitive(LatVec v);

/// Scales a rational vector to the primitive integer vector in the same
/// direction.
LatVec primitive(const std::vector<Rational>& v);

LatVec negate(LatVec v);
LatVec add(const LatVec& a, const LatVec& b);
LatVec scale(const LatVec& v, const Integer& k);

/// Flips the sign so that the first nonzero entry is positive.
LatVec sign_normalized(LatVec v);

std::string to_string(const LatVec& v);

}  // namespace gitfan
