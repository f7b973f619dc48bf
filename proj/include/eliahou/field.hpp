#pragma once

#include <gmpxx.h>

#include <string>

namespace eliahou {

using Scalar = mpq_class;

// Coefficient field: exact rationals, or Z/p stored as canonical residues in [0, p).
// Every value handed out by the arithmetic members is already normalized.
class Field {
 public:
  static Field rational() { return Field(); }
  static Field prime(const mpz_class& p);

  // "rational" or "prime:<p>"
  static Field parse(const std::string& text);

  bool is_rational() const { return characteristic_ == 0; }
  const mpz_class& characteristic() const { return characteristic_; }

  Scalar reduce(const Scalar& x) const;
  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar from_int(long v) const { return reduce(Scalar(v)); }
  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.characteristic_ == b.characteristic_; }

 private:
  Field() = default;
  mpz_class characteristic_ = 0;
};

// "p/q" (or "p" when q = 1); parsing accepts both spellings.
std::string scalar_to_string(const Scalar& x);
Scalar scalar_from_string(const std::string& text);

}  // namespace eliahou
