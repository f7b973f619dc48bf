#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace eliahou {

using Exponent = std::int64_t;

// x^alpha, stored as its exponent vector. Ordering (operator<=>) is plain
// lexicographic on exponents and only serves as a container key; use
// TermOrder for the algebraic order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  static Monomial unit(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return exps_.size(); }
  const std::vector<Exponent>& exponents() const { return exps_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent total_degree() const;
  bool is_unit() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Precondition: divides(other, *this).
  Monomial operator/(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  // x1^2*x4 style; "1" for the unit.
  std::string to_string() const;

 private:
  std::vector<Exponent> exps_;
};

Monomial gcd(const Monomial& a, const Monomial& b);

class TermOrder {
 public:
  enum class Kind { DegRevLex, Lex };

  TermOrder() = default;
  explicit TermOrder(Kind kind) : kind_(kind) {}
  static TermOrder parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::string name() const { return kind_ == Kind::Lex ? "lex" : "degrevlex"; }

  // Variables ranked x1 > x2 > ... > xr.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  Kind kind_ = Kind::DegRevLex;
};

// S-degrees live in Z^d.
using SDegree = std::vector<mpz_class>;

SDegree zero_degree(std::size_t dim);
SDegree operator+(const SDegree& a, const SDegree& b);
SDegree operator-(const SDegree& a, const SDegree& b);
std::string degree_to_string(const SDegree& m);
// "52,8" -> (52, 8)
SDegree parse_degree(const std::string& text);

}  // namespace eliahou
